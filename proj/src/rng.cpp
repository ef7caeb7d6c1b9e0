#include "erdos/rng.hpp"

#include <bit>

namespace erdos {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

TrialStream::TrialStream(std::uint64_t seed, std::uint64_t trial)
    : engine_(splitmix64(seed ^ splitmix64(trial + 0x9e3779b97f4a7c15ULL))) {}

std::uint64_t TrialStream::take(unsigned bits) {
  if (bits == 0) return 0;
  std::uint64_t out = 0;
  unsigned filled = 0;
  while (filled < bits) {
    if (available_ == 0) {
      buffer_ = engine_();
      available_ = 64;
    }
    const unsigned chunk = std::min(bits - filled, available_);
    const std::uint64_t mask = chunk == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << chunk) - 1;
    out |= (buffer_ & mask) << filled;
    buffer_ = chunk == 64 ? 0 : buffer_ >> chunk;
    available_ -= chunk;
    filled += chunk;
  }
  return out;
}

bool TrialStream::bit() { return take(1) != 0; }

std::uint32_t TrialStream::below(std::uint32_t k) { return static_cast<std::uint32_t>(below64(k)); }

std::uint64_t TrialStream::below64(std::uint64_t k) {
  if (k <= 1) return 0;
  const unsigned bits = static_cast<unsigned>(std::bit_width(k - 1));
  while (true) {
    const std::uint64_t v = take(bits);
    if (v < k) return v;
  }
}

}  // namespace erdos
