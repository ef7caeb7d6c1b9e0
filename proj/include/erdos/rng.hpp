#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace erdos {

std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic random stream for one trial of a seeded run.
///
/// Trial t of seed s draws from std::mt19937_64 seeded with
/// splitmix64(s ^ splitmix64(t + 0x9e3779b97f4a7c15)). Raw 64-bit words are consumed
/// least-significant bit first; bit() takes one bit, below(k) takes ceil(log2 k) bits per
/// attempt and rejects values >= k. The output is identical on every platform.
class TrialStream {
 public:
  static constexpr std::string_view kName = "mt19937_64/splitmix64/v1";

  TrialStream(std::uint64_t seed, std::uint64_t trial);

  bool bit();
  /// Uniform integer in [0, k), k >= 1.
  std::uint32_t below(std::uint32_t k);
  /// Uniform integer in [0, k) for 64-bit k >= 1.
  std::uint64_t below64(std::uint64_t k);

 private:
  std::uint64_t take(unsigned bits);

  std::mt19937_64 engine_;
  std::uint64_t buffer_ = 0;
  unsigned available_ = 0;
};

}  // namespace erdos
