#include "erdos/bitset.hpp"

namespace erdos {

Bitset::Bitset(std::size_t size, std::initializer_list<std::size_t> members) : Bitset(size) {
  for (std::size_t i : members) set(i);
}

Bitset Bitset::full(std::size_t size) {
  Bitset b(size);
  for (auto& w : b.words_) w = ~std::uint64_t{0};
  b.trim();
  return b;
}

std::size_t Bitset::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bitset::none() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

std::size_t Bitset::find_next(std::size_t from) const noexcept {
  if (from >= size_) return npos;
  std::size_t w = from >> 6;
  std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (cur != 0) return (w << 6) + static_cast<std::size_t>(std::countr_zero(cur));
    if (++w == words_.size()) return npos;
    cur = words_[w];
  }
}

std::vector<std::size_t> Bitset::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = find_first(); i != npos; i = find_next(i + 1)) out.push_back(i);
  return out;
}

Bitset& Bitset::operator&=(const Bitset& other) noexcept {
  for (std::size_t w = 0; w < words_.size() && w < other.words_.size(); ++w) words_[w] &= other.words_[w];
  for (std::size_t w = other.words_.size(); w < words_.size(); ++w) words_[w] = 0;
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) noexcept {
  for (std::size_t w = 0; w < words_.size() && w < other.words_.size(); ++w) words_[w] |= other.words_[w];
  trim();
  return *this;
}

Bitset Bitset::operator~() const {
  Bitset out = *this;
  for (auto& w : out.words_) w = ~w;
  out.trim();
  return out;
}

void Bitset::trim() noexcept {
  if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
}

}  // namespace erdos
