#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace hreg {

// Bit vector over 64-bit words, sized at construction. Used for GF(2)
// incidence rows and edge-subset bookkeeping.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  int size() const { return bits_; }

  bool test(int i) const {
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) { words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  // Index of the lowest set bit, -1 if none.
  int find_first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  Bitset& operator^=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }

  bool operator==(const Bitset&) const = default;

  std::vector<int> ones() const {
    std::vector<int> out;
    for (int i = 0; i < bits_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

private:
  int bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace hreg
