#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace hreg {

using Rng = std::mt19937_64;

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Named-stream seed splitter: every component draws its randomness from
// derive_seed(root, "component-name"), so adding a consumer never perturbs
// the streams of the others.
inline std::uint64_t derive_seed(std::uint64_t root, std::string_view stream,
                                 std::uint64_t index = 0) {
  std::uint64_t h = mix64(root ^ 0x5bd1e9955bd1e995ull);
  for (char c : stream) h = mix64(h ^ static_cast<unsigned char>(c));
  return mix64(h ^ mix64(index));
}

inline Rng make_rng(std::uint64_t root, std::string_view stream, std::uint64_t index = 0) {
  return Rng(derive_seed(root, stream, index));
}

// Uniform in [lo, hi], inclusive.
inline int uniform_int(Rng& rng, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(rng);
}

}  // namespace hreg
