#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace vmg {

// splitmix64 finalizer. Used to derive independent child seeds from a root
// seed plus structured context (layout index, background id, variant, ...)
// without correlated streams.
inline std::uint64_t mix_seed(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return mix_seed(a ^ mix_seed(b));
}

template <typename... Rest>
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c, Rest... rest) {
  return mix_seed(mix_seed(a, b), c, rest...);
}

// FNV-1a over a short tag, for mixing string context (e.g. layout ids) into
// seed derivation.
inline std::uint64_t tag_seed(std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(mix_seed(seed)); }

}  // namespace vmg
