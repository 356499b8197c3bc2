#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace encircle {

/// Seed for every randomized routine; equal seeds give equal streams.
struct Seed {
  std::uint64_t value = 0;
};

using Stream = std::mt19937_64;

inline Stream make_stream(Seed seed) { return Stream(seed.value); }

/// Deterministic child seed for sub-stream `index` of `root` (splitmix64 finalizer).
inline Seed split_seed(Seed root, std::uint64_t index) {
  std::uint64_t z = root.value + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return {z ^ (z >> 31)};
}

// The standard distributions are not bit-exact across library vendors, so the
// two draws below are spelled out.

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Stream& stream) {
  return static_cast<double>(stream() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound), bound > 0. Rejection sampling, no modulo bias.
inline std::uint64_t uniform_below(Stream& stream, std::uint64_t bound) {
  const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
  std::uint64_t draw;
  do {
    draw = stream();
  } while (draw >= limit);
  return draw % bound;
}

template <typename T>
void shuffle(std::vector<T>& items, Stream& stream) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(stream, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace encircle
