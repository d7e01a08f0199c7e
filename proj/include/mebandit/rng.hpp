#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace mebandit {

// All randomness in the library flows through explicitly passed engines of
// this type. libstdc++ distributions are deterministic for a given engine
// state, so (config, seed) fixes every draw.
using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Stable 64-bit FNV-1a; std::hash is not stable across standard libraries.
std::uint64_t fnv1a64(std::string_view text) noexcept;

// Seed for a named substream of a master seed. Distinct names give
// statistically independent streams; adding a new name never perturbs
// existing ones.
std::uint64_t derive_seed(std::uint64_t master, std::string_view stream) noexcept;

inline Rng make_stream(std::uint64_t master, std::string_view stream) {
  return Rng(derive_seed(master, stream));
}

inline double uniform(Rng& rng, double low, double high) {
  return std::uniform_real_distribution<double>(low, high)(rng);
}

inline double standard_normal(Rng& rng) {
  return std::normal_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace mebandit
