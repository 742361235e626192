#ifndef MTDCHAIN_RANDOM_HPP
#define MTDCHAIN_RANDOM_HPP

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace mtdchain {

// 64-bit Mersenne Twister. Its output stream is fixed by the C++ standard, so
// seeded runs replay bit-identically across compilers. Only raw engine output
// is consumed; std::*_distribution is implementation-defined and never used.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) built from the top 53 bits of one engine draw.
double uniform_unit(Rng& rng);

/// Uniform integer in [0, n) by rejection sampling. n must be > 0.
std::uint64_t uniform_index(Rng& rng, std::uint64_t n);

/// Index i drawn with probability probs[i] / sum(probs). Consumes exactly one
/// engine draw. Zero-probability entries are never returned.
std::size_t sample_categorical(std::span<const double> probs, Rng& rng);

std::uint64_t splitmix64(std::uint64_t x);

/// FNV-1a hash, used to turn a team name into a stream key.
std::uint64_t fnv1a64(std::string_view text);

/// Stream seed for one (team, k, repetition) unit:
///   s = splitmix64(seed); s = splitmix64(s ^ team_key);
///   s = splitmix64(s ^ k); s = splitmix64(s ^ repetition)
/// k = 0 is reserved for the evaluation-position stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t team_key, std::uint64_t k,
                          std::uint64_t repetition);

}  // namespace mtdchain

#endif  // MTDCHAIN_RANDOM_HPP
