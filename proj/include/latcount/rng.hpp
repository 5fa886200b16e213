#pragma once

#include "latcount/rational.hpp"

#include <cstdint>

namespace latcount {

// SplitMix64 generator with substreams keyed by (seed, stream, index).
// Stochastic estimators derive one substream per sample index, so results
// are identical however the sample loop is chunked or parallelized.
class Rng {
public:
    explicit Rng(std::uint64_t state) : state_(state) {}

    static Rng substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

    std::uint64_t next_u64();

    // Uniform in [0,1) with 53 random bits.
    double next_double();

    // Uniform dyadic rational in [lo, hi], exact arithmetic from 53 bits.
    Rational next_rational(const Rational& lo, const Rational& hi);

    // Standard normal via Box-Muller (one value per call).
    double next_gaussian();

    // Uniform integer in [lo, hi] inclusive.
    long next_int(long lo, long hi);

private:
    std::uint64_t state_;
};

// Stream ids; fixed constants so reports can name their source stream.
namespace streams {
constexpr std::uint64_t kMonteCarlo = 0x6d63u;      // "mc"
constexpr std::uint64_t kProjection = 0x706au;      // "pj"
constexpr std::uint64_t kRotation = 0x726fu;        // "ro"
constexpr std::uint64_t kLines = 0x6c6eu;           // "ln"
constexpr std::uint64_t kShellCheck = 0x7368u;      // "sh"
constexpr std::uint64_t kCorpus = 0x6370u;          // "cp"
} // namespace streams

} // namespace latcount
