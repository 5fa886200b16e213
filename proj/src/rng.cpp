#include "latcount/rng.hpp"

#include <cmath>

namespace latcount {

namespace {
std::uint64_t splitmix_step(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
} // namespace

Rng Rng::substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    std::uint64_t x = seed;
    std::uint64_t a = splitmix_step(x);
    x ^= stream * 0x2545f4914f6cdd1dULL;
    std::uint64_t b = splitmix_step(x);
    x ^= index * 0x9e3779b97f4a7c15ULL;
    std::uint64_t c = splitmix_step(x);
    return Rng(a ^ (b + 0x632be59bd9b4e019ULL) ^ (c * 0xff51afd7ed558ccdULL | 1));
}

std::uint64_t Rng::next_u64() { return splitmix_step(state_); }

double Rng::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

Rational Rng::next_rational(const Rational& lo, const Rational& hi) {
    std::uint64_t bits = next_u64() >> 11;
    Rational frac(Integer(static_cast<unsigned long>(bits)), Integer(1) << 53);
    frac.canonicalize();
    return lo + frac * (hi - lo);
}

double Rng::next_gaussian() {
    // Box-Muller; rejects u1 == 0.
    double u1 = 0.0;
    do {
        u1 = next_double();
    } while (u1 <= 0.0);
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

long Rng::next_int(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next_u64() % span);
}

} // namespace latcount
