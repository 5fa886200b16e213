#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace latcount {

using Rational = mpq_class;
using Integer = mpz_class;
using QVec = std::vector<Rational>;

// Parses "p", "p/q" or a decimal-free signed integer string. Throws
// Error(SyntaxError) on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Canonical "p/q" (or "p" when the denominator is 1).
std::string rational_to_string(const Rational& q);

// Correctly-rounded (to ~0.5 ulp via 256-bit intermediate) double value.
double to_double(const Rational& q);

// sqrt of a nonnegative rational, rounded to double through a 256-bit float.
double sqrt_to_double(const Rational& q);

Integer floor_q(const Rational& q);
Integer ceil_q(const Rational& q);
// Nearest integer, ties toward +infinity (floor(q + 1/2)).
Integer round_q(const Rational& q);

// Smallest integer s >= 0 with s*s >= q. Requires q >= 0.
Integer isqrt_ceil(const Rational& q);

Rational pow_q(const Rational& base, unsigned e);

inline int sign_q(const Rational& q) { return sgn(q); }

// Closed rational interval [lo, hi]; used for exact branch-and-prune.
struct QIv {
    Rational lo, hi;

    QIv() = default;
    QIv(const Rational& a, const Rational& b) : lo(a), hi(b) {}
    static QIv point(const Rational& v) { return QIv(v, v); }

    bool is_point() const { return lo == hi; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
};

QIv iv_add(const QIv& a, const QIv& b);
QIv iv_mul(const QIv& a, const QIv& b);
QIv iv_scale(const QIv& a, const Rational& c);
QIv iv_pow(const QIv& a, unsigned e);

} // namespace latcount
