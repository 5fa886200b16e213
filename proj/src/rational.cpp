#include "latcount/rational.hpp"

#include "latcount/errors.hpp"

#include <algorithm>
#include <cctype>

namespace latcount {

const char* error_class_name(ErrorClass cls) {
    switch (cls) {
        case ErrorClass::SyntaxError: return "SyntaxError";
        case ErrorClass::ArityError: return "ArityError";
        case ErrorClass::DimensionMismatch: return "DimensionMismatch";
        case ErrorClass::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorClass::BudgetExceeded: return "BudgetExceeded";
        case ErrorClass::BoundViolation: return "BoundViolation";
        case ErrorClass::DegenerateLine: return "DegenerateLine";
        case ErrorClass::InternalError: return "InternalError";
    }
    return "InternalError";
}

Rational parse_rational(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    if (s.empty()) raise(ErrorClass::SyntaxError, "empty rational literal");
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_int(s)) raise(ErrorClass::SyntaxError, "bad rational literal '" + text + "'");
        return Rational(Integer(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) raise(ErrorClass::SyntaxError, "bad rational literal '" + text + "'");
    Integer d(den);
    if (d == 0) raise(ErrorClass::SyntaxError, "zero denominator in '" + text + "'");
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) {
    mpf_class f(q, 256);
    return f.get_d();
}

double sqrt_to_double(const Rational& q) {
    if (sgn(q) < 0) raise(ErrorClass::InternalError, "sqrt of negative rational");
    mpf_class f(q, 256);
    mpf_class r(0, 256);
    mpf_sqrt(r.get_mpf_t(), f.get_mpf_t());
    return r.get_d();
}

Integer floor_q(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Integer ceil_q(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Integer round_q(const Rational& q) { return floor_q(q + Rational(1, 2)); }

Integer isqrt_ceil(const Rational& q) {
    if (sgn(q) < 0) raise(ErrorClass::InternalError, "isqrt of negative rational");
    Integer fl = floor_q(q);
    Integer s;
    mpz_sqrt(s.get_mpz_t(), fl.get_mpz_t());
    while (Rational(s * s) < q) ++s;
    return s;
}

Rational pow_q(const Rational& base, unsigned e) {
    Rational r(1);
    Rational b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

QIv iv_add(const QIv& a, const QIv& b) { return QIv(a.lo + b.lo, a.hi + b.hi); }

QIv iv_mul(const QIv& a, const QIv& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return QIv(lo, hi);
}

QIv iv_scale(const QIv& a, const Rational& c) {
    if (sgn(c) >= 0) return QIv(a.lo * c, a.hi * c);
    return QIv(a.hi * c, a.lo * c);
}

QIv iv_pow(const QIv& a, unsigned e) {
    if (e == 0) return QIv(Rational(1), Rational(1));
    if (e == 1) return a;
    if (e % 2 == 1) {
        return QIv(pow_q(a.lo, e), pow_q(a.hi, e));
    }
    // even power: minimum at zero if the interval straddles it
    Rational plo = pow_q(a.lo, e), phi = pow_q(a.hi, e);
    Rational hi = std::max(plo, phi);
    if (a.contains_zero()) return QIv(Rational(0), hi);
    return QIv(std::min(plo, phi), hi);
}

} // namespace latcount
