#pragma once

#include "latcount/linalg.hpp"
#include "latcount/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace latcount {

// Sparse multivariate polynomial over Q in parameter variables T1..Tm and
// space variables x1..xn. Exponent vectors have length m+n (T block first);
// zero coefficients are never stored.
class Polynomial {
public:
    using Expo = std::vector<unsigned>;

    Polynomial() = default;
    Polynomial(int numParams, int numVars) : m_(numParams), n_(numVars) {}

    static Polynomial constant(int m, int n, const Rational& c);
    static Polynomial param(int m, int n, int k);    // T_k, 1-based
    static Polynomial variable(int m, int n, int k); // x_k, 1-based

    int num_params() const { return m_; }
    int num_vars() const { return n_; }
    const std::map<Expo, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    unsigned total_degree() const;

    void add_term(const Expo& e, const Rational& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& o) const {
        return m_ == o.m_ && n_ == o.n_ && terms_ == o.terms_;
    }

    // Exact evaluation; t has length m, x length n.
    Rational eval(const QVec& t, const QVec& x) const;

    // Substitutes exact parameter values; result has num_params() == 0.
    Polynomial fix_params(const QVec& t) const;

    // The following require num_params() == 0.

    // Interval hull of the value over a box (one interval per variable).
    QIv eval_interval(const std::vector<QIv>& box) const;

    // Substitutes x_{numVars} = value; result has one variable fewer.
    Polynomial substitute_last_var(const Rational& value) const;

    // x = a + t*d; returns dense univariate coefficients (index = degree).
    std::vector<Rational> restrict_line(const QVec& a, const QVec& d) const;

    // x = M*y for an n x n rational matrix M (exact change of variables).
    Polynomial substitute_vars_linear(const QMatrix& M) const;

    std::string to_string() const;

private:
    int m_ = 0, n_ = 0;
    std::map<Expo, Rational> terms_;
};

// Dense univariate polynomial over Q; coefficient i belongs to t^i.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rational& v);

    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Rational& leading() const { return c_.back(); }

    Rational eval(const Rational& t) const;
    int sign_at(const Rational& t) const { return sgn(eval(t)); }

    UniPoly derivative() const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;

    // Euclidean remainder with rational arithmetic.
    UniPoly rem(const UniPoly& divisor) const;
    // Exact division; throws InternalError when not divisible.
    UniPoly divide_exact(const UniPoly& divisor) const;

    // Positive-scalar normalization (divide by |content|); preserves signs.
    UniPoly normalized_positive() const;

    static UniPoly gcd(const UniPoly& a, const UniPoly& b);
    UniPoly squarefree_part() const;

    // Strict upper bound on absolute values of real roots (Cauchy).
    Rational root_bound() const;

private:
    void trim();

    std::vector<Rational> c_;
};

// Signed-remainder (Sturm) sequence of a squarefree polynomial.
class SturmChain {
public:
    explicit SturmChain(const UniPoly& squarefree);

    const std::vector<UniPoly>& chain() const { return chain_; }

    int sign_variations_at(const Rational& x) const;
    int sign_variations_at_neg_inf() const;
    int sign_variations_at_pos_inf() const;

    // Number of distinct real roots in the open interval (a, b); requires
    // that neither endpoint is a root.
    int count_roots(const Rational& a, const Rational& b) const;
    int count_all_roots() const;

private:
    std::vector<UniPoly> chain_;
};

// Isolating interval for one distinct real root. exact == true means the
// root is rational and equals lo == hi.
struct RootInterval {
    Rational lo, hi;
    bool exact = false;
};

// Disjoint isolating intervals, one per distinct real root, sorted.
std::vector<RootInterval> isolate_roots(const UniPoly& p);

} // namespace latcount
