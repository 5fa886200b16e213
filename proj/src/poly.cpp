#include "latcount/poly.hpp"

#include "latcount/errors.hpp"

#include <algorithm>
#include <sstream>

namespace latcount {

Polynomial Polynomial::constant(int m, int n, const Rational& c) {
    Polynomial p(m, n);
    if (sgn(c) != 0) p.terms_[Expo(m + n, 0)] = c;
    return p;
}

Polynomial Polynomial::param(int m, int n, int k) {
    if (k < 1 || k > m) raise(ErrorClass::ArityError, "parameter index T" + std::to_string(k) + " out of range");
    Polynomial p(m, n);
    Expo e(m + n, 0);
    e[k - 1] = 1;
    p.terms_[e] = 1;
    return p;
}

Polynomial Polynomial::variable(int m, int n, int k) {
    if (k < 1 || k > n) raise(ErrorClass::ArityError, "variable index x" + std::to_string(k) + " out of range");
    Polynomial p(m, n);
    Expo e(m + n, 0);
    e[m + k - 1] = 1;
    p.terms_[e] = 1;
    return p;
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned s = 0;
        for (unsigned v : e) s += v;
        d = std::max(d, s);
    }
    return d;
}

void Polynomial::add_term(const Expo& e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (m_ != o.m_ || n_ != o.n_) raise(ErrorClass::DimensionMismatch, "polynomial arity mismatch in +");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Polynomial r(m_, n_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (m_ != o.m_ || n_ != o.n_) raise(ErrorClass::DimensionMismatch, "polynomial arity mismatch in *");
    Polynomial r(m_, n_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Expo e(e1.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(m_, n_, 1);
    Polynomial b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Rational Polynomial::eval(const QVec& t, const QVec& x) const {
    if (static_cast<int>(t.size()) != m_ || static_cast<int>(x.size()) != n_)
        raise(ErrorClass::DimensionMismatch, "polynomial evaluation arity mismatch");
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < m_; ++i)
            if (e[i]) term *= pow_q(t[i], e[i]);
        for (int j = 0; j < n_; ++j)
            if (e[m_ + j]) term *= pow_q(x[j], e[m_ + j]);
        sum += term;
    }
    return sum;
}

Polynomial Polynomial::fix_params(const QVec& t) const {
    if (static_cast<int>(t.size()) != m_) raise(ErrorClass::DimensionMismatch, "fix_params arity mismatch");
    Polynomial r(0, n_);
    for (const auto& [e, c] : terms_) {
        Rational coeff = c;
        for (int i = 0; i < m_; ++i)
            if (e[i]) coeff *= pow_q(t[i], e[i]);
        Expo xe(e.begin() + m_, e.end());
        r.add_term(xe, coeff);
    }
    return r;
}

QIv Polynomial::eval_interval(const std::vector<QIv>& box) const {
    if (m_ != 0 || static_cast<int>(box.size()) != n_)
        raise(ErrorClass::DimensionMismatch, "eval_interval expects a fiber polynomial");
    QIv sum(Rational(0), Rational(0));
    for (const auto& [e, c] : terms_) {
        QIv term(Rational(1), Rational(1));
        for (int j = 0; j < n_; ++j)
            if (e[j]) term = iv_mul(term, iv_pow(box[j], e[j]));
        sum = iv_add(sum, iv_scale(term, c));
    }
    return sum;
}

Polynomial Polynomial::substitute_last_var(const Rational& value) const {
    if (m_ != 0 || n_ == 0) raise(ErrorClass::DimensionMismatch, "substitute_last_var needs a fiber polynomial");
    Polynomial r(0, n_ - 1);
    for (const auto& [e, c] : terms_) {
        Rational coeff = c;
        if (e[n_ - 1]) coeff *= pow_q(value, e[n_ - 1]);
        Expo xe(e.begin(), e.end() - 1);
        r.add_term(xe, coeff);
    }
    return r;
}

std::vector<Rational> Polynomial::restrict_line(const QVec& a, const QVec& d) const {
    if (m_ != 0) raise(ErrorClass::DimensionMismatch, "restrict_line needs a fiber polynomial");
    if (static_cast<int>(a.size()) != n_ || static_cast<int>(d.size()) != n_)
        raise(ErrorClass::DimensionMismatch, "restrict_line point arity mismatch");
    // per-variable powers of (a_i + d_i t), computed on demand
    std::vector<std::vector<std::vector<Rational>>> powers(n_);
    auto var_power = [&](int i, unsigned e) -> const std::vector<Rational>& {
        auto& cache = powers[i];
        if (cache.empty()) {
            cache.push_back({Rational(1)});                 // (a+dt)^0
            cache.push_back({a[i], d[i]});                  // (a+dt)^1
        }
        while (cache.size() <= e) {
            const auto& prev = cache.back();
            std::vector<Rational> next(prev.size() + 1, Rational(0));
            for (size_t k = 0; k < prev.size(); ++k) {
                next[k] += prev[k] * a[i];
                next[k + 1] += prev[k] * d[i];
            }
            cache.push_back(std::move(next));
        }
        return cache[e];
    };

    std::vector<Rational> out(total_degree() + 1, Rational(0));
    for (const auto& [e, c] : terms_) {
        std::vector<Rational> mono{c};
        for (int i = 0; i < n_; ++i) {
            if (!e[i]) continue;
            const auto& vp = var_power(i, e[i]);
            std::vector<Rational> prod(mono.size() + vp.size() - 1, Rational(0));
            for (size_t p = 0; p < mono.size(); ++p)
                for (size_t q = 0; q < vp.size(); ++q) prod[p + q] += mono[p] * vp[q];
            mono = std::move(prod);
        }
        for (size_t k = 0; k < mono.size(); ++k) out[k] += mono[k];
    }
    while (!out.empty() && sgn(out.back()) == 0) out.pop_back();
    return out;
}

Polynomial Polynomial::substitute_vars_linear(const QMatrix& M) const {
    if (M.rows() != n_ || M.cols() != n_) raise(ErrorClass::DimensionMismatch, "substitution matrix shape");
    // x_i -> sum_k M(i,k) y_k ; T variables pass through.
    std::vector<Polynomial> images(n_);
    for (int i = 0; i < n_; ++i) {
        Polynomial li(m_, n_);
        for (int k = 0; k < n_; ++k) {
            if (sgn(M.at(i, k)) == 0) continue;
            li = li + Polynomial::constant(m_, n_, M.at(i, k)) * Polynomial::variable(m_, n_, k + 1);
        }
        images[i] = li;
    }
    Polynomial r(m_, n_);
    for (const auto& [e, c] : terms_) {
        Polynomial mono(m_, n_);
        Expo te(e.begin(), e.end());
        for (int j = 0; j < n_; ++j) te[m_ + j] = 0;
        mono.add_term(te, c); // keep the T part of the monomial
        for (int j = 0; j < n_; ++j)
            if (e[m_ + j]) mono = mono * images[j].pow(e[m_ + j]);
        r = r + mono;
    }
    return r;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational coeff = c;
        if (first) {
            if (sgn(coeff) < 0) {
                os << "-";
                coeff = -coeff;
            }
            first = false;
        } else {
            os << (sgn(coeff) < 0 ? " - " : " + ");
            coeff = abs(coeff);
        }
        std::vector<std::string> factors;
        for (int i = 0; i < m_; ++i)
            if (e[i]) factors.push_back("T" + std::to_string(i + 1) + (e[i] > 1 ? "^" + std::to_string(e[i]) : ""));
        for (int j = 0; j < n_; ++j)
            if (e[m_ + j])
                factors.push_back("x" + std::to_string(j + 1) + (e[m_ + j] > 1 ? "^" + std::to_string(e[m_ + j]) : ""));
        if (factors.empty()) {
            os << rational_to_string(coeff);
        } else {
            if (coeff != 1) os << rational_to_string(coeff) << "*";
            for (size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
        }
    }
    return os.str();
}

// --- UniPoly ---

UniPoly UniPoly::constant(const Rational& v) {
    if (sgn(v) == 0) return UniPoly();
    return UniPoly({v});
}

void UniPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UniPoly::eval(const Rational& t) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
    return r;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::rem(const UniPoly& divisor) const {
    if (divisor.is_zero()) raise(ErrorClass::InternalError, "division by zero polynomial");
    std::vector<Rational> r = c_;
    int dd = divisor.degree();
    while (static_cast<int>(r.size()) - 1 >= dd) {
        while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
        if (static_cast<int>(r.size()) - 1 < dd) break;
        Rational f = r.back() / divisor.leading();
        size_t shift = r.size() - 1 - dd;
        for (int i = 0; i <= dd; ++i) r[shift + i] -= f * divisor.coeffs()[i];
        r.pop_back();
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::divide_exact(const UniPoly& divisor) const {
    if (divisor.is_zero()) raise(ErrorClass::InternalError, "division by zero polynomial");
    if (is_zero()) return UniPoly();
    std::vector<Rational> r = c_;
    int dd = divisor.degree();
    int dq = degree() - dd;
    if (dq < 0) raise(ErrorClass::InternalError, "inexact polynomial division");
    std::vector<Rational> q(dq + 1, Rational(0));
    for (int k = dq; k >= 0; --k) {
        Rational f = r[k + dd] / divisor.leading();
        q[k] = f;
        for (int i = 0; i <= dd; ++i) r[k + i] -= f * divisor.coeffs()[i];
    }
    for (const auto& coeff : r)
        if (sgn(coeff) != 0) raise(ErrorClass::InternalError, "inexact polynomial division");
    return UniPoly(std::move(q));
}

UniPoly UniPoly::normalized_positive() const {
    if (is_zero()) return *this;
    // divide by |leading| so coefficients stay modest; sign pattern intact
    Rational f = abs(c_.back());
    std::vector<Rational> r = c_;
    for (auto& coeff : r) coeff /= f;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly f = a, g = b;
    while (!g.is_zero()) {
        UniPoly r = f.rem(g).normalized_positive();
        f = g;
        g = r;
    }
    if (f.is_zero()) return f;
    // monic for canonicity
    std::vector<Rational> r = f.coeffs();
    Rational lead = r.back();
    for (auto& coeff : r) coeff /= lead;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::squarefree_part() const {
    if (is_zero() || degree() == 0) return *this;
    UniPoly g = gcd(*this, derivative());
    if (g.degree() == 0) return *this;
    return divide_exact(g);
}

Rational UniPoly::root_bound() const {
    if (is_zero()) raise(ErrorClass::InternalError, "root bound of zero polynomial");
    Rational maxratio(0);
    for (size_t i = 0; i + 1 < c_.size(); ++i) maxratio = std::max(maxratio, abs(c_[i] / c_.back()));
    return Rational(1) + maxratio;
}

// --- SturmChain ---

SturmChain::SturmChain(const UniPoly& p) {
    chain_.push_back(p.normalized_positive());
    if (p.degree() >= 1) {
        chain_.push_back(p.derivative().normalized_positive());
        while (chain_.back().degree() >= 1) {
            UniPoly r = chain_[chain_.size() - 2].rem(chain_.back());
            if (r.is_zero()) break; // p not squarefree; callers pass squarefree parts
            std::vector<Rational> neg = r.coeffs();
            for (auto& coeff : neg) coeff = -coeff;
            chain_.push_back(UniPoly(std::move(neg)).normalized_positive());
        }
    }
}

namespace {
int count_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}
} // namespace

int SturmChain::sign_variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) signs.push_back(p.sign_at(x));
    return count_variations(signs);
}

int SturmChain::sign_variations_at_neg_inf() const {
    std::vector<int> signs;
    for (const auto& p : chain_) {
        if (p.is_zero()) {
            signs.push_back(0);
            continue;
        }
        int s = sgn(p.leading());
        if (p.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return count_variations(signs);
}

int SturmChain::sign_variations_at_pos_inf() const {
    std::vector<int> signs;
    for (const auto& p : chain_) signs.push_back(p.is_zero() ? 0 : sgn(p.leading()));
    return count_variations(signs);
}

int SturmChain::count_roots(const Rational& a, const Rational& b) const {
    return sign_variations_at(a) - sign_variations_at(b);
}

int SturmChain::count_all_roots() const {
    return sign_variations_at_neg_inf() - sign_variations_at_pos_inf();
}

// --- root isolation ---

namespace {

// Trial-division factorization for the rational-root pre-pass; gives up on
// large inputs (isolation stays correct, roots just come back as intervals).
bool small_divisors(const Integer& nIn, std::vector<Integer>& out) {
    Integer n = abs(nIn);
    if (n == 0 || mpz_sizeinbase(n.get_mpz_t(), 2) > 40) return false;
    out.clear();
    out.push_back(1);
    Integer p = 2;
    std::vector<std::pair<Integer, int>> facts;
    while (p * p <= n) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            facts.emplace_back(p, e);
        }
        p += (p == 2) ? 1 : 2;
        if (p > 65536 && n > 1) { // residual large prime
            break;
        }
    }
    if (n > 1) facts.emplace_back(n, 1);
    for (const auto& [q, e] : facts) {
        size_t sz = out.size();
        Integer pe = 1;
        for (int i = 0; i < e; ++i) {
            pe *= q;
            for (size_t k = 0; k < sz; ++k) out.push_back(out[k] * pe);
        }
    }
    return true;
}

struct Isolator {
    SturmChain sturm;
    const UniPoly& q;
    std::vector<RootInterval> out;

    Isolator(const UniPoly& sq) : sturm(sq), q(sq) {}

    // invariant: a,b are not roots of q
    void isolate(const Rational& a, const Rational& b, int count) {
        if (count == 0) return;
        if (count == 1) {
            out.push_back(RootInterval{a, b, false});
            return;
        }
        Rational mid = (a + b) / 2;
        if (q.sign_at(mid) == 0) {
            // rational root at the midpoint; shrink a clean gap around it
            Rational radius = (b - a) / 4;
            while (true) {
                Rational lo = mid - radius, hi = mid + radius;
                if (q.sign_at(lo) != 0 && q.sign_at(hi) != 0 && sturm.count_roots(lo, hi) == 1) {
                    out.push_back(RootInterval{mid, mid, true});
                    isolate(a, lo, sturm.count_roots(a, lo));
                    isolate(hi, b, sturm.count_roots(hi, b));
                    return;
                }
                radius /= 2;
            }
        }
        int left = sturm.count_roots(a, mid);
        isolate(a, mid, left);
        isolate(mid, b, count - left);
    }
};

} // namespace

std::vector<RootInterval> isolate_roots(const UniPoly& p) {
    if (p.is_zero()) raise(ErrorClass::InternalError, "isolate_roots of zero polynomial");
    UniPoly q = p.squarefree_part();
    if (q.degree() <= 0) return {};

    std::vector<RootInterval> found;

    // rational-root pre-pass by exact division
    Integer num0 = 1, den0 = 1;
    {
        // clear denominators: integer polynomial content
        Integer lcm = 1;
        for (const auto& coeff : q.coeffs()) lcm = lcm / gcd(lcm, coeff.get_den()) * coeff.get_den();
        std::vector<Rational> zc = q.coeffs();
        for (auto& coeff : zc) coeff *= Rational(lcm);
        // lowest nonzero coefficient index gives t^k factor (root 0)
        size_t low = 0;
        while (low < zc.size() && sgn(zc[low]) == 0) ++low;
        if (low > 0) {
            found.push_back(RootInterval{Rational(0), Rational(0), true});
            std::vector<Rational> shifted(zc.begin() + low, zc.end());
            q = UniPoly(std::move(shifted));
            zc = q.coeffs();
        }
        if (q.degree() >= 1) {
            num0 = zc.front().get_num();
            den0 = zc.back().get_num();
        }
    }
    std::vector<Integer> nds, dds;
    if (q.degree() >= 1 && small_divisors(num0, nds) && small_divisors(den0, dds)) {
        for (const Integer& nn : nds)
            for (const Integer& dd : dds) {
                for (int s : {1, -1}) {
                    if (q.degree() < 1) break;
                    Rational cand(s * nn, dd);
                    cand.canonicalize();
                    while (q.degree() >= 1 && sgn(q.eval(cand)) == 0) {
                        found.push_back(RootInterval{cand, cand, true});
                        // divide by (t - cand)
                        q = q.divide_exact(UniPoly({-cand, Rational(1)}));
                    }
                }
            }
    }

    if (q.degree() >= 1) {
        Rational bound = q.root_bound();
        Isolator iso(q);
        int total = iso.sturm.count_roots(-bound, bound);
        iso.isolate(-bound, bound, total);
        // keep isolating intervals clear of the exact roots found above
        for (auto& iv : iso.out) {
            for (const auto& ex : found) {
                if (!ex.exact) continue;
                while (iv.lo < ex.lo && ex.lo < iv.hi) {
                    // ex.lo is not a root of q, so we may split there
                    if (iso.sturm.count_roots(iv.lo, ex.lo) == 1)
                        iv.hi = ex.lo;
                    else
                        iv.lo = ex.lo;
                }
            }
            found.push_back(iv);
        }
    }

    std::sort(found.begin(), found.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo + a.hi < b.lo + b.hi; });
    return found;
}

} // namespace latcount
