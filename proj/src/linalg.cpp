#include "latcount/linalg.hpp"

#include "latcount/errors.hpp"

namespace latcount {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QVec QMatrix::col(int c) const {
    QVec v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

QVec QMatrix::row(int r) const {
    QVec v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

void QMatrix::set_col(int c, const QVec& v) {
    for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

QMatrix QMatrix::transposed() const {
    QMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

QVec matvec(const QMatrix& a, const QVec& x) {
    if (static_cast<int>(x.size()) != a.cols()) raise(ErrorClass::DimensionMismatch, "matvec size");
    QVec y(a.rows(), Rational(0));
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) y[r] += a.at(r, c) * x[c];
    return y;
}

QMatrix matmul(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) raise(ErrorClass::DimensionMismatch, "matmul size");
    QMatrix m(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) {
            Rational s(0);
            for (int k = 0; k < a.cols(); ++k) s += a.at(r, k) * b.at(k, c);
            m.at(r, c) = s;
        }
    return m;
}

Rational dot(const QVec& a, const QVec& b) {
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational norm_sq(const QVec& v) { return dot(v, v); }

namespace {
// Gaussian elimination; returns (echelon matrix, det, rank). detOut only
// meaningful for square input.
int eliminate(QMatrix& m, Rational* detOut) {
    int rows = m.rows(), cols = m.cols();
    Rational det(1);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (sgn(m.at(r, c)) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int k = 0; k < cols; ++k) std::swap(m.at(pivot, k), m.at(rank, k));
            det = -det;
        }
        det *= m.at(rank, c);
        for (int r = rank + 1; r < rows; ++r) {
            if (sgn(m.at(r, c)) == 0) continue;
            Rational f = m.at(r, c) / m.at(rank, c);
            for (int k = c; k < cols; ++k) m.at(r, k) -= f * m.at(rank, k);
        }
        ++rank;
    }
    if (rank < std::min(rows, cols)) det = 0;
    if (detOut) *detOut = (rank == rows && rows == cols) ? det : Rational(0);
    return rank;
}
} // namespace

Rational determinant(const QMatrix& a) {
    if (a.rows() != a.cols()) raise(ErrorClass::DimensionMismatch, "determinant of non-square matrix");
    QMatrix m = a;
    Rational det;
    eliminate(m, &det);
    return det;
}

QMatrix inverse(const QMatrix& a) {
    if (a.rows() != a.cols()) raise(ErrorClass::DimensionMismatch, "inverse of non-square matrix");
    int n = a.rows();
    QMatrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, n + r) = 1;
    }
    // forward
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (sgn(aug.at(r, c)) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) raise(ErrorClass::InternalError, "singular matrix in inverse");
        if (pivot != c)
            for (int k = 0; k < 2 * n; ++k) std::swap(aug.at(pivot, k), aug.at(c, k));
        Rational p = aug.at(c, c);
        for (int k = 0; k < 2 * n; ++k) aug.at(c, k) /= p;
        for (int r = 0; r < n; ++r) {
            if (r == c || sgn(aug.at(r, c)) == 0) continue;
            Rational f = aug.at(r, c);
            for (int k = 0; k < 2 * n; ++k) aug.at(r, k) -= f * aug.at(c, k);
        }
    }
    QMatrix inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

int rank(const QMatrix& a) {
    QMatrix m = a;
    return eliminate(m, nullptr);
}

QMatrix gram_of_columns(const QMatrix& a) {
    QMatrix g(a.cols(), a.cols());
    for (int i = 0; i < a.cols(); ++i)
        for (int j = 0; j < a.cols(); ++j) g.at(i, j) = dot(a.col(i), a.col(j));
    return g;
}

namespace {
// Column-style Hermite reduction of an integer matrix given by rows;
// tracks the unimodular column transform U. After the loop A*U has its
// nonzero columns first, and kernel columns of U span {x : A x = 0}.
struct HermiteResult {
    std::vector<ZVec> a; // transformed matrix rows
    std::vector<ZVec> u; // c x c transform, rows
    int rank = 0;
};

HermiteResult hermite_columns(const std::vector<ZVec>& rowsIn, int cols) {
    HermiteResult res;
    res.a = rowsIn;
    int rows = static_cast<int>(rowsIn.size());
    res.u.assign(cols, ZVec(cols, Integer(0)));
    for (int i = 0; i < cols; ++i) res.u[i][i] = 1;

    auto colswap = [&](int c1, int c2) {
        for (int r = 0; r < rows; ++r) std::swap(res.a[r][c1], res.a[r][c2]);
        for (int r = 0; r < cols; ++r) std::swap(res.u[r][c1], res.u[r][c2]);
    };
    auto coladd = [&](int dst, int src, const Integer& f) {
        // col_dst += f * col_src
        for (int r = 0; r < rows; ++r) res.a[r][dst] += f * res.a[r][src];
        for (int r = 0; r < cols; ++r) res.u[r][dst] += f * res.u[r][src];
    };

    int lead = 0;
    for (int r = 0; r < rows && lead < cols; ++r) {
        // gcd-eliminate row r across columns lead..cols-1
        while (true) {
            int nz = -1;
            for (int c = lead; c < cols; ++c)
                if (res.a[r][c] != 0) {
                    nz = (nz < 0 || abs(res.a[r][c]) < abs(res.a[r][nz])) ? c : nz;
                }
            if (nz < 0) break; // row zero on remaining columns
            colswap(lead, nz);
            bool reduced = true;
            for (int c = lead + 1; c < cols; ++c) {
                if (res.a[r][c] == 0) continue;
                Integer q = res.a[r][c] / res.a[r][lead]; // truncated division
                coladd(c, lead, -q);
                if (res.a[r][c] != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (lead < cols && res.a[r][lead] != 0) ++lead;
    }
    res.rank = lead;
    return res;
}
} // namespace

std::vector<ZVec> integer_kernel(const std::vector<ZVec>& rows, int cols) {
    HermiteResult h = hermite_columns(rows, cols);
    std::vector<ZVec> kernel;
    for (int c = h.rank; c < cols; ++c) {
        ZVec v(cols);
        for (int r = 0; r < cols; ++r) v[r] = h.u[r][c];
        kernel.push_back(v);
    }
    return kernel;
}

Integer determinant_z(const std::vector<ZVec>& rows) {
    int n = static_cast<int>(rows.size());
    QMatrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = Rational(rows[r][c]);
    Rational d = determinant(m);
    if (d.get_den() != 1) raise(ErrorClass::InternalError, "integer determinant not integral");
    return d.get_num();
}

ZVec complete_to_unimodular(const std::vector<ZVec>& rows) {
    int k = static_cast<int>(rows.size()) + 1;
    // Cofactors of the missing last row: det([rows; e_j]) up to sign.
    std::vector<Integer> cof(k);
    for (int j = 0; j < k; ++j) {
        std::vector<ZVec> sq = rows;
        ZVec e(k, Integer(0));
        e[j] = 1;
        sq.push_back(e);
        cof[j] = determinant_z(sq);
    }
    // Extended gcd across the cofactors: find x with sum x_j cof_j = gcd.
    Integer g = 0;
    std::vector<Integer> x(k, Integer(0));
    for (int j = 0; j < k; ++j) {
        if (cof[j] == 0) continue;
        if (g == 0) {
            g = abs(cof[j]);
            x[j] = sgn(cof[j]);
            continue;
        }
        Integer s, t, g2;
        mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), cof[j].get_mpz_t());
        for (int p = 0; p < j; ++p) x[p] *= s;
        x[j] = t;
        g = g2;
    }
    if (g != 1)
        raise(ErrorClass::InternalError, "basis completion requires a pure sublattice (gcd of minors 1)");
    // det([rows; x]) = sum_j x_j cof_j = 1
    return ZVec(x.begin(), x.end());
}

} // namespace latcount
