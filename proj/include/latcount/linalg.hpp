#pragma once

#include "latcount/rational.hpp"

#include <vector>

namespace latcount {

using ZVec = std::vector<Integer>;

// Dense rational matrix, row-major. Sizes here never exceed a handful of
// rows, so plain Gaussian elimination over mpq is exact and fast enough.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    QVec col(int c) const;
    QVec row(int r) const;
    void set_col(int c, const QVec& v);

    QMatrix transposed() const;

    bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

QVec matvec(const QMatrix& a, const QVec& x);
QMatrix matmul(const QMatrix& a, const QMatrix& b);
Rational dot(const QVec& a, const QVec& b);
Rational norm_sq(const QVec& v);

Rational determinant(const QMatrix& a);
// Inverse of a square nonsingular matrix; throws InternalError if singular.
QMatrix inverse(const QMatrix& a);
// Rank over the rationals.
int rank(const QMatrix& a);

// Gram matrix of the columns of a.
QMatrix gram_of_columns(const QMatrix& a);

// --- exact integer lattice helpers (n <= 6 scale) ---

// Basis of the integer kernel {x in Z^c : A x = 0} of an integer matrix,
// returned as columns. Uses a column-style Hermite reduction.
std::vector<ZVec> integer_kernel(const std::vector<ZVec>& rows, int cols);

// Determinant of a square integer matrix.
Integer determinant_z(const std::vector<ZVec>& rows);

// Given a full-row-rank (k-1) x k integer matrix whose rows span a pure
// sublattice of Z^k, returns a row completing them to a basis of Z^k.
ZVec complete_to_unimodular(const std::vector<ZVec>& rows);

} // namespace latcount
