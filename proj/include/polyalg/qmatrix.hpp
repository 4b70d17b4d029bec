#pragma once

#include <vector>

#include "polyalg/rational.hpp"

namespace polyalg {

/// Dense matrix over the rationals, row major.
class QMatrix {
  public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, Rat(0)) {}
    static QMatrix identity(int n);
    static QMatrix from_rows(const std::vector<Vec>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }
    Vec row(int i) const;
    std::vector<Vec> row_list() const;

    QMatrix transposed() const;
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    Vec apply(const Vec& v) const;

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<int> rref();
    int rank() const;
    /// Determinant; requires a square matrix.
    Rat determinant() const;
    /// Basis of the right kernel, deterministic (free columns in order).
    std::vector<Vec> kernel_basis() const;
    /// Solves A x = b; returns false if inconsistent. Underdetermined systems
    /// get the solution with zero free variables.
    bool solve(const Vec& b, Vec& x) const;
    QMatrix inverse() const;

    /// Lexicographic comparison, used for canonical ordering of subspaces.
    friend int compare(const QMatrix& a, const QMatrix& b);

  private:
    int rows_, cols_;
    std::vector<Rat> data_;
};

/// Gram matrix of the given vectors under the standard inner product.
QMatrix gram_matrix(const std::vector<Vec>& vectors);

}  // namespace polyalg
