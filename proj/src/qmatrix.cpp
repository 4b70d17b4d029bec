#include "polyalg/qmatrix.hpp"

#include <stdexcept>

namespace polyalg {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<Vec>& rows, int cols) {
    QMatrix m(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != cols)
            throw std::invalid_argument("from_rows: column count mismatch");
        for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
    }
    return m;
}

Vec QMatrix::row(int i) const {
    Vec out(cols_);
    for (int j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
}

std::vector<Vec> QMatrix::row_list() const {
    std::vector<Vec> out;
    out.reserve(rows_);
    for (int i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

QMatrix QMatrix::transposed() const {
    QMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matmul: shape mismatch");
    QMatrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols_; ++j) m.at(i, j) += aik * b.at(k, j);
        }
    return m;
}

Vec QMatrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply: size mismatch");
    Vec out(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) out[i] += at(i, j) * v[j];
    return out;
}

std::vector<int> QMatrix::rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = -1;
        for (int i = r; i < rows_; ++i)
            if (at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
        Rat inv = 1 / at(r, c);
        for (int j = c; j < cols_; ++j) at(r, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || at(i, c) == 0) continue;
            Rat f = at(i, c);
            for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int QMatrix::rank() const {
    QMatrix copy = *this;
    return static_cast<int>(copy.rref().size());
}

Rat QMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant: square matrix required");
    QMatrix m = *this;
    Rat det = 1;
    for (int c = 0; c < cols_; ++c) {
        int p = -1;
        for (int i = c; i < rows_; ++i)
            if (m.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) return Rat(0);
        if (p != c) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(c, j));
            det = -det;
        }
        det *= m.at(c, c);
        Rat inv = 1 / m.at(c, c);
        for (int i = c + 1; i < rows_; ++i) {
            if (m.at(i, c) == 0) continue;
            Rat f = m.at(i, c) * inv;
            for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return det;
}

std::vector<Vec> QMatrix::kernel_basis() const {
    QMatrix m = *this;
    std::vector<int> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        Vec v(cols_, Rat(0));
        v[c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool QMatrix::solve(const Vec& b, Vec& x) const {
    if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("solve: size mismatch");
    QMatrix aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    aug.rref();
    x.assign(cols_, Rat(0));
    for (int i = 0; i < rows_; ++i) {
        int lead = -1;
        for (int j = 0; j <= cols_; ++j)
            if (aug.at(i, j) != 0) {
                lead = j;
                break;
            }
        if (lead == cols_) return false;
        if (lead >= 0) x[lead] = aug.at(i, cols_);
    }
    return true;
}

QMatrix QMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse: square matrix required");
    QMatrix aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = 1;
    }
    std::vector<int> pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != rows_) throw std::domain_error("inverse: singular matrix");
    QMatrix inv(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

int compare(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows()) return a.rows() < b.rows() ? -1 : 1;
    if (a.cols() != b.cols()) return a.cols() < b.cols() ? -1 : 1;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            int c = cmp(a.at(i, j), b.at(i, j));
            if (c != 0) return c;
        }
    return 0;
}

QMatrix gram_matrix(const std::vector<Vec>& vectors) {
    int m = static_cast<int>(vectors.size());
    QMatrix g(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            g.at(i, j) = dot(vectors[i], vectors[j]);
            g.at(j, i) = g.at(i, j);
        }
    return g;
}

}  // namespace polyalg
