#include "polyalg/radmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polyalg {

namespace {

/// Positive rational content of a set of radical values (gcd of coefficient
/// numerators over lcm of denominators); 1 if all zero. Dividing by it keeps
/// fraction-free intermediates small without leaving the ring.
Rat row_content(const std::vector<Radical>& row) {
    Int num_gcd = 0, den_lcm = 1;
    for (const Radical& r : row)
        for (const auto& [d, q] : r.terms()) {
            gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
            lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
        }
    if (num_gcd == 0) return Rat(1);
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

}  // namespace

bool RadMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (!(at(i, j) == at(j, i))) return false;
    return true;
}

int RadMatrix::exact_rank() const {
    RadMatrix m = *this;
    int rank = 0;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pivot = -1;
        for (int i = row; i < rows_; ++i)
            if (m.at(i, col).sign() != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(row, j));
        const Radical p = m.at(row, col);
        for (int i = row + 1; i < rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            const Radical f = m.at(i, col);
            std::vector<Radical> new_row(cols_);
            for (int j = 0; j < cols_; ++j) new_row[j] = p * m.at(i, j) - f * m.at(row, j);
            Rat c = row_content(new_row);
            Rat inv = 1 / c;
            for (int j = 0; j < cols_; ++j) m.at(i, j) = Radical(inv) * new_row[j];
        }
        ++rank;
        ++row;
    }
    return rank;
}

Inertia RadMatrix::exact_inertia() const {
    if (!is_symmetric()) throw std::invalid_argument("exact_inertia: symmetric matrix required");
    // Work on a copy; recursion realized as a loop over leading positions.
    int m = rows_;
    std::vector<std::vector<Radical>> a(m, std::vector<Radical>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) a[i][j] = at(i, j);

    Inertia res;
    bool flip = false;  // true while the eliminated block was scaled by a negative pivot
    int lo = 0;
    while (lo < m) {
        int size = m - lo;
        // find a nonzero diagonal pivot
        int p = -1;
        for (int i = lo; i < m; ++i)
            if (a[i][i].sign() != 0) {
                p = i;
                break;
            }
        if (p < 0) {
            // all-diagonal zero: look for an off-diagonal entry
            int oi = -1, oj = -1;
            for (int i = lo; i < m && oi < 0; ++i)
                for (int j = i + 1; j < m; ++j)
                    if (a[i][j].sign() != 0) {
                        oi = i;
                        oj = j;
                        break;
                    }
            if (oi < 0) {
                res.zero += size;
                break;
            }
            // symmetric congruence row_i += row_j, col_i += col_j creates a
            // nonzero diagonal entry 2*a[i][j]
            for (int j = lo; j < m; ++j) a[oi][j] += a[oj][j];
            for (int i = lo; i < m; ++i) a[i][oi] += a[i][oj];
            continue;
        }
        if (p != lo) {
            for (int j = lo; j < m; ++j) std::swap(a[p][j], a[lo][j]);
            for (int i = lo; i < m; ++i) std::swap(a[i][p], a[i][lo]);
        }
        const Radical d = a[lo][lo];
        int s = d.sign();
        if (flip) s = -s;
        (s > 0 ? res.plus : res.minus) += 1;
        // Schur complement scaled by d: stays in the ring
        for (int i = lo + 1; i < m; ++i)
            for (int j = lo + 1; j < m; ++j) a[i][j] = d * a[i][j] - a[i][lo] * a[lo][j];
        if (d.sign() < 0) flip = !flip;
        // size control: congruence by diag(1/c_i) with c_i the positive row
        // content, which preserves both symmetry and inertia
        std::vector<Rat> c(m, Rat(1));
        for (int i = lo + 1; i < m; ++i)
            c[i] = row_content(std::vector<Radical>(a[i].begin() + lo + 1, a[i].end()));
        for (int i = lo + 1; i < m; ++i)
            for (int j = lo + 1; j < m; ++j) {
                Rat f = c[i] * c[j];
                if (f != 1) a[i][j] = Radical(1 / f) * a[i][j];
            }
        ++lo;
    }
    return res;
}

std::vector<std::vector<Radical>> RadMatrix::kernel_basis() const {
    RadMatrix u = *this;
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pivot = -1;
        for (int i = row; i < rows_; ++i)
            if (u.at(i, col).sign() != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < cols_; ++j) std::swap(u.at(pivot, j), u.at(row, j));
        const Radical p = u.at(row, col);
        for (int i = row + 1; i < rows_; ++i) {
            if (u.at(i, col).is_zero()) continue;
            const Radical f = u.at(i, col);
            std::vector<Radical> new_row(cols_);
            for (int j = 0; j < cols_; ++j) new_row[j] = p * u.at(i, j) - f * u.at(row, j);
            Rat c = row_content(new_row);
            Rat inv = 1 / c;
            for (int j = 0; j < cols_; ++j) u.at(i, j) = Radical(inv) * new_row[j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    int r = static_cast<int>(pivot_col.size());
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Radical>> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Radical> v(cols_);
        v[f] = Radical(Rat(1));
        for (int rr = r - 1; rr >= 0; --rr) {
            if (pivot_col[rr] > f) continue;
            Radical s;
            for (int j = pivot_col[rr] + 1; j < cols_; ++j)
                if (!v[j].is_zero() && !u.at(rr, j).is_zero()) s += u.at(rr, j) * v[j];
            const Radical p = u.at(rr, pivot_col[rr]);
            for (int j = 0; j < cols_; ++j)
                if (!v[j].is_zero()) v[j] = p * v[j];
            v[pivot_col[rr]] = -s;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<double>> RadMatrix::to_double() const {
    std::vector<std::vector<double>> out(rows_, std::vector<double>(cols_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out[i][j] = at(i, j).to_double();
    return out;
}

int RadMatrix::float_rank() const {
    auto a = to_double();
    int rows = rows_, cols = cols_;
    double scale = 0;
    for (auto& r : a)
        for (double x : r) scale = std::max(scale, std::fabs(x));
    double tol = 1e-9 * std::max(scale, 1.0);
    int rank = 0, row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = row;
        for (int i = row + 1; i < rows; ++i)
            if (std::fabs(a[i][col]) > std::fabs(a[pivot][col])) pivot = i;
        if (std::fabs(a[pivot][col]) <= tol) continue;
        std::swap(a[pivot], a[row]);
        for (int i = row + 1; i < rows; ++i) {
            double f = a[i][col] / a[row][col];
            for (int j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
        }
        ++rank;
        ++row;
    }
    return rank;
}

Inertia RadMatrix::float_inertia() const {
    if (rows_ != cols_) throw std::invalid_argument("float_inertia: square matrix required");
    auto eigs = jacobi_eigenvalues(to_double());
    double scale = 0;
    for (double e : eigs) scale = std::max(scale, std::fabs(e));
    double tol = 1e-9 * std::max(scale, 1.0);
    Inertia res;
    for (double e : eigs) {
        if (e > tol)
            ++res.plus;
        else if (e < -tol)
            ++res.minus;
        else
            ++res.zero;
    }
    return res;
}

std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    int n = static_cast<int>(a.size());
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-26) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::fabs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> eigs(n);
    for (int i = 0; i < n; ++i) eigs[i] = a[i][i];
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

}  // namespace polyalg
