#include "polyalg/subspace.hpp"

#include <sstream>
#include <stdexcept>

namespace polyalg {

Subspace Subspace::span(const std::vector<Vec>& vectors, int ambient_dim) {
    for (const Vec& v : vectors)
        if (static_cast<int>(v.size()) != ambient_dim)
            throw std::invalid_argument("span: ambient dimension mismatch");
    QMatrix m = QMatrix::from_rows(vectors, ambient_dim);
    std::vector<int> pivots = m.rref();
    Subspace s(ambient_dim);
    QMatrix basis(static_cast<int>(pivots.size()), ambient_dim);
    for (size_t i = 0; i < pivots.size(); ++i)
        for (int j = 0; j < ambient_dim; ++j) basis.at(static_cast<int>(i), j) = m.at(static_cast<int>(i), j);
    s.basis_ = basis;
    return s;
}

Subspace Subspace::line(const IVec& direction) {
    if (is_zero(direction)) throw std::invalid_argument("line: zero direction");
    return span({vec_from_ivec(direction)}, static_cast<int>(direction.size()));
}

Subspace Subspace::full(int ambient_dim) {
    Subspace s(ambient_dim);
    s.basis_ = QMatrix::identity(ambient_dim);
    return s;
}

bool Subspace::contains(const Vec& v) const {
    if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("contains: dimension mismatch");
    if (is_zero(v)) return true;
    std::vector<Vec> rows = basis_.row_list();
    rows.push_back(v);
    return QMatrix::from_rows(rows, n_).rank() == dim();
}

bool Subspace::contains(const IVec& v) const { return contains(vec_from_ivec(v)); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("subspace_sum: ambient mismatch");
    std::vector<Vec> rows = a.basis_.row_list();
    for (const Vec& r : b.basis_.row_list()) rows.push_back(r);
    return Subspace::span(rows, a.n_);
}

std::string Subspace::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < basis_.rows(); ++i) {
        if (i) os << "; ";
        for (int j = 0; j < basis_.cols(); ++j) {
            if (j) os << ",";
            os << basis_.at(i, j).get_str();
        }
    }
    os << "]";
    return os.str();
}

Rat sin_squared(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("sin_squared: ambient mismatch");
    if (a.dim() == 0 || b.dim() == 0) return Rat(1);
    std::vector<Vec> joint = a.basis_rows();
    for (const Vec& r : b.basis_rows()) joint.push_back(r);
    Rat det_joint = gram_matrix(joint).determinant();
    if (det_joint == 0) return Rat(0);
    Rat det_a = gram_matrix(a.basis_rows()).determinant();
    Rat det_b = gram_matrix(b.basis_rows()).determinant();
    return det_joint / (det_a * det_b);
}

QMatrix orthogonal_projection(const Subspace& w) {
    if (w.dim() == 0) throw std::domain_error("orthogonal_projection: zero subspace");
    QMatrix b = w.basis();
    QMatrix bt = b.transposed();
    QMatrix g = b * bt;
    return bt * g.inverse() * b;
}

Radical gram_volume(const std::vector<Vec>& vectors) {
    if (vectors.empty()) return Radical(Rat(1));
    return Radical::sqrt_of(gram_matrix(vectors).determinant());
}

Subspace orthogonal_complement(const Subspace& w) {
    std::vector<Vec> kernel = w.basis().kernel_basis();
    return Subspace::span(kernel, w.ambient_dim());
}

Vec project_onto(const Subspace& w, const Vec& v) {
    if (w.dim() == 0) return Vec(w.ambient_dim(), Rat(0));
    // Solve the normal equations instead of forming the projection matrix.
    QMatrix b = w.basis();
    QMatrix g = b * b.transposed();
    Vec rhs = b.apply(v);
    Vec y;
    if (!g.solve(rhs, y)) throw std::runtime_error("project_onto: Gram system inconsistent");
    Vec out(w.ambient_dim(), Rat(0));
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) out[j] += y[i] * b.at(i, j);
    return out;
}

}  // namespace polyalg
