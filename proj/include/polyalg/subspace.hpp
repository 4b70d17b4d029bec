#pragma once

#include "polyalg/qmatrix.hpp"
#include "polyalg/radical.hpp"

namespace polyalg {

/// Linear subspace of R^n in canonical form: the basis matrix is the unique
/// reduced row echelon representative, so two subspaces are equal iff their
/// basis matrices are identical.
class Subspace {
  public:
    /// The zero subspace of R^n.
    explicit Subspace(int ambient_dim) : n_(ambient_dim), basis_(0, ambient_dim) {}

    static Subspace span(const std::vector<Vec>& vectors, int ambient_dim);
    static Subspace line(const IVec& direction);
    static Subspace full(int ambient_dim);

    int ambient_dim() const { return n_; }
    int dim() const { return basis_.rows(); }
    const QMatrix& basis() const { return basis_; }
    std::vector<Vec> basis_rows() const { return basis_.row_list(); }

    bool contains(const Vec& v) const;
    bool contains(const IVec& v) const;

    friend Subspace subspace_sum(const Subspace& a, const Subspace& b);

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
    friend bool operator<(const Subspace& a, const Subspace& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        return compare(a.basis_, b.basis_) < 0;
    }

    std::string to_string() const;

  private:
    int n_;
    QMatrix basis_;
};

/// Squared product of sines of the principal angles between A and B, as the
/// Gram determinant ratio det G(A u B) / (det G(A) det G(B)). Zero when the
/// subspaces intersect nontrivially; the zero subspace gives 1 (empty Gram
/// determinant is 1).
Rat sin_squared(const Subspace& a, const Subspace& b);

/// Matrix of the orthogonal projection onto W; exact, symmetric, idempotent.
QMatrix orthogonal_projection(const Subspace& w);

/// Volume of the parallelotope spanned by the vectors: sqrt(det Gram).
Radical gram_volume(const std::vector<Vec>& vectors);

/// Orthogonal complement, in canonical form.
Subspace orthogonal_complement(const Subspace& w);

/// Projection of v onto W, exact.
Vec project_onto(const Subspace& w, const Vec& v);

}  // namespace polyalg
