#pragma once

#include <array>
#include <vector>

#include "polyalg/radical.hpp"

namespace polyalg {

/// Inertia of a symmetric matrix: (n_plus, n_zero, n_minus).
struct Inertia {
    int plus = 0, zero = 0, minus = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Dense matrix over the radical ring. Rank and inertia are computed exactly
/// by fraction-free elimination: entries stay in the ring because no division
/// is performed, and pivots are selected by exact sign determination. A
/// binary64 mode exists for large instances.
class RadMatrix {
  public:
    RadMatrix() : rows_(0), cols_(0) {}
    RadMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Radical& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const Radical& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    bool is_symmetric() const;

    /// Exact rank (fraction-free Gaussian elimination).
    int exact_rank() const;
    /// Exact inertia of a symmetric matrix (division-free congruence
    /// elimination). Throws on asymmetric input.
    Inertia exact_inertia() const;
    /// Kernel basis with entries in the radical ring (division-free
    /// back-substitution; vectors are scaled by pivot products).
    std::vector<std::vector<Radical>> kernel_basis() const;

    std::vector<std::vector<double>> to_double() const;
    /// Rank in binary64 with tolerance 1e-9 * scale.
    int float_rank() const;
    /// Inertia in binary64 (Jacobi eigenvalues) with tolerance 1e-9 * scale.
    Inertia float_inertia() const;

  private:
    int rows_, cols_;
    std::vector<Radical> data_;
};

/// Jacobi eigenvalues of a symmetric double matrix (ascending).
std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a);

}  // namespace polyalg
