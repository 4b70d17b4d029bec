#pragma once

#include <vector>

#include "polyalg/radical.hpp"
#include "polyalg/subspace.hpp"

namespace polyalg {

/// Centered signed discrete measure on directions: the data model for surface
/// area measures of polytopes and for degree-one classes given as differences
/// of such measures.
///
/// Each entry is a primitive integer direction xi with a nonzero rational
/// weight w; xi and -xi are distinct entries. The geometric mass carried by an
/// entry is w * |xi|, so the Minkowski centering condition sum(mass * unit
/// direction) = 0 reads sum(w * xi) = 0, a rational identity.
struct WeightedDirections {
    int n = 0;
    struct Entry {
        IVec dir;  // primitive integer, sign-sensitive
        Rat weight;
    };
    std::vector<Entry> entries;

    static WeightedDirections zero(int ambient_dim) { return {ambient_dim, {}}; }

    /// Adds w along the given (not necessarily primitive) direction, merging
    /// parallel equally-oriented entries and dropping zero weights.
    void add(const Vec& direction, const Rat& w);
    void add(const IVec& direction, const Rat& w);
    /// Adds w along an already-primitive direction.
    void add_primitive(const IVec& prim, const Rat& w);

    /// sum of w * xi over entries.
    Vec centroid_defect() const;
    bool is_centered() const { return is_zero(centroid_defect()); }
    /// Invariant under xi -> -xi with equal weights.
    bool is_symmetric() const;
    bool all_nonnegative() const;
    bool empty() const { return entries.empty(); }

    /// Resorts entries into the canonical (lexicographic) order.
    void canonicalize();

    friend bool operator==(const WeightedDirections& a, const WeightedDirections& b);

    /// Geometric mass of entry i, w * sqrt(xi . xi).
    Radical mass(size_t i) const;

    WeightedDirections negated() const;
    /// Pushforward along x -> -x (directions flip, weights keep).
    WeightedDirections antipodal() const;
    friend WeightedDirections operator+(const WeightedDirections& a, const WeightedDirections& b);
    friend WeightedDirections operator*(const Rat& c, const WeightedDirections& m);
};

/// Euler-Verdier involution on degree-one classes: negate and flip directions.
WeightedDirections euler_verdier_deg1(const WeightedDirections& mu);

/// Blaschke sum: concatenation with merging of parallel equally-oriented
/// entries.
WeightedDirections blaschke_sum(const WeightedDirections& mu, const WeightedDirections& nu);

/// Restriction of a centered measure to a nonzero subspace W: each entry
/// (xi, w) maps to the projection of xi onto W, primitivized, with the scale
/// factor absorbed into the weight; zero projections are dropped and parallel
/// outputs merged. Models the pullback of degree-one classes along the
/// inclusion of W.
WeightedDirections restrict_measure(const WeightedDirections& mu, const Subspace& w);

/// Number of pairwise non-parallel direction classes.
int direction_class_count(const WeightedDirections& mu);

}  // namespace polyalg
