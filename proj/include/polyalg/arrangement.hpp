#pragma once

#include <map>
#include <vector>

#include "polyalg/subspace.hpp"

namespace polyalg {

/// A finite set of lines through the origin of (R^n)*, stored as canonical
/// primitive integer vectors (first nonzero entry positive), sorted
/// lexicographically and pairwise non-parallel. The lines must span R^n.
struct LineArrangement {
    int n = 0;
    std::vector<IVec> lines;

    /// Validates, primitivizes, dedupes, and sorts the given directions.
    static LineArrangement from_directions(const std::vector<IVec>& dirs, int ambient_dim);
    static LineArrangement coordinate_axes(int ambient_dim);

    int size() const { return static_cast<int>(lines.size()); }
};

/// The graded family L_k(E) of k-dimensional sums of lines of E, k = 0..n,
/// with one witnessing set of generating lines per member.
struct SubspaceLattice {
    int n = 0;
    LineArrangement arrangement;
    /// levels[k] is sorted; every member has dimension exactly k.
    std::vector<std::vector<Subspace>> levels;
    /// Witness: indices into arrangement.lines of k independent generators.
    std::map<Subspace, std::vector<int>> witness;

    std::vector<int> profile() const;
    /// Position of s within its level, or -1.
    int index_of(const Subspace& s) const;
};

/// Breadth-first closure L_{k+1} = dedup{ M + l : M in L_k, l not in M }.
SubspaceLattice build_lattice(const LineArrangement& arr);

struct DowlingWilsonReport {
    std::vector<int> profile;
    /// (k, n-k, |L_k|, |L_{n-k}|, holds) for k <= n/2.
    struct Pair {
        int k, nk;
        int low, high;
        bool holds;
    };
    std::vector<Pair> pairs;
    bool all_hold = true;
};

DowlingWilsonReport dowling_wilson_profile(const SubspaceLattice& lattice);

}  // namespace polyalg
