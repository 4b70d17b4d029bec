#include "polyalg/arrangement.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyalg {

LineArrangement LineArrangement::from_directions(const std::vector<IVec>& dirs, int ambient_dim) {
    LineArrangement arr;
    arr.n = ambient_dim;
    for (const IVec& d : dirs) {
        if (static_cast<int>(d.size()) != ambient_dim)
            throw std::invalid_argument("arrangement: direction dimension mismatch");
        if (is_zero(d)) throw std::invalid_argument("arrangement: zero direction");
        arr.lines.push_back(primitive_line(d));
    }
    std::sort(arr.lines.begin(), arr.lines.end(),
              [](const IVec& a, const IVec& b) { return compare(a, b) < 0; });
    arr.lines.erase(std::unique(arr.lines.begin(), arr.lines.end()), arr.lines.end());
    std::vector<Vec> rows;
    for (const IVec& l : arr.lines) rows.push_back(vec_from_ivec(l));
    if (QMatrix::from_rows(rows, ambient_dim).rank() != ambient_dim)
        throw std::invalid_argument("arrangement: lines do not span the ambient space");
    return arr;
}

LineArrangement LineArrangement::coordinate_axes(int ambient_dim) {
    std::vector<IVec> dirs;
    for (int i = 0; i < ambient_dim; ++i) {
        IVec e(ambient_dim, Int(0));
        e[i] = 1;
        dirs.push_back(e);
    }
    return from_directions(dirs, ambient_dim);
}

std::vector<int> SubspaceLattice::profile() const {
    std::vector<int> out;
    for (const auto& level : levels) out.push_back(static_cast<int>(level.size()));
    return out;
}

int SubspaceLattice::index_of(const Subspace& s) const {
    int k = s.dim();
    if (k < 0 || k >= static_cast<int>(levels.size())) return -1;
    const auto& level = levels[k];
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || !(*it == s)) return -1;
    return static_cast<int>(it - level.begin());
}

SubspaceLattice build_lattice(const LineArrangement& arr) {
    SubspaceLattice lat;
    lat.n = arr.n;
    lat.arrangement = arr;
    lat.levels.assign(arr.n + 1, {});
    Subspace zero(arr.n);
    lat.levels[0].push_back(zero);
    lat.witness[zero] = {};
    for (int k = 0; k < arr.n; ++k) {
        std::map<Subspace, std::vector<int>> next;
        for (const Subspace& m : lat.levels[k]) {
            const std::vector<int>& wit = lat.witness.at(m);
            for (int li = 0; li < arr.size(); ++li) {
                if (m.contains(arr.lines[li])) continue;
                std::vector<Vec> rows = m.basis_rows();
                rows.push_back(vec_from_ivec(arr.lines[li]));
                Subspace sum = Subspace::span(rows, arr.n);
                if (!next.count(sum)) {
                    std::vector<int> w = wit;
                    w.push_back(li);
                    next.emplace(sum, std::move(w));
                }
            }
        }
        for (auto& [s, w] : next) {
            lat.levels[k + 1].push_back(s);
            lat.witness.emplace(s, std::move(w));
        }
        // map iteration is already sorted; keep the invariant explicit
        std::sort(lat.levels[k + 1].begin(), lat.levels[k + 1].end());
    }
    return lat;
}

DowlingWilsonReport dowling_wilson_profile(const SubspaceLattice& lattice) {
    DowlingWilsonReport rep;
    rep.profile = lattice.profile();
    int n = lattice.n;
    for (int k = 0; 2 * k <= n; ++k) {
        DowlingWilsonReport::Pair p;
        p.k = k;
        p.nk = n - k;
        p.low = rep.profile[k];
        p.high = rep.profile[n - k];
        p.holds = p.low <= p.high;
        rep.all_hold = rep.all_hold && p.holds;
        rep.pairs.push_back(p);
    }
    return rep;
}

}  // namespace polyalg
