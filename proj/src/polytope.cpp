#include "polyalg/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "polyalg/subspace.hpp"

namespace polyalg {

namespace {

bool vec_less(const Vec& a, const Vec& b) { return compare(a, b) < 0; }

Rat det_of_rows(std::vector<Vec> rows) {
    return QMatrix::from_rows(rows, static_cast<int>(rows.size())).determinant();
}

/// Primitive integer normal of the hyperplane through the given d affinely
/// independent points in R^d. Throws if the points are affinely dependent.
IVec hyperplane_normal(const std::vector<Vec>& pts) {
    int d = static_cast<int>(pts.size());
    std::vector<Vec> edges;
    for (int i = 1; i < d; ++i) edges.push_back(sub(pts[i], pts[0]));
    QMatrix m = QMatrix::from_rows(edges, d);
    std::vector<Vec> kernel = m.kernel_basis();
    if (kernel.size() != 1) throw std::runtime_error("hull: degenerate facet normal");
    return primitive_direction(kernel[0]);
}

struct TriFacet {
    std::vector<int> vs;  // d vertex indices
    IVec normal;          // primitive integer, outward
    Rat offset;
    bool alive = true;
};

/// Incremental beneath-beyond hull of full-dimensional point sets.
/// Points must be deduplicated; simplex_ids must index d+1 affinely
/// independent points.
class HullBuilder {
  public:
    HullBuilder(const std::vector<Vec>& pts, const std::vector<int>& simplex_ids, int d)
        : pts_(pts), d_(d) {
        // interior reference point: centroid of the initial simplex
        center_.assign(d, Rat(0));
        for (int id : simplex_ids)
            for (int j = 0; j < d; ++j) center_[j] += pts_[id][j];
        for (int j = 0; j < d; ++j) center_[j] /= (d + 1);

        for (int skip = 0; skip <= d; ++skip) {
            std::vector<int> face;
            for (int i = 0; i <= d; ++i)
                if (i != skip) face.push_back(simplex_ids[i]);
            add_facet(face);
        }
        std::vector<bool> in_simplex(pts_.size(), false);
        for (int id : simplex_ids) in_simplex[id] = true;
        for (size_t i = 0; i < pts_.size(); ++i)
            if (!in_simplex[i]) insert(static_cast<int>(i));
    }

    const std::vector<TriFacet>& facets() const { return facets_; }
    const Vec& center() const { return center_; }

  private:
    const std::vector<Vec>& pts_;
    int d_;
    Vec center_;
    std::vector<TriFacet> facets_;

    void add_facet(std::vector<int> vs) {
        std::sort(vs.begin(), vs.end());
        std::vector<Vec> pb;
        for (int id : vs) pb.push_back(pts_[id]);
        TriFacet f;
        f.normal = hyperplane_normal(pb);
        f.offset = dot(f.normal, pb[0]);
        Rat c = dot(f.normal, center_);
        if (c == f.offset) throw std::runtime_error("hull: reference point on facet plane");
        if (c > f.offset) {
            f.normal = negate(f.normal);
            f.offset = -f.offset;
        }
        f.vs = std::move(vs);
        facets_.push_back(std::move(f));
    }

    void insert(int pid) {
        const Vec& p = pts_[pid];
        std::vector<int> visible;
        for (size_t fi = 0; fi < facets_.size(); ++fi) {
            if (!facets_[fi].alive) continue;
            if (dot(facets_[fi].normal, p) > facets_[fi].offset)
                visible.push_back(static_cast<int>(fi));
        }
        if (visible.empty()) return;
        // horizon = ridges covered by exactly one visible facet
        std::map<std::vector<int>, int> ridge_count;
        for (int fi : visible) {
            const auto& vs = facets_[fi].vs;
            for (size_t skip = 0; skip < vs.size(); ++skip) {
                std::vector<int> ridge;
                for (size_t i = 0; i < vs.size(); ++i)
                    if (i != skip) ridge.push_back(vs[i]);
                ridge_count[ridge] += 1;
            }
        }
        for (int fi : visible) facets_[fi].alive = false;
        for (const auto& [ridge, count] : ridge_count) {
            if (count != 1) continue;
            std::vector<int> vs = ridge;
            vs.push_back(pid);
            add_facet(std::move(vs));
        }
    }
};

std::vector<Vec> dedupe_sorted(std::vector<Vec> pts) {
    std::sort(pts.begin(), pts.end(), vec_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

/// Greedy affine basis: returns indices of affinely independent points
/// spanning the affine hull.
std::vector<int> affine_basis(const std::vector<Vec>& pts, int n) {
    std::vector<int> ids = {0};
    std::vector<Vec> edges;
    for (size_t i = 1; i < pts.size() && static_cast<int>(edges.size()) < n; ++i) {
        Vec e = sub(pts[i], pts[0]);
        edges.push_back(e);
        if (QMatrix::from_rows(edges, n).rank() == static_cast<int>(edges.size()))
            ids.push_back(static_cast<int>(i));
        else
            edges.pop_back();
    }
    return ids;
}

}  // namespace

Polytope Polytope::hull(const std::vector<Vec>& points, int ambient_dim) {
    if (points.empty()) throw std::invalid_argument("hull: empty input");
    for (const Vec& p : points)
        if (static_cast<int>(p.size()) != ambient_dim)
            throw std::invalid_argument("hull: point dimension mismatch");
    Polytope out;
    out.n_ = ambient_dim;
    std::vector<Vec> pts = dedupe_sorted(points);

    std::vector<int> basis_ids = affine_basis(pts, ambient_dim);
    int d = static_cast<int>(basis_ids.size()) - 1;
    out.dim_ = d;
    out.volume_ = 0;

    if (d == 0) {
        out.verts_ = {pts[0]};
        return out;
    }
    if (d < ambient_dim) {
        // Work in affine coordinates of the flat spanned by the basis edges.
        const Vec& origin = pts[basis_ids[0]];
        std::vector<Vec> edges;
        for (int i = 1; i <= d; ++i) edges.push_back(sub(pts[basis_ids[i]], origin));
        QMatrix b = QMatrix::from_rows(edges, ambient_dim);
        QMatrix g = b * b.transposed();
        QMatrix ginv = g.inverse();
        std::vector<Vec> coords;
        for (const Vec& p : pts) coords.push_back(ginv.apply(b.apply(sub(p, origin))));
        Polytope low = hull(coords, d);
        for (const Vec& c : low.verts_) {
            Vec v = origin;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < ambient_dim; ++j) v[j] += c[i] * b.at(i, j);
            out.verts_.push_back(v);
        }
        std::sort(out.verts_.begin(), out.verts_.end(), vec_less);
        return out;
    }

    HullBuilder builder(pts, basis_ids, ambient_dim);

    // Extreme points: facet corners whose active facet normals span R^n.
    std::vector<int> candidates;
    for (const TriFacet& f : builder.facets())
        if (f.alive) candidates.insert(candidates.end(), f.vs.begin(), f.vs.end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (int id : candidates) {
        std::vector<Vec> active;
        for (const TriFacet& f : builder.facets()) {
            if (!f.alive) continue;
            if (dot(f.normal, pts[id]) == f.offset) active.push_back(vec_from_ivec(f.normal));
        }
        if (QMatrix::from_rows(active, ambient_dim).rank() == ambient_dim)
            out.verts_.push_back(pts[id]);
    }
    std::sort(out.verts_.begin(), out.verts_.end(), vec_less);

    // Volume by triangulation from the interior reference point, and facet
    // data by grouping the triangulated facets by supporting hyperplane.
    Int factorial_n = 1;
    for (int i = 2; i <= ambient_dim; ++i) factorial_n *= i;
    Int factorial_n1 = 1;
    for (int i = 2; i <= ambient_dim - 1; ++i) factorial_n1 *= i;
    std::map<std::pair<IVec, Rat>, Rat> groups;
    Rat vol = 0;
    for (const TriFacet& f : builder.facets()) {
        if (!f.alive) continue;
        std::vector<Vec> cone_rows;
        for (int id : f.vs) cone_rows.push_back(sub(pts[id], builder.center()));
        Rat cone_det = det_of_rows(cone_rows);
        vol += abs(cone_det);

        std::vector<Vec> facet_rows;
        for (size_t i = 1; i < f.vs.size(); ++i)
            facet_rows.push_back(sub(pts[f.vs[i]], pts[f.vs[0]]));
        facet_rows.push_back(vec_from_ivec(f.normal));
        Rat fd = abs(det_of_rows(facet_rows));
        Rat w = fd / (Rat(factorial_n1) * Rat(dot(f.normal, f.normal)));
        groups[{f.normal, f.offset}] += w;
    }
    out.volume_ = vol / Rat(factorial_n);
    for (const auto& [key, w] : groups) out.facets_.push_back({key.first, key.second, w});

    // closedness of the facet-normal measure, an exact divergence identity
    Vec defect(ambient_dim, Rat(0));
    Rat div_vol = 0;
    for (const FacetData& f : out.facets_) {
        for (int j = 0; j < ambient_dim; ++j) defect[j] += f.weight * Rat(f.normal[j]);
        div_vol += f.weight * f.offset;
    }
    if (!is_zero(defect) || div_vol != Rat(ambient_dim) * out.volume_)
        throw std::runtime_error("hull: facet measure consistency check failed");
    return out;
}

Polytope Polytope::box(const Vec& lo, const Vec& hi) {
    int n = static_cast<int>(lo.size());
    std::vector<Vec> corners;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Vec p(n);
        for (int j = 0; j < n; ++j) p[j] = (mask >> j & 1) ? hi[j] : lo[j];
        corners.push_back(p);
    }
    return hull(corners, n);
}

Polytope Polytope::unit_cube(int n) {
    Vec lo(n, Rat(-1, 2)), hi(n, Rat(1, 2));
    return box(lo, hi);
}

Polytope Polytope::simplex(int n) {
    std::vector<Vec> pts = {Vec(n, Rat(0))};
    for (int i = 0; i < n; ++i) {
        Vec e(n, Rat(0));
        e[i] = 1;
        pts.push_back(e);
    }
    return hull(pts, n);
}

Polytope Polytope::segment(const Vec& a, const Vec& b) {
    return hull({a, b}, static_cast<int>(a.size()));
}

WeightedDirections Polytope::surface_class() const {
    if (degenerate()) throw std::domain_error("surface_class: degenerate polytope");
    WeightedDirections mu{n_, {}};
    for (const FacetData& f : facets_) mu.entries.push_back({f.normal, f.weight});
    mu.canonicalize();
    return mu;
}

bool Polytope::contains(const Vec& p) const {
    if (degenerate()) throw std::domain_error("contains: degenerate polytope");
    for (const FacetData& f : facets_)
        if (dot(f.normal, p) > f.offset) return false;
    return true;
}

Vec Polytope::vertex_centroid() const {
    Vec c(n_, Rat(0));
    for (const Vec& v : verts_)
        for (int j = 0; j < n_; ++j) c[j] += v[j];
    for (int j = 0; j < n_; ++j) c[j] /= static_cast<long>(verts_.size());
    return c;
}

bool Polytope::is_centrally_symmetric() const {
    Vec c = vertex_centroid();
    for (const Vec& v : verts_) {
        Vec m(n_);
        for (int j = 0; j < n_; ++j) m[j] = 2 * c[j] - v[j];
        if (!std::binary_search(verts_.begin(), verts_.end(), m, vec_less)) return false;
    }
    return true;
}

Polytope Polytope::translated(const Vec& t) const {
    Polytope out = *this;
    for (Vec& v : out.verts_)
        for (int j = 0; j < n_; ++j) v[j] += t[j];
    for (FacetData& f : out.facets_) f.offset += dot(f.normal, t);
    std::sort(out.verts_.begin(), out.verts_.end(), vec_less);
    return out;
}

Polytope Polytope::negated() const {
    Polytope out = *this;
    for (Vec& v : out.verts_) v = negate(v);
    for (FacetData& f : out.facets_) f.normal = negate(f.normal);
    std::sort(out.verts_.begin(), out.verts_.end(), vec_less);
    std::sort(out.facets_.begin(), out.facets_.end(), [](const FacetData& a, const FacetData& b) {
        int c = compare(a.normal, b.normal);
        if (c != 0) return c < 0;
        return cmp(a.offset, b.offset) < 0;
    });
    return out;
}

Polytope Polytope::dilated(const Rat& a) const {
    if (a <= 0) throw std::invalid_argument("dilated: positive factor required");
    Polytope out = *this;
    for (Vec& v : out.verts_) v = scale(a, v);
    Rat an1 = 1;
    for (int i = 0; i < n_ - 1; ++i) an1 *= a;
    for (FacetData& f : out.facets_) {
        f.offset *= a;
        f.weight *= an1;
    }
    out.volume_ = volume_ * an1 * a;
    std::sort(out.verts_.begin(), out.verts_.end(), vec_less);
    return out;
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
    if (p.ambient_dim() != q.ambient_dim())
        throw std::invalid_argument("minkowski_sum: ambient mismatch");
    std::vector<Vec> sums;
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const Vec& a : p.vertices())
        for (const Vec& b : q.vertices()) sums.push_back(add(a, b));
    return Polytope::hull(sums, p.ambient_dim());
}

Rat mixed_area(const Polytope& a, const Polytope& b) {
    if (a.ambient_dim() != 2 || b.ambient_dim() != 2)
        throw std::invalid_argument("mixed_area: polygons required");
    Polytope sum = minkowski_sum(a, b);
    return (sum.volume() - a.volume() - b.volume()) / 2;
}

void Zonotope::add_generator(const Vec& g) {
    if (static_cast<int>(g.size()) != n) throw std::invalid_argument("zonotope: dimension mismatch");
    if (!is_zero(g)) generators.push_back(g);
}

Rat Zonotope::support(const Vec& x) const {
    Rat s = 0;
    for (const Vec& g : generators) s += abs(dot(g, x));
    return s;
}

Polytope Zonotope::to_polytope() const {
    size_t m = generators.size();
    if (m > 20) throw std::invalid_argument("zonotope: too many generators for vertex expansion");
    std::vector<Vec> pts;
    for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
        Vec p(n, Rat(0));
        for (size_t i = 0; i < m; ++i) {
            const Rat s = (mask >> i & 1) ? 1 : -1;
            for (int j = 0; j < n; ++j) p[j] += s * generators[i][j];
        }
        pts.push_back(p);
    }
    if (pts.empty()) pts.push_back(Vec(n, Rat(0)));
    return Polytope::hull(pts, n);
}

Zonotope operator+(const Zonotope& a, const Zonotope& b) {
    if (a.n != b.n) throw std::invalid_argument("zonotope sum: ambient mismatch");
    Zonotope out{a.n, a.generators};
    for (const Vec& g : b.generators) out.add_generator(g);
    return out;
}

Zonotope projection_body(const Polytope& p) {
    if (p.degenerate()) throw std::domain_error("projection_body: degenerate polytope");
    // group facet entries by line class; the half-generator is the averaged
    // pair weight times the canonical line direction
    std::map<IVec, Rat> by_line;
    for (const FacetData& f : p.facets()) by_line[primitive_line(f.normal)] += f.weight;
    Zonotope z{p.ambient_dim(), {}};
    for (const auto& [line, total] : by_line) {
        Vec g(p.ambient_dim());
        for (int j = 0; j < p.ambient_dim(); ++j) g[j] = total / 2 * Rat(line[j]);
        z.add_generator(g);
    }
    return z;
}

Rat zonotope_mixed_volume(const std::vector<Zonotope>& zs) {
    if (zs.empty()) throw std::invalid_argument("zonotope_mixed_volume: empty input");
    int n = zs[0].n;
    if (static_cast<int>(zs.size()) != n)
        throw std::invalid_argument("zonotope_mixed_volume: need n zonotopes in R^n");
    for (const Zonotope& z : zs)
        if (z.n != n) throw std::invalid_argument("zonotope_mixed_volume: ambient mismatch");
    Int factorial_n = 1;
    for (int i = 2; i <= n; ++i) factorial_n *= i;
    // sum over one full generator per zonotope; [-g, g] contributes 2g
    Rat total = 0;
    std::vector<size_t> idx(n, 0);
    while (true) {
        std::vector<Vec> rows;
        bool any_empty = false;
        for (int i = 0; i < n; ++i) {
            if (zs[i].generators.empty()) {
                any_empty = true;
                break;
            }
            rows.push_back(zs[i].generators[idx[i]]);
        }
        if (any_empty) return Rat(0);
        total += abs(det_of_rows(rows));
        int pos = n - 1;
        while (pos >= 0) {
            if (++idx[pos] < zs[pos].generators.size()) break;
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    Rat two_n = 1;
    for (int i = 0; i < n; ++i) two_n *= 2;
    return two_n * total / Rat(factorial_n);
}

Rat mixed_volume_polarization(const std::vector<Polytope>& bodies,
                              const std::vector<int>& multiplicities) {
    if (bodies.empty() || bodies.size() != multiplicities.size())
        throw std::invalid_argument("mixed_volume_polarization: bad arguments");
    int n = bodies[0].ambient_dim();
    int total = std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
    if (total != n)
        throw std::invalid_argument("mixed_volume_polarization: multiplicities must sum to n");
    for (const Polytope& b : bodies)
        if (b.ambient_dim() != n)
            throw std::invalid_argument("mixed_volume_polarization: ambient mismatch");
    if (n > 6) throw std::invalid_argument("mixed_volume_polarization: dimension cap exceeded");

    // Polarization over the slot expansion; volumes are evaluated on the
    // integer dilation grid indexed by per-body multiplicity vectors.
    std::vector<int> slot_body;
    for (size_t i = 0; i < bodies.size(); ++i)
        for (int j = 0; j < multiplicities[i]; ++j) slot_body.push_back(static_cast<int>(i));

    std::map<std::vector<int>, Rat> vol_cache;
    auto volume_at = [&](const std::vector<int>& counts) -> Rat {
        auto it = vol_cache.find(counts);
        if (it != vol_cache.end()) return it->second;
        Polytope acc;
        bool have = false;
        for (size_t i = 0; i < bodies.size(); ++i) {
            if (counts[i] == 0) continue;
            Polytope piece = bodies[i].dilated(Rat(counts[i]));
            acc = have ? minkowski_sum(acc, piece) : piece;
            have = true;
        }
        Rat v = have ? acc.volume() : Rat(0);
        vol_cache.emplace(counts, v);
        return v;
    };

    Int factorial_n = 1;
    for (int i = 2; i <= n; ++i) factorial_n *= i;
    Rat acc = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> counts(bodies.size(), 0);
        int bits = 0;
        for (int s = 0; s < n; ++s)
            if (mask >> s & 1) {
                counts[slot_body[s]] += 1;
                ++bits;
            }
        Rat term = volume_at(counts);
        if ((n - bits) % 2) term = -term;
        acc += term;
    }
    return acc / Rat(factorial_n);
}

Polytope polygon_from_measure(const WeightedDirections& mu) {
    if (mu.n != 2) throw std::invalid_argument("polygon_from_measure: planar measure required");
    if (!mu.all_nonnegative()) throw std::invalid_argument("polygon_from_measure: negative weight");
    if (!mu.is_centered()) throw std::invalid_argument("polygon_from_measure: measure not centered");
    WeightedDirections m = mu;
    m.canonicalize();
    // angular sort of the outward normals, exact: half-plane then cross product
    std::vector<size_t> order(m.entries.size());
    std::iota(order.begin(), order.end(), size_t(0));
    auto half = [](const IVec& v) {
        if (v[1] > 0 || (v[1] == 0 && v[0] > 0)) return 0;
        return 1;
    };
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        const IVec& u = m.entries[a].dir;
        const IVec& v = m.entries[b].dir;
        int hu = half(u), hv = half(v);
        if (hu != hv) return hu < hv;
        Int cross = u[0] * v[1] - u[1] * v[0];
        return cross > 0;
    });
    std::vector<Vec> pts = {Vec(2, Rat(0))};
    Vec cur(2, Rat(0));
    for (size_t i : order) {
        const auto& e = m.entries[i];
        // edge vector: weight * rot90(normal)
        cur[0] += e.weight * Rat(-e.dir[1]);
        cur[1] += e.weight * Rat(e.dir[0]);
        pts.push_back(cur);
    }
    return Polytope::hull(pts, 2);
}

}  // namespace polyalg
