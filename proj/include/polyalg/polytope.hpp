#pragma once

#include <vector>

#include "polyalg/measures.hpp"
#include "polyalg/qmatrix.hpp"

namespace polyalg {

/// One facet of a full-dimensional rational polytope. The normal is a
/// primitive integer vector; the weight w = vol_{n-1}(F) / |normal| is
/// rational, so the irrational facet volume w * sqrt(normal . normal) is only
/// materialized on demand.
struct FacetData {
    IVec normal;
    Rat offset;
    Rat weight;
};

/// Rational V-polytope with derived facet data. Vertices are exactly the
/// extreme points, sorted lexicographically. Lower-dimensional input is
/// allowed and flagged; degenerate polytopes carry vertices but no facets.
class Polytope {
  public:
    Polytope() : n_(0), dim_(-1) {}

    static Polytope hull(const std::vector<Vec>& points, int ambient_dim);
    static Polytope box(const Vec& lo, const Vec& hi);
    static Polytope unit_cube(int n);       // [-1/2, 1/2]^n
    static Polytope simplex(int n);         // conv(0, e_1, ..., e_n)
    static Polytope segment(const Vec& a, const Vec& b);

    int ambient_dim() const { return n_; }
    int dim() const { return dim_; }
    bool degenerate() const { return dim_ < n_; }
    bool empty() const { return dim_ < 0; }
    const std::vector<Vec>& vertices() const { return verts_; }
    const std::vector<FacetData>& facets() const { return facets_; }

    /// Exact Lebesgue volume; zero for degenerate polytopes.
    const Rat& volume() const { return volume_; }

    /// The facet-normal measure (surface area measure): entries (normal,
    /// weight). Requires a full-dimensional polytope; centered by
    /// construction.
    WeightedDirections surface_class() const;

    bool contains(const Vec& p) const;
    bool is_centrally_symmetric() const;
    Vec vertex_centroid() const;

    Polytope translated(const Vec& t) const;
    Polytope negated() const;
    Polytope dilated(const Rat& a) const;  // a > 0

  private:
    int n_;
    int dim_;
    std::vector<Vec> verts_;
    std::vector<FacetData> facets_;
    Rat volume_;
};

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

/// Mixed area of two polygons (possibly degenerate segments):
/// (vol(A+B) - vol(A) - vol(B)) / 2.
Rat mixed_area(const Polytope& a, const Polytope& b);

/// Centered zonotope sum([-g, g]) given by its half-generators g.
struct Zonotope {
    int n = 0;
    std::vector<Vec> generators;

    void add_generator(const Vec& g);
    /// Support function value sum |<g, x>|.
    Rat support(const Vec& x) const;
    /// Vertex representation (hull of sign combinations of the generators).
    Polytope to_polytope() const;

    friend Zonotope operator+(const Zonotope& a, const Zonotope& b);
};

/// Projection body of a full-dimensional polytope: the zonotope with one
/// half-generator per antipodal facet-normal class, carrying the average of
/// the two opposite facet weights. Satisfies h(x) = 1/2 sum vol(F_i) |<u_i, x>|.
Zonotope projection_body(const Polytope& p);

/// Mixed volume of n zonotopes in R^n under the polarized-volume convention
/// vol(sum a_i Z_i) = sum multinomial(n; b) V(Z[b]) a^b, so equal arguments
/// give the volume. Each full generator contributes the length-2 segment
/// [-g, g].
Rat zonotope_mixed_volume(const std::vector<Zonotope>& zs);

/// Mixed volume V(P_1[m_1], ..., P_k[m_k]) with multiplicities summing to n,
/// extracted from exact volumes of Minkowski sums over an integer dilation
/// grid (polarization identity).
Rat mixed_volume_polarization(const std::vector<Polytope>& bodies,
                              const std::vector<int>& multiplicities);

/// Reconstructs the convex polygon (first vertex at the origin) whose
/// facet-normal measure equals mu. Requires nonnegative weights, exact
/// centering, and at least 3 non-parallel directions; with fewer classes the
/// result is the degenerate hull of the concatenated edges.
Polytope polygon_from_measure(const WeightedDirections& mu);

}  // namespace polyalg
