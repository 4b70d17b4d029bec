#include "polyalg/measures.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyalg {

void WeightedDirections::add(const Vec& direction, const Rat& w) {
    if (static_cast<int>(direction.size()) != n)
        throw std::invalid_argument("measure: dimension mismatch");
    if (w == 0 || is_zero(direction)) return;
    Rat scale;
    IVec prim = primitive_direction(direction, &scale);
    add_primitive(prim, w * scale);
}

void WeightedDirections::add(const IVec& direction, const Rat& w) {
    Vec v(direction.size());
    for (size_t i = 0; i < direction.size(); ++i) v[i] = Rat(direction[i]);
    add(v, w);
}

void WeightedDirections::add_primitive(const IVec& prim, const Rat& w) {
    if (w == 0) return;
    for (auto it = entries.begin(); it != entries.end(); ++it) {
        if (it->dir == prim) {
            it->weight += w;
            if (it->weight == 0) entries.erase(it);
            return;
        }
    }
    entries.push_back({prim, w});
}

Vec WeightedDirections::centroid_defect() const {
    Vec s(n, Rat(0));
    for (const Entry& e : entries)
        for (int j = 0; j < n; ++j) s[j] += e.weight * Rat(e.dir[j]);
    return s;
}

bool WeightedDirections::is_symmetric() const {
    for (const Entry& e : entries) {
        IVec neg = negate(e.dir);
        bool found = false;
        for (const Entry& f : entries)
            if (f.dir == neg && f.weight == e.weight) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

bool WeightedDirections::all_nonnegative() const {
    for (const Entry& e : entries)
        if (e.weight < 0) return false;
    return true;
}

void WeightedDirections::canonicalize() {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        int c = compare(a.dir, b.dir);
        if (c != 0) return c < 0;
        return cmp(a.weight, b.weight) < 0;
    });
}

bool operator==(const WeightedDirections& a, const WeightedDirections& b) {
    if (a.n != b.n || a.entries.size() != b.entries.size()) return false;
    WeightedDirections x = a, y = b;
    x.canonicalize();
    y.canonicalize();
    for (size_t i = 0; i < x.entries.size(); ++i)
        if (x.entries[i].dir != y.entries[i].dir || x.entries[i].weight != y.entries[i].weight)
            return false;
    return true;
}

Radical WeightedDirections::mass(size_t i) const {
    const Entry& e = entries[i];
    return Radical(e.weight) * Radical::sqrt_of(Rat(dot(e.dir, e.dir)));
}

WeightedDirections WeightedDirections::negated() const {
    WeightedDirections out{n, entries};
    for (Entry& e : out.entries) e.weight = -e.weight;
    return out;
}

WeightedDirections WeightedDirections::antipodal() const {
    WeightedDirections out{n, {}};
    for (const Entry& e : entries) out.entries.push_back({negate(e.dir), e.weight});
    out.canonicalize();
    return out;
}

WeightedDirections operator+(const WeightedDirections& a, const WeightedDirections& b) {
    if (a.n != b.n) throw std::invalid_argument("measure sum: ambient mismatch");
    WeightedDirections out = a;
    for (const auto& e : b.entries) out.add_primitive(e.dir, e.weight);
    out.canonicalize();
    return out;
}

WeightedDirections operator*(const Rat& c, const WeightedDirections& m) {
    WeightedDirections out{m.n, {}};
    if (c == 0) return out;
    for (const auto& e : m.entries) out.entries.push_back({e.dir, c * e.weight});
    return out;
}

WeightedDirections euler_verdier_deg1(const WeightedDirections& mu) {
    return mu.antipodal().negated();
}

WeightedDirections blaschke_sum(const WeightedDirections& mu, const WeightedDirections& nu) {
    return mu + nu;
}

WeightedDirections restrict_measure(const WeightedDirections& mu, const Subspace& w) {
    if (w.dim() == 0) throw std::invalid_argument("restrict: zero subspace");
    if (w.ambient_dim() != mu.n) throw std::invalid_argument("restrict: ambient mismatch");
    WeightedDirections out{mu.n, {}};
    for (const auto& e : mu.entries) {
        Vec proj = project_onto(w, vec_from_ivec(e.dir));
        if (is_zero(proj)) continue;
        out.add(proj, e.weight);
    }
    out.canonicalize();
    return out;
}

int direction_class_count(const WeightedDirections& mu) {
    std::vector<IVec> classes;
    for (const auto& e : mu.entries) {
        IVec rep = primitive_line(e.dir);
        bool seen = false;
        for (const IVec& c : classes)
            if (c == rep) {
                seen = true;
                break;
            }
        if (!seen) classes.push_back(rep);
    }
    return static_cast<int>(classes.size());
}

}  // namespace polyalg
