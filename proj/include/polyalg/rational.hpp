#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace polyalg {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense rational vector in ambient coordinates.
using Vec = std::vector<Rat>;
/// Integer vector, used for primitive directions and normals.
using IVec = std::vector<Int>;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "p/q", or a decimal-free integer string.
inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline int sign_of(const Rat& r) { return sgn(r); }

inline Vec vec_from_ints(const std::vector<long>& v) {
    Vec out;
    out.reserve(v.size());
    for (long x : v) out.emplace_back(x);
    return out;
}

inline Vec vec_from_ivec(const IVec& v) {
    Vec out;
    out.reserve(v.size());
    for (const Int& x : v) out.emplace_back(x);
    return out;
}

inline Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const IVec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

inline Int dot(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const Vec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

inline bool is_zero(const IVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

/// Scales a rational vector to a primitive integer vector pointing the same
/// way. Returns the primitive vector; `scale` receives the positive rational c
/// with v = c * primitive. The zero vector maps to the zero vector, c = 0.
IVec primitive_direction(const Vec& v, Rat* scale = nullptr);

/// Canonical representative of the line through v: primitive with the first
/// nonzero entry positive.
IVec primitive_line(const Vec& v);
IVec primitive_line(const IVec& v);

inline IVec negate(const IVec& v) {
    IVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

inline Vec negate(const Vec& v) {
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

inline Vec add(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline Vec scale(const Rat& c, const Vec& v) {
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

/// Total order on rational vectors (entrywise lexicographic).
int compare(const Vec& a, const Vec& b);
int compare(const IVec& a, const IVec& b);

}  // namespace polyalg
