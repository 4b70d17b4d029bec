#pragma once

#include <map>
#include <string>

#include "polyalg/rational.hpp"

namespace polyalg {

/// Exact element of the real quadratic extension ring Q[sqrt(d) : d squarefree].
///
/// Stored as a finite map d -> q_d with q_d nonzero rational and d a squarefree
/// positive integer; the value is sum q_d * sqrt(d) and d = 1 carries the
/// rational part. Since square roots of distinct squarefree integers are
/// linearly independent over Q, the representation is canonical and the zero
/// test is structural.
class Radical {
  public:
    Radical() = default;
    Radical(const Rat& r) { if (r != 0) terms_[1] = r; }
    Radical(long v) : Radical(Rat(v)) {}

    /// Exact square root of a nonnegative rational, in canonical form.
    static Radical sqrt_of(const Rat& r);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    /// Rational part (the d = 1 coefficient); throws if other terms exist.
    Rat as_rational() const;

    Radical operator-() const;
    Radical& operator+=(const Radical& o);
    Radical& operator-=(const Radical& o);
    friend Radical operator+(Radical a, const Radical& b) { return a += b; }
    friend Radical operator-(Radical a, const Radical& b) { return a -= b; }
    friend Radical operator*(const Radical& a, const Radical& b);
    Radical& operator*=(const Radical& o) { return *this = *this * o; }

    friend bool operator==(const Radical& a, const Radical& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Radical& a, const Radical& b) { return !(a == b); }

    /// Exact sign in {-1, 0, +1}. Zero is structural; nonzero values are
    /// separated from zero by interval refinement of each sqrt(d).
    int sign() const;

    double to_double() const;

    /// Exact rendering "q1*sqrt(d1)+q2*sqrt(d2)+..." with the rational part first.
    std::string to_string() const;
    /// Decimal rendering with the given number of fractional digits.
    std::string to_decimal(int digits = 12) const;

    const std::map<Int, Rat>& terms() const { return terms_; }

    /// Splits m > 0 as s^2 * d with d squarefree, by trial division up to the
    /// factor bound. A residual cofactor with only large prime factors is
    /// treated as squarefree unless it is a perfect square; that case logs a
    /// warning once since it can silently merge distinct radicals.
    static void split_square(const Int& m, Int& s, Int& d);

    /// Total order (lexicographic on the term map), for deterministic containers.
    friend bool operator<(const Radical& a, const Radical& b);

  private:
    std::map<Int, Rat> terms_;
    void insert_term(const Int& d, const Rat& q);
};

inline Radical operator*(const Rat& c, const Radical& a) { return Radical(c) * a; }

}  // namespace polyalg
