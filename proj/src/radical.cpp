#include "polyalg/radical.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace polyalg {

namespace {
constexpr unsigned long kFactorBound = 1000000;
}

IVec primitive_direction(const Vec& v, Rat* scale) {
    IVec out(v.size());
    if (is_zero(v)) {
        if (scale) *scale = 0;
        return out;
    }
    Int den_lcm = 1;
    for (const Rat& x : v) lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        Rat t = v[i] * Rat(den_lcm);
        out[i] = t.get_num();
        gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
    }
    for (Int& x : out) x /= g;
    if (scale) {
        // v = (g / den_lcm) * out
        Rat c(g, den_lcm);
        c.canonicalize();
        *scale = c;
    }
    return out;
}

IVec primitive_line(const Vec& v) {
    IVec p = primitive_direction(v);
    for (const Int& x : p) {
        if (x > 0) return p;
        if (x < 0) return negate(p);
    }
    return p;
}

IVec primitive_line(const IVec& v) {
    Vec q(v.size());
    for (size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
    return primitive_line(q);
}

int compare(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

int compare(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

void Radical::split_square(const Int& m, Int& s, Int& d) {
    if (m <= 0) throw std::domain_error("split_square: nonpositive input");
    s = 1;
    d = 1;
    Int rest = m;
    for (unsigned long p = 2; p <= kFactorBound; p = (p == 2 ? 3 : p + 2)) {
        if (Int(p) * Int(p) > rest) break;
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
        int e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            rest /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) s *= p;
        if (e % 2) d *= p;
    }
    if (rest > 1) {
        if (mpz_perfect_square_p(rest.get_mpz_t())) {
            Int r;
            mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
            s *= r;
        } else if (Int(kFactorBound) * Int(kFactorBound) < rest) {
            static bool warned = false;
            if (!warned) {
                std::fprintf(stderr,
                             "polyalg: warning: residual factor beyond trial-division bound "
                             "assumed squarefree\n");
                warned = true;
            }
            d *= rest;
        } else {
            // rest <= bound^2 with no factor <= bound means rest is prime
            d *= rest;
        }
    }
}

Radical Radical::sqrt_of(const Rat& r) {
    if (r < 0) throw std::domain_error("sqrt of negative rational");
    if (r == 0) return Radical();
    // sqrt(p/q) = sqrt(p*q)/q
    Int pq = r.get_num() * r.get_den();
    Int s, d;
    split_square(pq, s, d);
    Radical out;
    Rat coeff(s, r.get_den());
    coeff.canonicalize();
    out.terms_[d] = coeff;
    return out;
}

bool Radical::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rat Radical::as_rational() const {
    if (terms_.empty()) return Rat(0);
    if (!is_rational()) throw std::domain_error("radical value is irrational");
    return terms_.begin()->second;
}

void Radical::insert_term(const Int& d, const Rat& q) {
    if (q == 0) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_.emplace(d, q);
    } else {
        it->second += q;
        if (it->second == 0) terms_.erase(it);
    }
}

Radical Radical::operator-() const {
    Radical out;
    for (const auto& [d, q] : terms_) out.terms_.emplace(d, -q);
    return out;
}

Radical& Radical::operator+=(const Radical& o) {
    for (const auto& [d, q] : o.terms_) insert_term(d, q);
    return *this;
}

Radical& Radical::operator-=(const Radical& o) {
    for (const auto& [d, q] : o.terms_) insert_term(d, -q);
    return *this;
}

Radical operator*(const Radical& a, const Radical& b) {
    Radical out;
    for (const auto& [d1, q1] : a.terms_) {
        for (const auto& [d2, q2] : b.terms_) {
            // sqrt(d1)*sqrt(d2) = g*sqrt((d1/g)*(d2/g)) with g = gcd(d1,d2),
            // exact because d1, d2 are squarefree.
            Int g;
            gcd(g.get_mpz_t(), d1.get_mpz_t(), d2.get_mpz_t());
            Int d = (d1 / g) * (d2 / g);
            out.insert_term(d, q1 * q2 * Rat(g));
        }
    }
    return out;
}

int Radical::sign() const {
    if (terms_.empty()) return 0;
    if (terms_.size() == 1) return sgn(terms_.begin()->second);
    bool all_pos = true, all_neg = true;
    for (const auto& [d, q] : terms_) (sgn(q) > 0 ? all_neg : all_pos) = false;
    if (all_pos) return 1;
    if (all_neg) return -1;
    // Interval refinement: enclose each sqrt(d) in [s, s+1]/2^k and sum.
    unsigned bits = 64;
    for (int round = 0; round < 16; ++round, bits *= 2) {
        Int two_k = 1;
        mpz_mul_2exp(two_k.get_mpz_t(), two_k.get_mpz_t(), bits);
        Rat lo = 0, hi = 0;
        for (const auto& [d, q] : terms_) {
            Int scaled = d * two_k * two_k;
            Int s;
            mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
            Rat root_lo(s, two_k), root_hi(s + 1, two_k);
            root_lo.canonicalize();
            root_hi.canonicalize();
            if (sgn(q) > 0) {
                lo += q * root_lo;
                hi += q * root_hi;
            } else {
                lo += q * root_hi;
                hi += q * root_lo;
            }
        }
        if (lo > 0) return 1;
        if (hi < 0) return -1;
    }
    throw std::runtime_error("radical sign: interval precision exhausted");
}

double Radical::to_double() const {
    double acc = 0;
    for (const auto& [d, q] : terms_) acc += q.get_d() * std::sqrt(d.get_d());
    return acc;
}

std::string Radical::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, q] : terms_) {
        if (!first && sgn(q) > 0) os << "+";
        first = false;
        if (d == 1) {
            os << q.get_str();
        } else {
            os << q.get_str() << "*sqrt(" << d.get_str() << ")";
        }
    }
    return os.str();
}

std::string Radical::to_decimal(int digits) const {
    // Scaled integer evaluation: floor(value * 10^digits) with interval sqrt.
    Int pow10 = 1;
    for (int i = 0; i < digits; ++i) pow10 *= 10;
    unsigned bits = 64 + 4 * static_cast<unsigned>(digits);
    Int two_k = 1;
    mpz_mul_2exp(two_k.get_mpz_t(), two_k.get_mpz_t(), bits);
    Rat acc = 0;
    for (const auto& [d, q] : terms_) {
        Int scaled = d * two_k * two_k;
        Int s;
        mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
        Rat root(s, two_k);
        root.canonicalize();
        acc += q * root;
    }
    Rat scaled = acc * Rat(pow10);
    Int fl;
    mpz_tdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    bool neg = fl < 0;
    if (neg) fl = -fl;
    std::string digits_str = fl.get_str();
    while (static_cast<int>(digits_str.size()) <= digits) digits_str.insert(0, "0");
    std::string out = digits_str.substr(0, digits_str.size() - digits) + "." +
                      digits_str.substr(digits_str.size() - digits);
    if (neg) out.insert(0, "-");
    return out;
}

bool operator<(const Radical& a, const Radical& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        int c = cmp(ia->second, ib->second);
        if (c != 0) return c < 0;
    }
    return ia == a.terms_.end() && ib != b.terms_.end();
}

}  // namespace polyalg
