#pragma once

// Mukai vectors v = (r, L, s/2) on an Enriques surface, stored with the
// third component doubled (a2 = s) so that all arithmetic stays integral.
// The parity constraint a2 == r (mod 2) encodes "r+s is even".

#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "enriques/lattice.hpp"

namespace enriques {

struct ParityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MukaiVector {
    Coord r = 0;
    NSClass c1;
    Coord a2 = 0;  // twice the third component

    MukaiVector() = default;
    MukaiVector(Coord rank, NSClass l, Coord a_doubled) : r(rank), c1(std::move(l)), a2(a_doubled) {
        if (((r - a2) % 2 + 2) % 2 != 0)
            throw ParityViolation("Mukai vector needs r + s even (a2 == r mod 2)");
    }

    bool is_zero() const { return r == 0 && a2 == 0 && c1.is_zero(); }

    friend MukaiVector operator+(const MukaiVector& v, const MukaiVector& w) {
        return MukaiVector(v.r + w.r, v.c1 + w.c1, v.a2 + w.a2);
    }
    friend MukaiVector operator-(const MukaiVector& v, const MukaiVector& w) {
        return MukaiVector(v.r - w.r, v.c1 - w.c1, v.a2 - w.a2);
    }
    friend MukaiVector operator*(Coord n, const MukaiVector& v) {
        return MukaiVector(n * v.r, n * v.c1, n * v.a2);
    }
    friend bool operator==(const MukaiVector& v, const MukaiVector& w) {
        return v.r == w.r && v.a2 == w.a2 && v.c1 == w.c1;
    }
    friend bool operator!=(const MukaiVector& v, const MukaiVector& w) { return !(v == w); }
};

// standard classes
inline MukaiVector v_structure_sheaf() { return MukaiVector(1, NSClass{}, 1); }
inline MukaiVector v_canonical_sheaf() { return MukaiVector(1, canonical_class(), 1); }
inline MukaiVector v_point() { return MukaiVector(0, NSClass{}, 2); }
// v0 = v(O_X + O_X(K_X) - k_x) = (2, K_X, 0)
inline MukaiVector v_fm_kernel() { return MukaiVector(2, canonical_class(), 0); }

// <v,w> = (L,L') - r a' - r' a; integral by the parity constraint
inline Coord mukai_pair(const MukaiVector& v, const MukaiVector& w) {
    return pair(v.c1, w.c1) - (v.r * w.a2 + w.r * v.a2) / 2;
}

inline Coord mukai_self_pair(const MukaiVector& v) { return pair(v.c1, v.c1) - v.r * v.a2; }

// Euler characteristic chi = a + r/2 = (a2 + r)/2
inline Coord chi(const MukaiVector& v) { return (v.a2 + v.r) / 2; }

// Largest n with L.free = n*M; 0 when the free part vanishes (then every
// integer divides). The torsion bit is deliberately excluded: torsion
// conditions in the existence criteria are mod-2 congruences, handled by
// congruent_mod2.
inline Coord div_free(const NSClass& l) {
    Coord g = 0;
    for (Coord c : l.free) g = std::gcd(g, c);
    return g;
}

struct Divisibility {
    Coord g_rs;         // gcd(r, L, s)
    Coord g_primitive;  // gcd(r, L, (r+s)/2)
};

inline Divisibility gcd_divisibility(const MukaiVector& v) {
    if (v.is_zero()) throw std::invalid_argument("gcd_divisibility: zero Mukai vector");
    Coord dl = div_free(v.c1);
    Coord g_rs = std::gcd(std::gcd(iabs(v.r), dl), iabs(v.a2));
    Coord g_prim = std::gcd(std::gcd(iabs(v.r), dl), iabs((v.r + v.a2) / 2));
    return {g_rs, g_prim};
}

inline bool is_primitive(const MukaiVector& v) { return gcd_divisibility(v).g_primitive == 1; }

// x == y in NS(X)/2NS(X); the torsion class survives mod 2
inline bool congruent_mod2(const NSClass& x, const NSClass& y) {
    if (x.torsion != y.torsion) return false;
    for (int i = 0; i < kRank; ++i)
        if (((x.free[i] - y.free[i]) % 2 + 2) % 2 != 0) return false;
    return true;
}

}  // namespace enriques
