#pragma once

// Action of the Fourier-Mukai involution on Mukai vectors. The K-theory
// form  E -> chi(E)(O_X + O_X(K_X)) - E  is the authoritative one; the
// closed form matches it wherever its canonical-class bookkeeping is
// well defined (even rank, or any rank on a non-classical surface).

#include "enriques/mukai.hpp"

namespace enriques {

// chi(v) (O_X + O_X(K_X)) - v, componentwise:
//   (r, L, a2) -> (a2, -L + chi(v) K_X, r)
inline MukaiVector fm_ktheory(const MukaiVector& v) {
    NSClass sum_c1 = canonical_class();  // c1 of O_X + O_X(K_X)
    NSClass l = chi(v) * sum_c1 - v.c1;
    return MukaiVector(v.a2, l, v.r);
}

// the closed form (r, M + (r/2)K_X, s/2) -> (s, -(M + (s/2)K_X) + s K_X, r/2)
inline MukaiVector fm_closed(const MukaiVector& v, bool classical) {
    if (!classical) {
        NSClass l = -v.c1;
        l.torsion = 0;
        return MukaiVector(v.a2, l, v.r);
    }
    if (v.r % 2 != 0)
        throw std::invalid_argument(
            "fm_closed: odd rank on a classical surface has no canonical torsion split; use fm_ktheory");
    Coord s = v.a2;  // parity invariant makes s even with r
    NSClass m = v.c1 - (v.r / 2) * canonical_class();
    NSClass l = -(m + (s / 2) * canonical_class()) + s * canonical_class();
    return MukaiVector(s, l, v.r);
}

inline bool fm_closed_defined(const MukaiVector& v, bool classical) {
    return !classical || v.r % 2 == 0;
}

inline bool check_consistency(const MukaiVector& v, bool classical) {
    if (!fm_closed_defined(v, classical)) return true;
    MukaiVector k = fm_ktheory(v);
    if (!classical) k.c1.torsion = 0;
    return fm_closed(v, classical) == k;
}

}  // namespace enriques
