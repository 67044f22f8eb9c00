#pragma once

// Existence criteria for moduli of stable sheaves: the four-case rank>0
// criterion, its rank-0 variant, and the rank-2 spherical criterion, with
// dimension reporting.

#include <optional>
#include <string>
#include <vector>

#include "enriques/surface.hpp"

namespace enriques {

enum class TheoremCase { i, ii, iii, iv, spherical_rank2, inapplicable, none };

inline const char* to_string(TheoremCase c) {
    switch (c) {
        case TheoremCase::i: return "i";
        case TheoremCase::ii: return "ii";
        case TheoremCase::iii: return "iii";
        case TheoremCase::iv: return "iv";
        case TheoremCase::spherical_rank2: return "spherical-rank2";
        case TheoremCase::inapplicable: return "inapplicable";
        case TheoremCase::none: return "none";
    }
    return "?";
}

enum class Existence { Nonempty, Empty, Unknown, Inapplicable };

inline const char* to_string(Existence e) {
    switch (e) {
        case Existence::Nonempty: return "nonempty";
        case Existence::Empty: return "empty";
        case Existence::Unknown: return "unknown";
        case Existence::Inapplicable: return "inapplicable";
    }
    return "?";
}

struct Verdict {
    Existence nonempty = Existence::Inapplicable;
    TheoremCase matched = TheoremCase::inapplicable;
    std::optional<NSClass> witness;       // nodal cycle for cases iv / spherical
    std::optional<Coord> dimension;
    std::vector<std::string> notes;
};

struct DimensionBounds {
    Coord lower;
    Coord expected;
};

// lower = (L^2) - rs + 1; expected clamps the spherical case at 0
inline DimensionBounds dimension_bounds(const MukaiVector& v) {
    Coord q = mukai_self_pair(v);
    return {q + 1, std::max<Coord>(q + 1, 0)};
}

namespace detail {

inline void fill_dimension(Verdict& out, const MukaiVector& v, Coord q) {
    if (out.nonempty != Existence::Nonempty) return;
    if (out.matched == TheoremCase::iii) {
        out.dimension = 2;  // case (iii) spaces are surfaces
        return;
    }
    if (q <= -1) {
        out.dimension = 0;  // rigid point
        return;
    }
    out.dimension = q + 1;
    if (v.r % 2 == 0)
        out.notes.push_back("dimension is the expected value (lower bound); smoothness is proved only for odd rank");
}

// the shared four-case criterion; r may be 0 (rank-0 remark)
inline Verdict decide_cases(const SurfaceModel& model, const MukaiVector& vin) {
    MukaiVector v = model.normalize(vin);
    Verdict out;
    Coord q = mukai_self_pair(v);  // (L^2) - r*s
    Divisibility g = gcd_divisibility(v);

    if (g.g_primitive != 1) {
        out.nonempty = Existence::Inapplicable;
        out.matched = TheoremCase::inapplicable;
        out.notes.push_back("Mukai vector is not primitive; the criterion assumes primitivity");
        return out;
    }
    if (q < -2) {
        out.nonempty = Existence::Empty;
        out.matched = TheoremCase::none;
        out.notes.push_back("<v^2> < -2: no stable sheaf exists");
        return out;
    }
    if (g.g_rs == 1 && q >= -1) {
        out.nonempty = Existence::Nonempty;
        out.matched = TheoremCase::i;
    } else if (g.g_rs == 2 && q >= 2) {
        out.nonempty = Existence::Nonempty;
        out.matched = TheoremCase::ii;
    } else if (g.g_rs == 2 && q == 0) {
        // L == (r/2) K_X mod 2; g_rs = 2 forces r even
        NSClass target = (v.r / 2) * canonical_class();
        if (congruent_mod2(v.c1, model.normalize(target))) {
            out.nonempty = Existence::Nonempty;
            out.matched = TheoremCase::iii;
        } else {
            out.nonempty = Existence::Empty;
            out.matched = TheoremCase::none;
        }
    } else if (q == -2) {
        // L == D + (r/2) K_X mod 2 for a nodal cycle D
        std::vector<std::pair<NSClass, std::string>> targets;
        if (v.r % 2 == 0) {
            targets.push_back({model.normalize(v.c1 + (v.r / 2) * canonical_class()), ""});
        } else {
            // (r/2) K_X is not integral for odd r; test both torsion shifts
            targets.push_back({model.normalize(v.c1), "congruence tested with no canonical shift"});
            targets.push_back({model.normalize(v.c1 + canonical_class()),
                               "congruence tested with canonical shift K_X"});
        }
        out.nonempty = Existence::Empty;
        out.matched = TheoremCase::none;
        for (const auto& [target, note] : targets) {
            try {
                if (auto d = find_nodal_cycle_mod2(model, target)) {
                    out.nonempty = Existence::Nonempty;
                    out.matched = TheoremCase::iv;
                    out.witness = d;
                    if (!note.empty()) out.notes.push_back(note);
                    break;
                }
            } catch (const SearchBoundExceeded&) {
                out.nonempty = Existence::Unknown;
                out.matched = TheoremCase::none;
                out.notes.push_back("nodal-cycle search exceeded the coefficient bound");
            }
        }
    } else {
        out.nonempty = Existence::Empty;
        out.matched = TheoremCase::none;
    }
    detail::fill_dimension(out, v, q);
    return out;
}

}  // namespace detail

inline Verdict decide_existence(const SurfaceModel& model, const MukaiVector& v) {
    if (v.r <= 0) {
        Verdict out;
        out.nonempty = Existence::Inapplicable;
        out.matched = TheoremCase::inapplicable;
        out.notes.push_back(v.r == 0 ? "rank 0: use the rank-0 criterion"
                                     : "negative rank is not supported");
        return out;
    }
    return detail::decide_cases(model, v);
}

inline Verdict decide_rank0(const SurfaceModel& model, const MukaiVector& v) {
    Verdict out;
    if (v.r != 0) {
        out.notes.push_back("rank-0 criterion needs r = 0");
        return out;
    }
    if (pair(v.c1, model.ample) <= 0) {
        out.notes.push_back("rank-0 criterion needs (L,H) > 0");
        return out;
    }
    out = detail::decide_cases(model, v);
    out.notes.push_back("decided via the rank-0 extension of the existence criterion");
    return out;
}

// rank-2 spherical criterion: v = (2, L, s/2) with (L^2) - 2s = -2 is
// realized iff L == D + K_X mod 2 for a nodal cycle D
inline Verdict decide_spherical_rank2(const SurfaceModel& model, const MukaiVector& vin) {
    MukaiVector v = model.normalize(vin);
    Verdict out;
    if (v.r != 2 || mukai_self_pair(v) != -2) {
        out.notes.push_back("spherical rank-2 criterion needs r = 2 and <v^2> = -2");
        return out;
    }
    NSClass target = model.normalize(v.c1 + canonical_class());
    try {
        if (auto d = find_nodal_cycle_mod2(model, target)) {
            out.nonempty = Existence::Nonempty;
            out.matched = TheoremCase::spherical_rank2;
            out.witness = d;
            out.dimension = 0;
        } else {
            out.nonempty = Existence::Empty;
            out.matched = TheoremCase::none;
        }
    } catch (const SearchBoundExceeded&) {
        out.nonempty = Existence::Unknown;
        out.matched = TheoremCase::none;
        out.notes.push_back("nodal-cycle search exceeded the coefficient bound");
    }
    return out;
}

}  // namespace enriques
