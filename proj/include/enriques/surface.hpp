#pragma once

// Surface model: a configuration of nodal roots (classes of irreducible
// (-2)-curves), a polarization, and the searches built on them: Weyl
// reduction into the nef chamber, effectivity decisions, nodal cycles,
// and the isotropic-companion search.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "enriques/mukai.hpp"

namespace enriques {

struct SearchBoundExceeded : LatticeError {
    using LatticeError::LatticeError;
};
struct NotFoundWithinBound : LatticeError {
    using LatticeError::LatticeError;
};
struct ModelError : LatticeError {
    using LatticeError::LatticeError;
};

struct SurfaceModel {
    bool classical = true;  // K_X != 0
    std::vector<NSClass> nodal_roots;
    NSClass ample;
    Coord coeff_bound = 6;   // nodal-cycle coefficient search bound
    Coord height_bound = 6;  // enumeration height bound
    std::uint64_t search_limit = kDefaultSearchLimit;

    // On a non-classical surface K_X = 0, so the torsion bit is meaningless.
    NSClass normalize(NSClass x) const {
        if (!classical) x.torsion = 0;
        return x;
    }
    MukaiVector normalize(MukaiVector v) const {
        v.c1 = normalize(v.c1);
        return v;
    }
};

inline std::vector<std::string> validate(const SurfaceModel& model) {
    std::vector<std::string> bad;
    if (pair(model.ample, model.ample) <= 0) bad.push_back("ample class has non-positive square");
    if (!model.classical && model.ample.torsion != 0)
        bad.push_back("non-classical model but ample class has torsion bit set");
    for (std::size_t i = 0; i < model.nodal_roots.size(); ++i) {
        const NSClass& d = model.nodal_roots[i];
        std::string tag = "root #" + std::to_string(i);
        if (d.torsion != 0) bad.push_back(tag + " has nonzero torsion bit");
        if (pair(d, d) != -2) bad.push_back(tag + " does not have self-pairing -2");
        if (pair(model.ample, d) <= 0) bad.push_back("ample class not positive on " + tag);
        for (std::size_t j = i + 1; j < model.nodal_roots.size(); ++j) {
            if (model.nodal_roots[j] == d) bad.push_back(tag + " duplicated");
            else if (pair(d, model.nodal_roots[j]) < 0)
                bad.push_back(tag + " and root #" + std::to_string(j) + " pair negatively");
        }
    }
    if (model.coeff_bound < 1) bad.push_back("coeff_bound must be >= 1");
    if (model.height_bound < 1) bad.push_back("height_bound must be >= 1");
    return bad;
}

struct ReductionTrace {
    struct Step {
        NSClass root;
        NSClass after;
    };
    std::vector<Step> steps;
    NSClass final;
};

// Iterated reflection in nodal roots pairing negatively with the current
// class; each step strictly decreases pair(., H), so this terminates.
inline ReductionTrace weyl_reduce(const SurfaceModel& model, const NSClass& d) {
    ReductionTrace trace;
    NSClass cur = model.normalize(d);
    const std::size_t cap = 100000;
    for (std::size_t it = 0; it <= cap; ++it) {
        bool moved = false;
        for (const NSClass& delta : model.nodal_roots) {
            if (pair(cur, delta) < 0) {
                cur = reflect(delta, cur);
                trace.steps.push_back({delta, cur});
                moved = true;
                break;
            }
        }
        if (!moved) {
            trace.final = cur;
            return trace;
        }
    }
    throw ModelError("weyl_reduce: iteration cap hit; root configuration is inconsistent");
}

// Applies the inverse of the Weyl word recorded in a trace.
inline NSClass pull_back(const ReductionTrace& trace, NSClass x) {
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it)
        x = reflect(it->root, x);
    return x;
}

namespace detail {

// All coefficient vectors a (0 <= a_i <= coeff_bound) with
// sum a_i delta_i == target. Prunes on the pairing with the ample class,
// which is positive on every root.
inline void root_representations(const SurfaceModel& model, const NSClass& target,
                                 std::vector<std::vector<Coord>>& out) {
    const std::size_t k = model.nodal_roots.size();
    std::vector<Coord> hroot(k);
    for (std::size_t i = 0; i < k; ++i) hroot[i] = pair(model.ample, model.nodal_roots[i]);
    std::vector<Coord> a(k, 0);
    auto rec = [&](auto&& self, std::size_t i, NSClass rem, Coord rem_h) -> void {
        if (rem_h < 0) return;
        if (i == k) {
            if (rem.is_zero()) out.push_back(a);
            return;
        }
        Coord top = std::min(model.coeff_bound, rem_h / hroot[i]);
        for (Coord c = 0; c <= top; ++c) {
            a[i] = c;
            self(self, i + 1, rem - c * model.nodal_roots[i], rem_h - c * hroot[i]);
        }
        a[i] = 0;
    };
    NSClass t = target;
    t.torsion = 0;  // roots are torsion-free; caller checks the bit
    rec(rec, 0, t, pair(model.ample, target));
}

inline NSClass combine(const SurfaceModel& model, const std::vector<Coord>& a) {
    NSClass d;
    for (std::size_t i = 0; i < a.size(); ++i) d = d + a[i] * model.nodal_roots[i];
    return d;
}

}  // namespace detail

// Is D a nonnegative integer combination of the nodal roots?
inline std::optional<std::vector<Coord>> root_span_representation(const SurfaceModel& model,
                                                                  const NSClass& d) {
    NSClass dd = model.normalize(d);
    if (dd.torsion != 0) return std::nullopt;
    std::vector<std::vector<Coord>> reps;
    detail::root_representations(model, dd, reps);
    if (reps.empty()) return std::nullopt;
    return reps.front();
}

enum class Effectivity { Effective, NotEffective, Undecided };

// Decision procedure: zero and pure-torsion classes have no sections;
// classes whose Weyl reduction has square >= 0 are effective iff the
// reduction pairs positively with the ample class (Riemann-Roch); classes
// of negative square are decided only inside the nonnegative span of the
// nodal roots, everything else stays Undecided.
inline Effectivity effectivity(const SurfaceModel& model, const NSClass& d) {
    NSClass dd = model.normalize(d);
    if (dd.free_zero()) return Effectivity::NotEffective;  // 0 and K_X
    ReductionTrace trace = weyl_reduce(model, dd);
    Coord n = pair(trace.final, trace.final);
    if (n >= 0) return pair(trace.final, model.ample) > 0 ? Effectivity::Effective
                                                          : Effectivity::NotEffective;
    if (root_span_representation(model, dd)) return Effectivity::Effective;
    if (pair(dd, model.ample) <= 0) return Effectivity::NotEffective;
    return Effectivity::Undecided;
}

inline bool is_effective(const SurfaceModel& model, const NSClass& d) {
    switch (effectivity(model, d)) {
        case Effectivity::Effective: return true;
        case Effectivity::NotEffective: return false;
        default:
            throw SearchBoundExceeded(
                "is_effective: negative-square class outside the bounded root span");
    }
}

inline bool is_nef(const SurfaceModel& model, const NSClass& d) {
    NSClass dd = model.normalize(d);
    for (const NSClass& delta : model.nodal_roots)
        if (pair(dd, delta) < 0) return false;
    return pair(dd, model.ample) >= 0;
}

// Nodal cycle test (combinatorial form): D is a nonnegative root
// combination with (D^2) = -2 such that every splitting D = C + C' into
// two nonzero nonnegative root combinations has (C^2) < 0 and (C'^2) < 0.
inline bool is_nodal_cycle(const SurfaceModel& model, const NSClass& d) {
    NSClass dd = model.normalize(d);
    if (dd.torsion != 0 || pair(dd, dd) != -2) return false;
    std::vector<std::vector<Coord>> reps;
    detail::root_representations(model, dd, reps);
    if (reps.empty()) return false;
    for (const auto& a : reps) {
        std::vector<Coord> b(a.size(), 0);
        // iterate over all proper splittings b, 0 < b < a pointwise-bounded
        auto next = [&]() {
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (b[i] < a[i]) {
                    ++b[i];
                    return true;
                }
                b[i] = 0;
            }
            return false;
        };
        while (next()) {
            bool proper = false;
            for (std::size_t i = 0; i < a.size(); ++i)
                if (b[i] < a[i]) proper = true;
            if (!proper) continue;  // b == a
            NSClass c = detail::combine(model, b);
            NSClass cprime = dd - c;
            if (pair(c, c) >= 0 || pair(cprime, cprime) >= 0) return false;
        }
    }
    return true;
}

// Smallest (lexicographic coefficient vector) nodal cycle congruent to
// target mod 2, if any exists within coeff_bound.
inline std::optional<NSClass> find_nodal_cycle_mod2(const SurfaceModel& model,
                                                    const NSClass& target) {
    NSClass t = model.normalize(target);
    if (t.torsion != 0) return std::nullopt;  // nodal cycles are torsion-free
    const std::size_t k = model.nodal_roots.size();
    if (k == 0) return std::nullopt;
    std::vector<Coord> a(k, 0);
    std::uint64_t visited = 0;
    // odometer in lexicographic order: increment last coordinate first
    auto next = [&]() {
        for (std::size_t i = k; i-- > 0;) {
            if (a[i] < model.coeff_bound) {
                ++a[i];
                return true;
            }
            a[i] = 0;
        }
        return false;
    };
    std::vector<std::pair<std::vector<Coord>, NSClass>> hits;
    while (next()) {
        if (++visited > model.search_limit)
            throw SearchBoundExceeded("find_nodal_cycle_mod2: coefficient search limit hit");
        NSClass d = detail::combine(model, a);
        if (pair(d, d) != -2) continue;
        if (!congruent_mod2(d, t)) continue;
        if (is_nodal_cycle(model, d)) hits.push_back({a, d});
    }
    if (hits.empty()) return std::nullopt;
    auto best = std::min_element(hits.begin(), hits.end(),
                                 [](const auto& x, const auto& y) { return x.first < y.first; });
    return best->second;
}

inline Coord isqrt(Coord n) {
    Coord r = Coord(std::sqrt(double(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// An effective isotropic f with 0 < (D,f) <= floor(sqrt((D^2))): reduce D
// to nef form, search isotropic classes by increasing height, pull the
// hit back through the inverse reflections.
inline NSClass isotropic_companion(const SurfaceModel& model, const NSClass& d) {
    NSClass dd = model.normalize(d);
    Coord d2 = pair(dd, dd);
    if (d2 <= 0) throw std::invalid_argument("isotropic_companion: needs (D^2) > 0");
    if (effectivity(model, dd) != Effectivity::Effective)
        throw std::invalid_argument("isotropic_companion: D must be effective");
    Coord bound = isqrt(d2);
    ReductionTrace trace = weyl_reduce(model, dd);
    for (Coord h = 1; h <= model.height_bound; ++h) {
        for (const NSClass& cand : enumerate_isotropic(trace.final, bound, h, model.search_limit)) {
            if (effectivity(model, cand) != Effectivity::Effective) continue;
            NSClass f = pull_back(trace, cand);
            Coord p = pair(dd, f);
            // postcondition re-checked on the pulled-back class
            if (pair(f, f) == 0 && p > 0 && p <= bound &&
                effectivity(model, f) == Effectivity::Effective)
                return f;
        }
    }
    throw NotFoundWithinBound("isotropic_companion: exhausted height bound; raise height_bound");
}

}  // namespace enriques
