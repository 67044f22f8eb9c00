#pragma once

// Shared surface models for the tests. Root configurations are subsets of
// the E8-block simple-root basis vectors; the ample class (18,18,w) with
// w = -C^{-1}(1,...,1) pairs +1 with every simple root and has square 28.

#include <random>

#include "enriques/enriques.hpp"

namespace enriques::fixtures {

inline NSClass chamber_ample() {
    NSClass h;
    h.free = {18, 18, -46, -68, -91, -135, -110, -84, -57, -29};
    return h;
}

inline SurfaceModel model_with_nodes(std::vector<int> e8_nodes, bool classical = true) {
    SurfaceModel m;
    m.classical = classical;
    m.ample = chamber_ample();
    for (int n : e8_nodes) m.nodal_roots.push_back(basis_vector(2 + n));
    return m;
}

// A2: adjacent chain nodes; A3: chain of three; D4: star around node 3
inline SurfaceModel a2_model(bool classical = true) { return model_with_nodes({2, 3}, classical); }
inline SurfaceModel a3_model(bool classical = true) { return model_with_nodes({2, 3, 4}, classical); }
inline SurfaceModel d4_model(bool classical = true) { return model_with_nodes({1, 2, 3, 4}, classical); }
inline SurfaceModel e8_model(bool classical = true) {
    return model_with_nodes({0, 1, 2, 3, 4, 5, 6, 7}, classical);
}

inline SurfaceModel unnodal_model(bool classical = true) {
    SurfaceModel m;
    m.classical = classical;
    m.ample = basis_vector(0) + basis_vector(1);  // e + f
    return m;
}

inline NSClass random_class(std::mt19937& rng, Coord height, bool with_torsion = false) {
    std::uniform_int_distribution<Coord> dist(-height, height);
    NSClass v;
    for (int i = 0; i < kRank; ++i) v.free[i] = dist(rng);
    if (with_torsion) v.torsion = static_cast<int>(dist(rng)) & 1;
    return v;
}

inline MukaiVector random_mukai(std::mt19937& rng, Coord height, bool with_torsion = false) {
    std::uniform_int_distribution<Coord> dist(-height, height);
    Coord r = dist(rng);
    NSClass l = random_class(rng, height, with_torsion);
    Coord a2 = dist(rng);
    if (((r - a2) % 2 + 2) % 2 != 0) ++a2;
    return MukaiVector(r, l, a2);
}

}  // namespace enriques::fixtures
