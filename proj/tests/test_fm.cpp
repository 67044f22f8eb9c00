#include "doctest.h"

#include "fixtures.hpp"

using namespace enriques;

TEST_CASE("K-theory form on the standard classes") {
    CHECK(fm_ktheory(v_point()) == v_fm_kernel());
    CHECK(fm_ktheory(v_structure_sheaf()) == v_canonical_sheaf());
    CHECK(fm_ktheory(v_fm_kernel()) == v_point());  // involution pins the image
}

TEST_CASE("closed form on the standard classes") {
    CHECK(fm_closed(v_point(), true) == v_fm_kernel());

    // non-classical collapse: (r, L, s) -> (s, -L, r)
    NSClass e = basis_vector(0);
    MukaiVector img = fm_closed(MukaiVector(2, 2 * e, 0), false);
    CHECK(img == MukaiVector(0, -(2 * e), 2));

    CHECK_THROWS_AS(fm_closed(v_structure_sheaf(), true), std::invalid_argument);
    CHECK_NOTHROW(fm_closed(v_structure_sheaf(), false));
}

TEST_CASE("involution, pairing and chi preservation") {
    std::mt19937 rng(43);
    for (int i = 0; i < 1000; ++i) {
        MukaiVector v = fixtures::random_mukai(rng, 4, true);
        MukaiVector w = fixtures::random_mukai(rng, 4, true);
        MukaiVector fv = fm_ktheory(v);
        CHECK(fm_ktheory(fv) == v);
        CHECK(mukai_pair(fv, fm_ktheory(w)) == mukai_pair(v, w));
        CHECK(chi(fv) == chi(v));
        CHECK(fv.r == v.a2);  // rank/degree swap
        CHECK(fv.a2 == v.r);
    }
}

TEST_CASE("closed and K-theory forms agree where both are defined") {
    std::mt19937 rng(47);
    for (int i = 0; i < 1000; ++i) {
        MukaiVector v = fixtures::random_mukai(rng, 4, true);
        CHECK(check_consistency(v, true));
        MukaiVector nc = v;
        nc.c1.torsion = 0;
        CHECK(check_consistency(nc, false));
    }
    CHECK(check_consistency(v_point(), true));
    CHECK(check_consistency(v_structure_sheaf(), true));
}

TEST_CASE("existence verdicts are FM-invariant") {
    SurfaceModel classical = fixtures::a2_model(true);
    SurfaceModel nonclassical = fixtures::a2_model(false);
    std::mt19937 rng(53);
    int tested = 0;
    for (int i = 0; i < 2000 && tested < 100; ++i) {
        MukaiVector v = fixtures::random_mukai(rng, 2, true);
        if (v.r <= 0 || v.a2 <= 0) continue;
        MukaiVector fv = fm_ktheory(v);
        if (!is_primitive(v) || !is_primitive(fv)) continue;
        ++tested;
        for (const SurfaceModel& m : {classical, nonclassical}) {
            Verdict a = decide_existence(m, v);
            Verdict b = decide_existence(m, fv);
            CHECK(a.nonempty == b.nonempty);
        }
    }
    CHECK(tested >= 100);
}
