#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodge/plus.hpp"

using namespace hodge;

namespace {

GradedModule poly(int n) { return GradedModule::localization(MonomialLocalization(n, {})); }

}  // namespace

TEST_CASE("plus module pieces") {
    GradedModule p = plus(poly(1));
    // piece (a, k) nonzero iff a >= 0 and k <= -1
    CHECK(p.piece({0, -1}) == 1);
    CHECK(p.piece({3, -5}) == 1);
    CHECK(p.piece({0, 0}) == 0);
    CHECK(p.piece({0, 1}) == 0);
    CHECK(p.piece({-1, -1}) == 0);
    CHECK_THROWS_AS(p.piece({0}), input_error);
}

TEST_CASE("phi maps the generator to z^-1 dz") {
    PlusChainMap cm = phi_chain_map(poly(1));
    // p=0: basis {1} maps to the dz-wedge over the z^-1 layer
    REQUIRE(cm.maps.size() == 2);
    CHECK(cm.maps[0].rows() == 1);
    CHECK(cm.maps[0].cols() == 1);
    CHECK(cm.maps[0].at(0, 0) == 1);
    CHECK(cm.plus_complex.spaces[1] == std::vector<IndexSet>{{1}});
}

TEST_CASE("phi is injective on every strand piece") {
    for (GradedModule base :
         {poly(2), GradedModule::localization(MonomialLocalization(2, {0, 1}))}) {
        PlusChainMap cm = phi_chain_map(base);
        for (const RatMatrix& m : cm.maps) CHECK(rank(m) == m.cols());
    }
}

TEST_CASE("phi induces isomorphisms on homology") {
    CHECK(verify_phi_iso(poly(1)).is_iso);
    CHECK(verify_phi_iso(GradedModule::localization(MonomialLocalization(1, {0}))).is_iso);
    CHECK(verify_phi_iso(GradedModule::localization(MonomialLocalization(2, {0, 1}))).is_iso);
    CHECK(verify_phi_iso(GradedModule::quotient(MonomialLocalization(1, {0}),
                                                MonomialLocalization(1, {})))
              .is_iso);
}

TEST_CASE("phi iso shifts the Kunneth pattern by one") {
    PhiIsoResult r = verify_phi_iso(GradedModule::localization(MonomialLocalization(1, {0})));
    CHECK(r.h_base == std::vector<int>{1, 1});
    CHECK(r.h_plus == std::vector<int>{0, 1, 1});
    CHECK(r.ranks == std::vector<int>{1, 1});
}

TEST_CASE("plus local cohomology identity") {
    CHECK(verify_plus_local_cohomology(CechSpec(1, {{1}}), 1));
    CHECK(verify_plus_local_cohomology(CechSpec(2, {{1, 1}}), 1));
    CHECK(verify_plus_local_cohomology(CechSpec(2, {{1, 0}, {0, 1}}), 2));
    // vanishing index: both sides zero
    CHECK(verify_plus_local_cohomology(CechSpec(1, {{1}}), 0));
    CHECK(verify_plus_local_cohomology(CechSpec(2, {{1, 1}}), 2));
}
