#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodge/cech.hpp"

using namespace hodge;

TEST_CASE("localization pieces") {
    MonomialLocalization t(2, {});
    MonomialLocalization tx(2, {0});
    MonomialLocalization txy(2, {0, 1});
    CHECK(piece_dim(t, {0, 0}) == 1);
    CHECK(piece_dim(t, {-1, 0}) == 0);
    CHECK(piece_dim(tx, {-1, 0}) == 1);
    CHECK(piece_dim(tx, {-1, -1}) == 0);
    CHECK(piece_dim(txy, {-5, -7}) == 1);
    CHECK_THROWS_AS(MonomialLocalization(2, {2}), input_error);
    // support-set semantics: duplicates collapse
    CHECK(MonomialLocalization(2, {0, 0}).sigma == IndexSet{0});
}

TEST_CASE("piece actions") {
    MonomialLocalization tx(1, {0});
    PieceAction mult = x_mult(tx, 0, {-3});
    CHECK(mult.scalar == 1);
    CHECK(mult.target == MultiDegree{-2});
    PieceAction del = del_action(tx, 0, {-3});
    CHECK(del.scalar == -3);
    CHECK(del.target == MultiDegree{-4});
    // derivative of a constant is zero
    CHECK(del_action(MonomialLocalization(1, {}), 0, {0}).scalar == 0);
}

TEST_CASE("Weyl relation on piece scalars") {
    // del . x - x . del = 1 on every nonzero piece
    MonomialLocalization tx(1, {0});
    for (int a = -3; a <= 3; ++a) {
        Rat del_x = del_action(tx, 0, {a + 1}).scalar * x_mult(tx, 0, {a}).scalar;
        Rat x_del = x_mult(tx, 0, {a - 1}).scalar * del_action(tx, 0, {a}).scalar;
        CHECK(del_x - x_del == 1);
    }
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(CechSpec(0, {}), input_error);
    CHECK_THROWS_AS(CechSpec(1, {{0}}), input_error);   // unit generator
    CHECK_THROWS_AS(CechSpec(1, {{-1}}), input_error);  // negative exponent
    CHECK_THROWS_AS(CechSpec(2, {{1}}), input_error);   // wrong length
    CechSpec s(2, {{1, 1}, {2, 0}});
    CHECK(s.generator_support(0) == IndexSet{0, 1});
    CHECK(s.generator_support(1) == IndexSet{0});
    CHECK(s.support_union({0, 1}) == IndexSet{0, 1});
}

TEST_CASE("cech terms and differential") {
    CechSpec s(2, {{1, 0}, {0, 1}});  // I = (x, y)
    auto t0 = cech_term(s, 0);
    auto t1 = cech_term(s, 1);
    auto t2 = cech_term(s, 2);
    REQUIRE(t0.size() == 1);
    CHECK(t0[0].sigma.empty());
    REQUIRE(t1.size() == 2);
    CHECK(t1[0].sigma == IndexSet{0});
    CHECK(t1[1].sigma == IndexSet{1});
    REQUIRE(t2.size() == 1);
    CHECK(t2[0].sigma == IndexSet{0, 1});

    // d.d = 0 on a strand where all pieces are present
    MultiDegree a{1, 1};
    RatMatrix d0 = cech_differential_strand(s, 0, a);
    RatMatrix d1 = cech_differential_strand(s, 1, a);
    CHECK((d1 * d0).is_zero());
    // insertion signs: d1 = (inclusion with alternating signs)
    CHECK(d1.rows() == 1);
    CHECK(d1.cols() == 2);
    CHECK(d1.at(0, 0) + d1.at(0, 1) == 0);
}

TEST_CASE("local cohomology of the maximal ideal") {
    CechSpec s(2, {{1, 0}, {0, 1}});
    // H^2 at (-1,-1) is the socle generator x^-1 y^-1
    CHECK(local_cohomology_piece(s, 2, {-1, -1}).dim() == 1);
    CHECK(local_cohomology_piece(s, 2, {0, -1}).dim() == 0);
    CHECK(local_cohomology_piece(s, 2, {0, 0}).dim() == 0);
    CHECK(local_cohomology_piece(s, 1, {-1, -1}).dim() == 0);
    CHECK(local_cohomology_piece(s, 0, {1, 1}).dim() == 0);
    // positions past the end of the complex
    CHECK(local_cohomology_piece(s, 5, {-1, -1}).dim() == 0);
}

TEST_CASE("local cohomology of a hypersurface") {
    CechSpec s(1, {{1}});  // I = (x) in k[x]
    // H^1 = T_x / T: nonzero exactly at strictly negative degrees
    CHECK(local_cohomology_piece(s, 1, {-1}).dim() == 1);
    CHECK(local_cohomology_piece(s, 1, {-4}).dim() == 1);
    CHECK(local_cohomology_piece(s, 1, {0}).dim() == 0);
    CHECK(local_cohomology_piece(s, 0, {-1}).dim() == 0);
}

TEST_CASE("radical invariance") {
    CechSpec red(1, {{1}});
    CechSpec sq(1, {{2}});
    for (int a = -4; a <= 4; ++a)
        for (int q = 0; q <= 1; ++q)
            CHECK(local_cohomology_piece(red, q, {a}).dim() ==
                  local_cohomology_piece(sq, q, {a}).dim());
}

TEST_CASE("redundant generators do not change cohomology") {
    CechSpec lean(2, {{1, 1}});
    CechSpec fat(2, {{1, 1}, {2, 2}, {1, 3}});  // same radical support
    for (int a = -3; a <= 2; ++a)
        for (int b = -3; b <= 2; ++b)
            for (int q = 0; q <= 3; ++q)
                CHECK(local_cohomology_piece(lean, q, {a, b}).dim() ==
                      local_cohomology_piece(fat, q, {a, b}).dim());
}
