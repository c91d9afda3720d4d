#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodge/specseq.hpp"
#include "oracle.hpp"

using namespace hodge;

namespace {

DoubleComplex make_dc(int pmax, int qmax, std::map<std::pair<int, int>, int> dims) {
    DoubleComplex dc;
    dc.pmax = pmax;
    dc.qmax = qmax;
    dc.dims.assign(pmax + 1, std::vector<int>(qmax + 1, 0));
    for (auto& [pq, d] : dims) dc.dims[pq.first][pq.second] = d;
    dc.hor.assign(pmax + 1, std::vector<RatMatrix>(qmax + 1));
    dc.ver.assign(pmax + 1, std::vector<RatMatrix>(qmax + 1));
    for (int p = 0; p <= pmax; ++p)
        for (int q = 0; q <= qmax; ++q) {
            if (p < pmax) dc.hor[p][q] = RatMatrix(dc.dim(p + 1, q), dc.dim(p, q));
            if (q < qmax) dc.ver[p][q] = RatMatrix(dc.dim(p, q + 1), dc.dim(p, q));
        }
    return dc;
}

// Four one-dimensional entries with a staircase of differentials:
//   (0,1) --h--> (1,1)
//                  ^
//                  | v
//   (1,0) --h--> (2,0)        and d_v(1,0) hits (1,1) as well.
// The E2 differential (0,1) -> (2,0) is an isomorphism; E3 = 0.
DoubleComplex staircase() {
    DoubleComplex dc = make_dc(2, 1, {{{0, 1}, 1}, {{1, 1}, 1}, {{1, 0}, 1}, {{2, 0}, 1}});
    dc.hor[0][1].at(0, 0) = 1;  // x -> y
    dc.ver[1][0].at(0, 0) = 1;  // z -> y
    dc.hor[1][0].at(0, 0) = 1;  // z -> w
    return dc;
}

}  // namespace

TEST_CASE("staircase: nonzero d2 and vanishing E3") {
    SpectralSequence ss(staircase());
    auto e1 = ss.page(1);
    CHECK(e1 == std::map<std::pair<int, int>, int>{{{0, 1}, 1}, {{2, 0}, 1}});
    auto e2 = ss.page(2);
    CHECK(e2 == std::map<std::pair<int, int>, int>{{{0, 1}, 1}, {{2, 0}, 1}});
    // d2 is an isomorphism between the two surviving entries
    const RatMatrix& d2 = ss.page_data(2).differentials.at({0, 1});
    CHECK(d2.rows() == 1);
    CHECK(rank(d2) == 1);
    CHECK(ss.page(3).empty());
    CHECK(ss.infinity_page().empty());
    for (int h : ss.abutment()) CHECK(h == 0);
    CHECK(ss.check_page_consistency());
}

TEST_CASE("2x2 with identity vertical differential") {
    DoubleComplex dc = make_dc(1, 1, {{{0, 0}, 1}, {{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 1}});
    dc.ver[0][0].at(0, 0) = 1;
    dc.ver[1][0].at(0, 0) = 1;
    SpectralSequence ss(dc);
    CHECK(ss.page(1).empty());
    CHECK(ss.infinity_page().empty());
    for (int h : ss.abutment()) CHECK(h == 0);
    CHECK(ss.check_page_consistency());
}

TEST_CASE("zero differentials: pages constant") {
    DoubleComplex dc = make_dc(2, 2, {{{0, 0}, 2}, {{1, 1}, 3}, {{2, 2}, 1}});
    SpectralSequence ss(dc);
    std::map<std::pair<int, int>, int> dims{{{0, 0}, 2}, {{1, 1}, 3}, {{2, 2}, 1}};
    for (int r = 1; r <= ss.r_stab(); ++r) CHECK(ss.page(r) == dims);
    CHECK(ss.abutment() == std::vector<int>{2, 0, 3, 0, 1});
    CHECK(ss.check_page_consistency());
}

TEST_CASE("two-column complex degenerates at E2") {
    // p in {0,1} only: d_r = 0 for r >= 2
    DoubleComplex dc = make_dc(1, 2, {{{0, 0}, 1}, {{0, 1}, 2}, {{1, 1}, 2}, {{1, 2}, 1}});
    dc.hor[0][1].at(0, 0) = 1;
    SpectralSequence ss(dc);
    CHECK(ss.page(2) == ss.infinity_page());
    CHECK(ss.check_page_consistency());
}

TEST_CASE("page argument validation") {
    SpectralSequence ss(staircase());
    CHECK_THROWS_AS(ss.page(0), input_error);
    CHECK(ss.page(100) == ss.infinity_page());
}

TEST_CASE("engine pages match the iterated-cohomology oracle") {
    for (DoubleComplex dc :
         {staircase(), make_dc(2, 2, {{{0, 0}, 2}, {{1, 1}, 3}, {{2, 2}, 1}})}) {
        SpectralSequence ss(dc);
        CHECK(ss.page(2) == oracle::e2_dims(dc));
    }
}

TEST_CASE("identity morphism is an isomorphism from page 1") {
    DoubleComplex dc = staircase();
    DoubleComplexMap f;
    f.src = &dc;
    f.tgt = &dc;
    for (int p = 0; p <= dc.pmax; ++p)
        for (int q = 0; q <= dc.qmax; ++q)
            if (dc.dim(p, q) > 0)
                f.blocks.emplace(std::make_pair(p, q), RatMatrix::identity(dc.dim(p, q)));
    SpectralSequence ss(dc);
    ShiftedMorphism sm = shifted_morphism_from_map(f, ss, ss);
    CHECK(sm.iso_from_page == 1);
    for (bool iso : sm.iso_on_page) CHECK(iso);
}

TEST_CASE("zero morphism induces zero maps") {
    DoubleComplex dc = staircase();
    DoubleComplexMap f;
    f.src = &dc;
    f.tgt = &dc;
    SpectralSequence ss(dc);
    ShiftedMorphism sm = shifted_morphism_from_map(f, ss, ss);
    CHECK(sm.iso_from_page == 3);  // iso only once everything has vanished
    for (const auto& per_page : sm.maps)
        for (const auto& [pq, m] : per_page) CHECK(m.is_zero());
}

TEST_CASE("non-chain-map is rejected with the failing square named") {
    DoubleComplex dc = staircase();
    DoubleComplexMap f;
    f.src = &dc;
    f.tgt = &dc;
    // block only at (0,1): does not commute with d_hor into (1,1)
    f.blocks.emplace(std::make_pair(0, 1), RatMatrix::identity(1));
    CHECK_THROWS_AS(f.validate(), invariant_error);
}
