#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodge/report.hpp"

using namespace hodge;

TEST_CASE("ss report JSON fields and ordering") {
    SSReport rep = hodge_derham_ss(EmbeddingSpec(2, {{1, 1}}));
    Json j = to_json(rep);
    CHECK(j.contains("pages"));
    CHECK(j.contains("abutment"));
    CHECK(j.contains("derham_homology"));
    CHECK(j["n"] == 2);
    CHECK(j["pages"].is_array());
    CHECK(j["pages"][0]["r"] == 1);
    // E2 entries sorted by (p, q)
    const Json& e2 = j["pages"][1]["entries"];
    REQUIRE(e2.size() == 2);
    CHECK(e2[0]["p"] == 1);
    CHECK(e2[0]["q"] == 1);
    CHECK(e2[0]["dim"] == 2);
    CHECK(e2[1]["p"] == 2);
    CHECK(e2[1]["dim"] == 1);
    CHECK(j["abutment"] == Json({0, 0, 2, 1}));
}

TEST_CASE("JSON round trip is byte-identical") {
    SSReport rep = hodge_derham_ss(EmbeddingSpec(1, {{1}}));
    std::string once = to_json(rep).dump(2);
    std::string twice = Json::parse(once).dump(2);
    CHECK(once == twice);

    IndependenceReport cmp =
        compare_embeddings(EmbeddingSpec(1, {{1}}), EmbeddingSpec(2, {{1, 0}, {0, 1}}));
    std::string c1 = to_json(cmp).dump(2);
    CHECK(c1 == Json::parse(c1).dump(2));
}

TEST_CASE("comparison JSON carries the verdict and shift") {
    IndependenceReport cmp =
        compare_embeddings(EmbeddingSpec(1, {{1}}), EmbeddingSpec(2, {{1, 0}, {0, 1}}));
    Json j = to_json(cmp);
    CHECK(j["verdict"] == true);
    CHECK(j["shift"] == 1);
    CHECK(j["psi_checked"] == true);
    CHECK(j["psi_iso"] == true);
    CHECK(j.contains("a"));
    CHECK(j.contains("b"));
}

TEST_CASE("input document parsing") {
    Json doc = Json::parse(R"({"n": 2, "generators": [[1, 1]]})");
    EmbeddingSpec spec = spec_from_json(doc);
    CHECK(spec.n == 2);
    CHECK(spec.generators == std::vector<MultiDegree>{{1, 1}});

    CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"generators": []})")), input_error);
    CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"n": 1, "generators": []})")), input_error);
    CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"n": 1, "generators": [[-1]]})")), input_error);
    CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"n": 1, "generators": [[0]]})")), input_error);
    CHECK_THROWS_AS(spec_from_json(Json::parse("[1,2,3]")), input_error);
}

TEST_CASE("rendered tables mention every page shown in JSON") {
    SSReport rep = hodge_derham_ss(EmbeddingSpec(2, {{1, 1}}));
    std::string text = render_tables(rep);
    CHECK(text.find("E_1") != std::string::npos);
    CHECK(text.find("E_2") != std::string::npos);
    CHECK(text.find("H^m(Tot)") != std::string::npos);
    CHECK(text.find("H^dR_i") != std::string::npos);
}
