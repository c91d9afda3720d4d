#pragma once

#include <json.hpp>

#include "hodge/pipeline.hpp"

namespace hodge {

using Json = nlohmann::ordered_json;

// JSON with stable field names and deterministic ordering (r, then p, then q
// ascending); zero entries omitted.
Json to_json(const SSReport& rep);
Json to_json(const IndependenceReport& rep);

// Human-readable grids: one table per page with zero cells printed as dots.
std::string render_tables(const SSReport& rep);
std::string render_comparison(const IndependenceReport& rep);

// Parse the `compute` input document {n, generators, ...}; throws input_error
// on malformed documents.
EmbeddingSpec spec_from_json(const Json& doc);

}  // namespace hodge
