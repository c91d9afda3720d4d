#pragma once

#include "hodge/pipeline.hpp"

namespace hodge {

struct CatalogEntry {
    std::string name;
    EmbeddingSpec spec;
};

// Built-in golden examples: (x) in A^1; (x,y) in A^2; (xy) in A^2;
// (xy,xz) in A^3; (x^2) in A^1; (xy,yz,zx) in A^3.
const std::vector<CatalogEntry>& catalog();

}  // namespace hodge
