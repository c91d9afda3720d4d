#include "hodge/catalog.hpp"

namespace hodge {

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"(x) in A^1", EmbeddingSpec(1, {{1}})},
        {"(x,y) in A^2", EmbeddingSpec(2, {{1, 0}, {0, 1}})},
        {"(xy) in A^2", EmbeddingSpec(2, {{1, 1}})},
        {"(xy,xz) in A^3", EmbeddingSpec(3, {{1, 1, 0}, {1, 0, 1}})},
        {"(x^2) in A^1", EmbeddingSpec(1, {{2}})},
        {"(xy,yz,zx) in A^3", EmbeddingSpec(3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})},
    };
    return entries;
}

}  // namespace hodge
