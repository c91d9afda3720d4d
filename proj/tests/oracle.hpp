#pragma once

// Test-side oracles, deliberately independent of the engine's A_r-subquotient
// page computation: E2 by iterated cohomology (vertical, then horizontal on
// E1 representatives) and brute-force lattice counts.

#include <functional>
#include <map>

#include "hodge/specseq.hpp"

namespace oracle {

using namespace hodge;

// E1^{p,q} as a subquotient of the column entry (p,q).
inline Subquotient e1_entry(const DoubleComplex& dc, int p, int q) {
    int d = dc.dim(p, q);
    Subspace z = q < dc.qmax ? kernel_basis(dc.d_ver(p, q)) : Subspace::full(d);
    Subspace b = q > 0 ? image_basis(dc.d_ver(p, q - 1)) : Subspace(d);
    return Subquotient(z, b);
}

// E2 dims by taking horizontal cohomology of the E1 page with induced d1.
inline std::map<std::pair<int, int>, int> e2_dims(const DoubleComplex& dc) {
    std::map<std::pair<int, int>, int> out;
    std::vector<std::vector<Subquotient>> e1;
    std::vector<std::vector<RatMatrix>> d1;  // [p][q]: E1^{p,q} -> E1^{p+1,q}
    for (int p = 0; p <= dc.pmax; ++p) {
        e1.emplace_back();
        for (int q = 0; q <= dc.qmax; ++q) e1[p].push_back(e1_entry(dc, p, q));
    }
    for (int p = 0; p < dc.pmax; ++p) {
        d1.emplace_back();
        for (int q = 0; q <= dc.qmax; ++q)
            d1[p].push_back(induced_map(dc.d_hor(p, q), e1[p][q], e1[p + 1][q]));
    }
    for (int p = 0; p <= dc.pmax; ++p)
        for (int q = 0; q <= dc.qmax; ++q) {
            int out_rank = p < dc.pmax ? rank(d1[p][q]) : 0;
            int in_rank = p > 0 ? rank(d1[p - 1][q]) : 0;
            int dim = e1[p][q].dim() - out_rank - in_rank;
            if (dim != 0) out[{p, q}] = dim;
        }
    return out;
}

// Independent count of lattice points a with sum |a_i| <= v, a_i >= 0 for
// i outside sigma.
inline long long lattice_count(int n, const IndexSet& sigma, int v) {
    long long count = 0;
    std::function<void(int, int)> rec = [&](int j, int budget) {
        if (j == n) {
            ++count;
            return;
        }
        bool neg = contains_index(sigma, j);
        for (int val = neg ? -budget : 0; val <= budget; ++val) {
            rec(j + 1, budget - std::abs(val));
        }
    };
    rec(0, v);
    return count;
}

}  // namespace oracle
