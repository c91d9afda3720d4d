#pragma once

#include "hodge/types.hpp"

namespace hodge {

// The Bernstein filtration on the localization T_sigma of k[x_1..x_n]:
// F_v is spanned by monomials x^a with sum |a_i| <= v, where a_i ranges over
// Z for i in sigma and over Z>=0 otherwise.  hilbert_function(v) = dim F_v.
struct BernsteinData {
    int n = 0;
    IndexSet sigma;  // inverted variables, sorted

    long long hilbert_function(int v) const;
};

BernsteinData bernstein_data(int n, const IndexSet& sigma);

struct BernsteinResult {
    int dimension = 0;        // degree of the Hilbert polynomial
    long long multiplicity = 0;  // leading coefficient times dimension!
    std::vector<long long> samples;
};

// Dimension and multiplicity from exact finite differences of the Hilbert
// function, sampled at v = n+1 .. and cross-checked further out.
BernsteinResult bernstein_dimension(const BernsteinData& data);

// dim = n and multiplicity = 2^{|sigma|} for every localization of T.
bool bernstein_bound_check(int n, const IndexSet& sigma);

}  // namespace hodge
