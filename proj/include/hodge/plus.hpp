#pragma once

#include "hodge/derham.hpp"

namespace hodge {

// The plus operation M -> M (x) (B_z/B) for one new variable z, realized on
// graded pieces: piece (a, k) is the base piece at a when k <= -1 (the layer
// m/z^{-k}) and zero otherwise.  z-multiplication shifts layers up and
// annihilates the k = -1 layer; d/dz acts with scalar k, matching
// d/dz(m/z^i) = (-i) m/z^{i+1}.  The new variable is the last coordinate.
GradedModule plus(const GradedModule& base);

// The degree-1 chain map Omega^p(M) -> Omega^{p+1}(M_+) on the degree-0
// strands, sending (m, S) to (m/z, S + {z}).  One matrix per p = 0..n.
struct PlusChainMap {
    GradedModule base;
    GradedModule plus_module;
    StrandCochainComplex base_complex;  // 0-strand of Omega(M)
    StrandCochainComplex plus_complex;  // 0-strand of Omega(M_+)
    std::vector<RatMatrix> maps;        // maps[p]: Omega^p(M)_0 -> Omega^{p+1}(M_+)_0
};

PlusChainMap phi_chain_map(const GradedModule& base);

// True iff the maps induced by phi on de Rham cohomology,
// h^p(Omega(M)) -> h^{p+1}(Omega(M_+)), are isomorphisms for every p.
// Ranks of the induced maps are returned alongside.
struct PhiIsoResult {
    bool is_iso = false;
    std::vector<int> h_base;   // h^p dims, p = 0..n
    std::vector<int> h_plus;   // h^p dims, p = 0..n+1
    std::vector<int> ranks;    // rank of induced map per p
};

PhiIsoResult verify_phi_iso(const GradedModule& base);

// Graded-dimension check of (H^i_I(A))_+ = H^{i+1}_{(I,z)}(A[z]) over the
// box window {-window..window}^{n+1}: the left side is the plus layer
// structure over the Cech computation in n variables, the right side the
// Cech computation for the extended ideal in n+1 variables.
bool verify_plus_local_cohomology(const CechSpec& spec, int i, int window = 3);

}  // namespace hodge
