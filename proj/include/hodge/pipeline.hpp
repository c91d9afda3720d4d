#pragma once

#include <memory>
#include <optional>
#include <string>

#include "hodge/specseq.hpp"

namespace hodge {

// A monomial ideal I in k[x_1..x_n] defining Y = V(I) in A^n.
struct EmbeddingSpec {
    int n = 0;
    std::vector<MultiDegree> generators;

    EmbeddingSpec() = default;
    EmbeddingSpec(int n_, std::vector<MultiDegree> gens);  // validates, I != 0

    int num_generators() const { return (int)generators.size(); }
    CechSpec cech() const { return CechSpec(n, generators); }
};

struct SSReport {
    int n = 0;
    int r_stab = 0;
    // pages[r-1]: dim table of E_r, zero entries omitted, r = 1..r_stab.
    std::vector<std::map<std::pair<int, int>, int>> pages;
    std::vector<int> abutment;          // dim H^m(Tot), m = 0..pmax+qmax
    std::vector<int> derham_homology;   // H_i = dim H^{2n-i}(Tot), i = 0..2n

    const std::map<std::pair<int, int>, int>& page(int r) const;
    const std::map<std::pair<int, int>, int>& infinity() const { return pages.back(); }
};

// Full computation state: strand double complex + spectral sequence + report.
// shared_ptr members keep the addresses stable for double-complex maps.
struct SSComputation {
    std::shared_ptr<StrandDoubleComplex> strand;
    std::shared_ptr<SpectralSequence> ss;
    SSReport report;
};

SSComputation compute_ss(const EmbeddingSpec& spec);
SSReport hodge_derham_ss(const EmbeddingSpec& spec);

// The coordinate smooth case Y = V(x_{s+1},..,x_n) = A^s inside A^n.
// s = n means I = 0; the Cech complex degenerates to the single column T.
SSReport smooth_case_ss(int s, int n);

// The re-embedding A^s -> A^n = A^{s+t}: specB must equal specA's generators
// zero-extended to n variables followed by the coordinate generators
// x_{s+1},..,x_n.  The chain map sends (m, S, C) to
// (m * (x_{s+1}..x_n)^{-1}, S + {s..n-1}, C + {coordinate generators}),
// of bidegree (t,t).
struct PsiData {
    int t = 0;
    std::shared_ptr<StrandDoubleComplex> src;
    std::shared_ptr<StrandDoubleComplex> tgt;
    DoubleComplexMap map;  // blocks reference src->dc and tgt->dc
};

EmbeddingSpec reembed(const EmbeddingSpec& specA, int t);
PsiData psi_chain_map(const EmbeddingSpec& specA, int t);

struct IndependenceReport {
    int shift = 0;  // t = n_B - n_A
    bool verdict = false;
    bool pages_match = false;      // dim E_r^{p,q}(A) = E_r^{p+t,q+t}(B), r >= 2
    bool abutment_match = false;   // dim H^m(A) = dim H^{m+2t}(B)
    bool e1_match = false;         // informational only, not part of verdict
    bool psi_checked = false;      // supported re-embedding family detected
    bool psi_iso = false;          // psi induces isos on all pages r >= 2
    int psi_iso_from_page = 0;
    std::string first_mismatch;    // empty when verdict true
    SSReport report_a, report_b;
};

// shift defaults to n_B - n_A; a different explicit shift compares the page
// tables under that shift instead (and will normally fail).  The psi check
// runs only for the supported re-embedding family at the natural shift.
IndependenceReport compare_embeddings(const EmbeddingSpec& specA, const EmbeddingSpec& specB,
                                      std::optional<int> shift = std::nullopt);

}  // namespace hodge
