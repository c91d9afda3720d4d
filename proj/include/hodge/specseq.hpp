#pragma once

#include <map>

#include "hodge/derham.hpp"

namespace hodge {

// The total complex Tot^m = (+)_{p+q=m} C^{p,q} with the sign convention
// D = d_ver + (-1)^q d_hor, entries ordered by ascending column p.
struct TotalComplex {
    int pmax = 0, qmax = 0;
    std::vector<int> dims;            // Tot^m dimension, m = 0..pmax+qmax
    std::vector<RatMatrix> d;         // D_m: Tot^m -> Tot^{m+1}
    std::vector<std::vector<int>> offsets;  // offsets[m][p] = start of block (p, m-p)

    int top() const { return pmax + qmax; }
    int dim(int m) const { return m >= 0 && m <= top() ? dims[m] : 0; }
};

TotalComplex build_total_complex(const DoubleComplex& dc);

struct Page {
    int r = 1;
    // Entries keyed by (p,q); only positions with nonzero ambient are stored,
    // but dim() answers 0 everywhere else.
    std::map<std::pair<int, int>, Subquotient> entries;
    // d_r^{p,q}: E_r^{p,q} -> E_r^{p+r,q-r+1}; absent means the zero map
    // (target outside the quadrant).
    std::map<std::pair<int, int>, RatMatrix> differentials;

    int dim(int p, int q) const;
};

class SpectralSequence {
  public:
    explicit SpectralSequence(const DoubleComplex& dc);

    int r_stab() const { return r_stab_; }
    const Page& page_data(int r) const;  // clamped to r_stab for large r
    // Dimension table of E_r, keyed (p,q), zero entries omitted.
    std::map<std::pair<int, int>, int> page(int r) const;
    std::map<std::pair<int, int>, int> infinity_page() const { return page(r_stab_); }

    const std::vector<int>& abutment() const { return abutment_; }          // dim H^m(Tot)
    const std::vector<std::vector<int>>& filtration() const { return filtration_; }  // dim F^t H^m

    // dim E_{r+1}^{p,q} == dim ker d_r^{p,q} - rank d_r^{p-r,q+r-1}, all r, p, q;
    // plus the abutment identity and F^t/F^{t+1} = E_inf^{t,m-t}.
    bool check_page_consistency() const;

    const TotalComplex& total() const { return total_; }
    int pmax() const { return pmax_; }
    int qmax() const { return qmax_; }

  private:
    Subspace a_space(int m, int pfrom, int pto);  // {x in F^pfrom Tot^m : Dx in F^pto}
    Subspace f_space(int m, int p) { return a_space(m, p, p); }

    int pmax_, qmax_, r_stab_;
    TotalComplex total_;
    std::vector<Page> pages_;  // index r-1
    std::vector<int> abutment_;
    std::vector<std::vector<int>> filtration_;
    std::map<std::tuple<int, int, int>, Subspace> a_cache_;
};

// A morphism of double complexes of bidegree (a,b): per-entry matrices
// f(p,q): C^{p,q} -> C'^{p+a,q+b} commuting with both differentials.
// Blocks whose target falls outside the target quadrant must be omitted and
// the corresponding sources must map to zero (they do, because the block
// does not exist).
struct DoubleComplexMap {
    const DoubleComplex* src = nullptr;
    const DoubleComplex* tgt = nullptr;
    int a = 0, b = 0;
    std::map<std::pair<int, int>, RatMatrix> blocks;

    const RatMatrix* block(int p, int q) const;
    void validate() const;  // chain-map squares; throws naming the failure
};

struct ShiftedMorphism {
    int a = 0, b = 0;
    // maps[r-1][(p,q)]: induced matrix E_r^{p,q} -> E'_r^{p+a,q+b}.
    std::vector<std::map<std::pair<int, int>, RatMatrix>> maps;
    // Per page r (index r-1): true iff every induced map is an isomorphism
    // and no entry of either side is left unmatched.
    std::vector<bool> iso_on_page;
    // Smallest r with iso_on_page true from r onward; 0 if never.
    int iso_from_page = 0;
};

// Induce the morphism on all pages of the already-computed spectral
// sequences of f.src and f.tgt.
ShiftedMorphism shifted_morphism_from_map(const DoubleComplexMap& f, const SpectralSequence& ss_src,
                                          const SpectralSequence& ss_tgt);

}  // namespace hodge
