#pragma once

#include <functional>

#include "hodge/cech.hpp"

namespace hodge {

// A Z^n-graded module with 0/1-dimensional pieces on which d/dx_j acts on the
// degree-a basis element with scalar a_j (the monomial rule).  Covers
// localizations T_sigma, quotients of localizations, and plus modules.
struct GradedModule {
    int n = 0;
    std::function<int(const MultiDegree&)> piece;  // 0 or 1

    static GradedModule localization(const MonomialLocalization& loc);
    // T_num / T_den with den.sigma contained in num.sigma.
    static GradedModule quotient(const MonomialLocalization& num, const MonomialLocalization& den);
};

// A finite complex of labeled rational spaces in consecutive positions
// first_pos .. first_pos + spaces.size() - 1.  differentials[i] maps
// position first_pos+i to first_pos+i+1 (rows index the target basis).
struct StrandCochainComplex {
    int first_pos = 0;
    std::vector<std::vector<IndexSet>> spaces;  // basis labels per position
    std::vector<RatMatrix> differentials;

    int length() const { return (int)spaces.size(); }
    int dim(int pos) const { return (int)spaces.at(pos - first_pos).size(); }
    // Cohomology dimensions position by position.
    std::vector<int> cohomology_dims() const;
    Subquotient cohomology_at(int pos) const;
    void validate() const;  // d.d = 0, shapes
};

// Matrix of the de Rham differential Omega^p -> Omega^{p+1} of M on the
// degree-a strand (deg dx_i = e_i): the basis element with wedge set S and
// coefficient degree a - chi_S maps to sum over j not in S of
// (-1)^{pos(j in S+j)} (a - chi_S)_j times the S+{j} basis element.
RatMatrix derham_matrix(const GradedModule& m, int p, const MultiDegree& a);

// Basis (wedge sets with nonzero coefficient piece) of the degree-a strand
// of Omega^p(M).
std::vector<IndexSet> derham_strand_basis(const GradedModule& m, int p, const MultiDegree& a);

// The whole strand de Rham complex of M at degree a, positions 0..n.
StrandCochainComplex derham_strand_complex(const GradedModule& m, const MultiDegree& a);

// A bounded first-quadrant double complex of finite rational spaces with
// commuting squares: d_hor(p,q): (p,q)->(p+1,q), d_ver(p,q): (p,q)->(p,q+1),
// d_hor d_ver = d_ver d_hor.  The total complex applies the Koszul sign
// (-1)^q to d_hor.
struct DoubleComplex {
    int pmax = 0;  // p ranges over 0..pmax
    int qmax = 0;  // q ranges over 0..qmax
    std::vector<std::vector<int>> dims;       // [p][q]
    std::vector<std::vector<RatMatrix>> hor;  // [p][q], p < pmax
    std::vector<std::vector<RatMatrix>> ver;  // [p][q], q < qmax

    int dim(int p, int q) const;
    const RatMatrix& d_hor(int p, int q) const { return hor.at(p).at(q); }
    const RatMatrix& d_ver(int p, int q) const { return ver.at(p).at(q); }
    void validate() const;  // shapes, d^2 = 0 both ways, commuting squares
};

// One basis element of a strand double complex entry: wedge set S (form
// part) and generator subset C (Cech part); the coefficient lives in
// T_{supp(C)} in degree a - chi_S.
struct StrandBasisElem {
    IndexSet form;
    IndexSet cech;
    bool operator==(const StrandBasisElem&) const = default;
    auto operator<=>(const StrandBasisElem&) const = default;
};

// The degree-a strand of the Cech-de Rham double complex of a spec:
// entry (p,q) = (+) over |S| = p of the (a - chi_S)-piece of Cech term q.
struct StrandDoubleComplex {
    CechSpec spec;
    MultiDegree strand;
    DoubleComplex dc;
    std::vector<std::vector<std::vector<StrandBasisElem>>> basis;  // [p][q]

    int find_basis_index(int p, int q, const StrandBasisElem& e) const;  // -1 if absent
};

StrandDoubleComplex strand_double_complex(const CechSpec& spec, const MultiDegree& a);
StrandDoubleComplex strand_double_complex(const CechSpec& spec);  // degree-0 strand

// Cohomology dimensions of the total complex, by total degree 0..pmax+qmax.
std::vector<int> total_cohomology_dims(const DoubleComplex& dc);

// True iff every row of the degree-a strand (each Cech-term localization
// with its de Rham differential) has vanishing cohomology in all positions.
// Holds for every a != 0; this is what makes the 0-strand computation
// complete.
bool euler_contractibility_check(const CechSpec& spec, const MultiDegree& a);

}  // namespace hodge
