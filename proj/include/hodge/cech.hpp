#pragma once

#include "hodge/linalg.hpp"
#include "hodge/types.hpp"

namespace hodge {

// The ring T = k[x_1..x_n] with the variables in `sigma` inverted.  Only the
// support set matters: inverting x^2 and inverting x give the same ring.
// Graded pieces are 0- or 1-dimensional, with basis monomial x^a.
struct MonomialLocalization {
    int n = 0;
    IndexSet sigma;  // sorted 0-based variable indices

    MonomialLocalization() = default;
    MonomialLocalization(int n_, IndexSet sigma_);

    bool operator==(const MonomialLocalization&) const = default;
};

// Monomial generators of an ideal I in k[x_1..x_n], as exponent vectors.
// Generators may be empty only for the internal smooth-ambient corner case
// (I = 0, the Cech complex degenerates to T alone).
struct CechSpec {
    int n = 0;
    std::vector<MultiDegree> generators;

    CechSpec() = default;
    CechSpec(int n_, std::vector<MultiDegree> gens);

    int num_generators() const { return (int)generators.size(); }
    // Variables occurring in generator g.
    IndexSet generator_support(int g) const;
    // Union of supports over a subset of generators.
    IndexSet support_union(const IndexSet& gens) const;
};

// Dimension (0 or 1) of the degree-a piece of a localization.
int piece_dim(const MonomialLocalization& loc, const MultiDegree& a);

struct PieceAction {
    Rat scalar;          // 0 means the image is the zero element
    MultiDegree target;  // degree of the target piece
};

// Multiplication by x_j on the degree-a piece; scalar is 1 and the target
// piece a + e_j is always nonzero when the source is.
PieceAction x_mult(const MonomialLocalization& loc, int j, const MultiDegree& a);

// Action of the partial derivative d/dx_j on the degree-a piece: the basis
// monomial x^a maps to a_j * x^(a - e_j).
PieceAction del_action(const MonomialLocalization& loc, int j, const MultiDegree& a);

// Term t of the Cech complex 0 -> T -> (+) T_{f_i} -> ...: one localization
// per t-element subset of the generators, in lexicographic subset order.
// Term 0 is T itself.
std::vector<MonomialLocalization> cech_term(const CechSpec& spec, int t);

// Basis (list of generator subsets with nonzero piece) of the degree-a
// strand of Cech term t.
std::vector<IndexSet> cech_term_strand_basis(const CechSpec& spec, int t, const MultiDegree& a);

// Degree-a component of the Cech differential C^t -> C^{t+1}; rows index the
// target basis, columns the source basis; entries are Cech insertion signs.
RatMatrix cech_differential_strand(const CechSpec& spec, int t, const MultiDegree& a);

// Degree-a piece of H^q_I(T), as Cech cohomology at position q: the
// subquotient ker(d_q) / im(d_{q-1}) of the degree-a strand of C^q.
Subquotient local_cohomology_piece(const CechSpec& spec, int q, const MultiDegree& a);

}  // namespace hodge
