#pragma once

#include "hodge/cech.hpp"

namespace hodge {

// Koszul complex on coordinate generators z_j, j in coords, over
// T = k[x_1..x_n]: terms Wedge^t free on t-subsets of coords with
// deg e_W = chi_W, differential d_t(e_{j_1}^..^e_{j_t}) =
// sum_l (-1)^l z_{j_l} e_{..without j_l..} (1-based sign, as the wedge
// formula dictates).
struct KoszulComplex {
    int n = 0;
    IndexSet coords;  // sorted 0-based variable indices, nonempty

    int codim() const { return (int)coords.size(); }
    // Basis of the degree-a piece of Wedge^t: subsets W with a - chi_W >= 0.
    std::vector<IndexSet> term_basis(int t, const MultiDegree& a) const;
    // Degree-a component of d_t: Wedge^t -> Wedge^{t-1}.
    RatMatrix differential(int t, const MultiDegree& a) const;
    // Homology dims H_t at degree a, t = 0..codim.
    std::vector<int> homology_dims(const MultiDegree& a) const;
};

KoszulComplex koszul_complex(int n, const IndexSet& coords);

// Box {-window..window}^n enumeration, shared by the window checks.
std::vector<MultiDegree> degree_window(int n, int window);

// True iff on the window the graded homology is T/J at position 0 and zero
// elsewhere.
bool verify_koszul_resolution(const KoszulComplex& k, int window);

// True iff the J-annihilated part of H^c_J(T) (tensored with the rank-1
// module Wedge^c) has the graded dimensions of T/J shifted by -chi_coords,
// on the window.  The annihilated part is computed honestly: kernel of the
// maps induced by multiplication by each z_j on the Cech cohomology
// subquotients.
bool ext_top_annihilator_check(int n, const IndexSet& coords, int window);

// Rank-level split exactness of the conormal sequence
// J/J^2 -> R (x) Omega_T -> Omega_R -> 0 for a coordinate ideal J: checks,
// degree by degree on the window, that the left map is injective, the
// sequence is exact, and rank Omega_R = n - |coords| with free complement
// of rank |coords|.  coords may be empty (J = 0).
bool conormal_rank_check(int n, const IndexSet& coords, int window);

}  // namespace hodge
