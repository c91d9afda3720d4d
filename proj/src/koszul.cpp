#include "hodge/koszul.hpp"

#include <algorithm>

namespace hodge {

KoszulComplex koszul_complex(int n, const IndexSet& coords) {
    if (n < 1) throw input_error("koszul_complex: need at least one variable");
    IndexSet c = coords;
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (int j : c)
        if (j < 0 || j >= n) throw input_error("koszul_complex: coordinate index out of range");
    if (c.empty()) throw input_error("koszul_complex: empty coordinate set");
    return {n, c};
}

std::vector<IndexSet> KoszulComplex::term_basis(int t, const MultiDegree& a) const {
    if ((int)a.size() != n) throw input_error("koszul term_basis: degree length mismatch");
    std::vector<IndexSet> out;
    if (t < 0 || t > codim()) return out;
    // Subsets of coords, as position sets into coords, translated to indices.
    for (const IndexSet& pos : subsets_of_size(codim(), t)) {
        IndexSet w;
        for (int i : pos) w.push_back(coords[i]);
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) ok = a[j] - (contains_index(w, j) ? 1 : 0) >= 0;
        if (ok) out.push_back(w);
    }
    return out;
}

RatMatrix KoszulComplex::differential(int t, const MultiDegree& a) const {
    auto src = term_basis(t, a);
    auto tgt = term_basis(t - 1, a);
    RatMatrix d((int)tgt.size(), (int)src.size());
    for (int j = 0; j < (int)src.size(); ++j) {
        const IndexSet& w = src[j];
        for (int l = 0; l < t; ++l) {
            IndexSet w2 = w;
            w2.erase(w2.begin() + l);
            // Target entry always exists: a - chi_{w2} >= a - chi_w >= 0.
            auto it = std::lower_bound(tgt.begin(), tgt.end(), w2);
            if (it == tgt.end() || *it != w2)
                throw invariant_error("koszul differential: missing target basis element");
            d.at((int)(it - tgt.begin()), j) += (l % 2 == 0) ? -1 : 1;  // (-1)^l, 1-based l
        }
    }
    return d;
}

std::vector<int> KoszulComplex::homology_dims(const MultiDegree& a) const {
    int c = codim();
    std::vector<RatMatrix> d(c + 2);  // d[t]: Wedge^t -> Wedge^{t-1}
    for (int t = 1; t <= c; ++t) d[t] = differential(t, a);
    std::vector<int> h(c + 1, 0);
    for (int t = 0; t <= c; ++t) {
        int dim_t = (int)term_basis(t, a).size();
        int rk_out = t >= 1 ? rank(d[t]) : 0;
        int rk_in = t + 1 <= c ? rank(d[t + 1]) : 0;
        h[t] = dim_t - rk_out - rk_in;
        if (h[t] < 0) throw invariant_error("koszul homology: negative dimension");
    }
    return h;
}

std::vector<MultiDegree> degree_window(int n, int window) {
    std::vector<MultiDegree> degs;
    MultiDegree cur(n, -window);
    while (true) {
        degs.push_back(cur);
        int k = 0;
        while (k < n && cur[k] == window) cur[k++] = -window;
        if (k == n) break;
        ++cur[k];
    }
    return degs;
}

bool verify_koszul_resolution(const KoszulComplex& k, int window) {
    for (const MultiDegree& a : degree_window(k.n, window)) {
        // Negative coordinates kill every term; skip the all-zero check fast.
        bool any_neg = false;
        for (int v : a) any_neg = any_neg || v < 0;
        std::vector<int> h = any_neg ? std::vector<int>(k.codim() + 1, 0) : k.homology_dims(a);
        // (T/J)_a = 1 iff a >= 0 and a_j = 0 on coords.
        int expect0 = 1;
        for (int j = 0; j < k.n; ++j)
            if (a[j] < 0 || (contains_index(k.coords, j) && a[j] != 0)) expect0 = 0;
        if (h[0] != expect0) return false;
        for (int t = 1; t <= k.codim(); ++t)
            if (h[t] != 0) return false;
    }
    return true;
}

bool ext_top_annihilator_check(int n, const IndexSet& coords, int window) {
    KoszulComplex k = koszul_complex(n, coords);
    int c = k.codim();
    std::vector<MultiDegree> gens;
    for (int j : k.coords) gens.push_back(unit_degree(n, j));
    CechSpec spec(n, gens);
    for (const MultiDegree& a : degree_window(n, window)) {
        Subquotient h = local_cohomology_piece(spec, c, a);
        // Socle at degree a: intersection over j of ker(z_j: H_a -> H_{a+e_j}),
        // with z_j induced from multiplication on the Cech terms.
        Subspace soc = Subspace::full(h.dim());
        for (int j : k.coords) {
            MultiDegree a2 = a;
            ++a2[j];
            Subquotient h2 = local_cohomology_piece(spec, c, a2);
            auto src_basis = cech_term_strand_basis(spec, c, a);
            auto tgt_basis = cech_term_strand_basis(spec, c, a2);
            RatMatrix mult((int)tgt_basis.size(), (int)src_basis.size());
            for (int col = 0; col < (int)src_basis.size(); ++col) {
                const IndexSet& g = src_basis[col];
                // x_j acts by 1 on every localization piece that survives.
                MonomialLocalization loc(n, spec.support_union(g));
                if (piece_dim(loc, a2) == 0) continue;
                auto it = std::lower_bound(tgt_basis.begin(), tgt_basis.end(), g);
                if (it == tgt_basis.end() || *it != g)
                    throw invariant_error("ext annihilator: localization basis mismatch");
                mult.at((int)(it - tgt_basis.begin()), col) = 1;
            }
            RatMatrix ind = induced_map(mult, h, h2);
            // Cut soc down by ker(ind): restrict ind to soc's basis and span
            // the kernel combinations.
            RatMatrix restricted = ind * soc.basis().transpose();
            Subspace coeffs = kernel_basis(restricted);
            soc = Subspace::span(h.dim(), coeffs.basis() * soc.basis());
        }
        // Expected: (T/J)(-chi_coords) at a, i.e. (T/J)_{a + chi_coords}... the
        // shift M(-d)_a = M_{a-d} with d = -chi_coords gives (T/J)_{a+chi}.
        MultiDegree sh = a;
        for (int j : k.coords) ++sh[j];
        int expect = 1;
        for (int j = 0; j < n; ++j)
            if (sh[j] < 0 || (contains_index(k.coords, j) && sh[j] != 0)) expect = 0;
        if (soc.dim() != expect) return false;
    }
    return true;
}

bool conormal_rank_check(int n, const IndexSet& coords, int window) {
    IndexSet c = coords;
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (int j : c)
        if (j < 0 || j >= n) throw input_error("conormal_rank_check: index out of range");
    // For a coordinate ideal the sequence splits degreewise:
    // (J/J^2)_a has basis {e_j : j in coords, a - e_j in R supp}, maps to
    // dz_j in R (x) Omega_T injectively, and the cokernel is free on the
    // dx_j, j not in coords.  Verify the ranks degree by degree.
    auto in_R = [&](const MultiDegree& a) {
        for (int j = 0; j < n; ++j)
            if (a[j] < 0 || (contains_index(c, j) && a[j] != 0)) return false;
        return true;
    };
    for (const MultiDegree& a : degree_window(n, window)) {
        int conormal = 0;
        for (int j : c) {
            MultiDegree b = a;
            --b[j];
            if (in_R(b)) ++conormal;
        }
        int middle = 0;
        for (int j = 0; j < n; ++j) {
            MultiDegree b = a;
            --b[j];
            if (in_R(b)) ++middle;
        }
        int omega_R = 0;
        for (int j = 0; j < n; ++j) {
            if (contains_index(c, j)) continue;
            MultiDegree b = a;
            --b[j];
            if (in_R(b)) ++omega_R;
        }
        // Exactness at the middle term and injectivity on the left reduce to
        // this rank identity for monomial pieces.
        if (middle != conormal + omega_R) return false;
    }
    // Omega_R is free of rank n - |coords| on the dx_j with j outside coords;
    // each dx_j shows up with piece dim 1 at degree e_j, covered by the loop
    // whenever window >= 1.
    return true;
}

}  // namespace hodge
