#include "hodge/plus.hpp"

#include <algorithm>

namespace hodge {

GradedModule plus(const GradedModule& base) {
    int n = base.n;
    auto base_piece = base.piece;
    return {n + 1, [n, base_piece](const MultiDegree& a) {
                if ((int)a.size() != n + 1) throw input_error("plus: degree length mismatch");
                if (a[n] > -1) return 0;
                MultiDegree head(a.begin(), a.begin() + n);
                return base_piece(head);
            }};
}

PlusChainMap phi_chain_map(const GradedModule& base) {
    PlusChainMap cm;
    cm.base = base;
    cm.plus_module = plus(base);
    int n = base.n;
    MultiDegree zero_n(n, 0), zero_n1(n + 1, 0);
    cm.base_complex = derham_strand_complex(base, zero_n);
    cm.plus_complex = derham_strand_complex(cm.plus_module, zero_n1);
    for (int p = 0; p <= n; ++p) {
        const auto& src = cm.base_complex.spaces[p];
        const auto& tgt = cm.plus_complex.spaces[p + 1];
        RatMatrix f((int)tgt.size(), (int)src.size());
        for (int j = 0; j < (int)src.size(); ++j) {
            // (m, S) -> (m/z, S + {z}); z is the last variable, so the wedge
            // factor dz lands at the end and no reordering sign appears.
            IndexSet up = insert_sorted(src[j], n);
            auto it = std::lower_bound(tgt.begin(), tgt.end(), up);
            if (it == tgt.end() || *it != up)
                throw invariant_error("phi_chain_map: image basis element missing");
            f.at((int)(it - tgt.begin()), j) = 1;
        }
        cm.maps.push_back(std::move(f));
    }
    // Chain-map squares: d_plus . phi_p = -? The map appends dz on the
    // right, so it commutes with the de Rham differential on the nose
    // (d only ever inserts dx_j with j < z on the left factor).
    for (int p = 0; p < n; ++p) {
        RatMatrix lhs = cm.plus_complex.differentials[p + 1] * cm.maps[p];
        RatMatrix rhs = cm.maps[p + 1] * cm.base_complex.differentials[p];
        if (!(lhs + -rhs).is_zero()) throw invariant_error("phi_chain_map: square does not commute");
    }
    return cm;
}

PhiIsoResult verify_phi_iso(const GradedModule& base) {
    PlusChainMap cm = phi_chain_map(base);
    PhiIsoResult res;
    res.h_base = cm.base_complex.cohomology_dims();
    res.h_plus = cm.plus_complex.cohomology_dims();
    bool ok = res.h_plus[0] == 0;  // h^0 of the plus side is not hit
    for (int p = 0; p <= base.n; ++p) {
        Subquotient hsrc = cm.base_complex.cohomology_at(p);
        Subquotient htgt = cm.plus_complex.cohomology_at(p + 1);
        RatMatrix ind = induced_map(cm.maps[p], hsrc, htgt);
        int rk = rank(ind);
        res.ranks.push_back(rk);
        if (rk != hsrc.dim() || rk != htgt.dim()) ok = false;
    }
    res.is_iso = ok;
    return res;
}

bool verify_plus_local_cohomology(const CechSpec& spec, int i, int window) {
    int n = spec.n;
    // Extended spec: generators with a trailing zero exponent, plus z itself.
    std::vector<MultiDegree> gens;
    for (MultiDegree g : spec.generators) {
        g.push_back(0);
        gens.push_back(g);
    }
    gens.push_back(unit_degree(n + 1, n));
    CechSpec ext(n + 1, gens);

    std::vector<MultiDegree> degs;
    MultiDegree cur(n + 1, -window);
    while (true) {
        degs.push_back(cur);
        int k = 0;
        while (k <= n && cur[k] == window) cur[k++] = -window;
        if (k > n) break;
        ++cur[k];
    }
    for (const MultiDegree& d : degs) {
        MultiDegree head(d.begin(), d.begin() + n);
        int lhs = d[n] <= -1 ? local_cohomology_piece(spec, i, head).dim() : 0;
        int rhs = local_cohomology_piece(ext, i + 1, d).dim();
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace hodge
