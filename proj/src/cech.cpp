#include "hodge/cech.hpp"

#include <algorithm>

namespace hodge {

MonomialLocalization::MonomialLocalization(int n_, IndexSet sigma_) : n(n_), sigma(std::move(sigma_)) {
    if (n < 0) throw input_error("localization: negative variable count");
    std::sort(sigma.begin(), sigma.end());
    sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());
    for (int i : sigma)
        if (i < 0 || i >= n) throw input_error("localization: variable index out of range");
}

CechSpec::CechSpec(int n_, std::vector<MultiDegree> gens) : n(n_), generators(std::move(gens)) {
    if (n < 1) throw input_error("spec: need at least one variable");
    for (const MultiDegree& g : generators) {
        if ((int)g.size() != n) throw input_error("spec: generator exponent vector has wrong length");
        bool nonzero = false;
        for (int e : g) {
            if (e < 0) throw input_error("spec: negative exponent in generator");
            if (e > 0) nonzero = true;
        }
        if (!nonzero) throw input_error("spec: zero generator (unit monomial) not allowed");
    }
}

IndexSet CechSpec::generator_support(int g) const {
    IndexSet s;
    for (int i = 0; i < n; ++i)
        if (generators.at(g)[i] > 0) s.push_back(i);
    return s;
}

IndexSet CechSpec::support_union(const IndexSet& gens) const {
    std::vector<bool> in(n, false);
    for (int g : gens)
        for (int i : generator_support(g)) in[i] = true;
    IndexSet s;
    for (int i = 0; i < n; ++i)
        if (in[i]) s.push_back(i);
    return s;
}

int piece_dim(const MonomialLocalization& loc, const MultiDegree& a) {
    if ((int)a.size() != loc.n) throw input_error("piece_dim: degree length mismatch");
    for (int i = 0; i < loc.n; ++i)
        if (a[i] < 0 && !contains_index(loc.sigma, i)) return 0;
    return 1;
}

PieceAction x_mult(const MonomialLocalization& loc, int j, const MultiDegree& a) {
    if (j < 0 || j >= loc.n) throw input_error("x_mult: variable index out of range");
    if (piece_dim(loc, a) == 0) throw input_error("x_mult: source piece is zero");
    return {Rat(1), add(a, unit_degree(loc.n, j))};
}

PieceAction del_action(const MonomialLocalization& loc, int j, const MultiDegree& a) {
    if (j < 0 || j >= loc.n) throw input_error("del_action: variable index out of range");
    if (piece_dim(loc, a) == 0) throw input_error("del_action: source piece is zero");
    MultiDegree tgt = add(a, unit_degree(loc.n, j, -1));
    // a_j = 0 means the derivative of x^a is the zero element; the target
    // piece may be absent in that case, which is consistent.
    return {Rat(a[j]), tgt};
}

std::vector<MonomialLocalization> cech_term(const CechSpec& spec, int t) {
    int m = spec.num_generators();
    if (t < 0 || t > m) throw input_error("cech_term: index out of range");
    std::vector<MonomialLocalization> out;
    for (const IndexSet& s : subsets_of_size(m, t))
        out.emplace_back(spec.n, spec.support_union(s));
    return out;
}

std::vector<IndexSet> cech_term_strand_basis(const CechSpec& spec, int t, const MultiDegree& a) {
    std::vector<IndexSet> basis;
    for (const IndexSet& s : subsets_of_size(spec.num_generators(), t)) {
        MonomialLocalization loc(spec.n, spec.support_union(s));
        if (piece_dim(loc, a) == 1) basis.push_back(s);
    }
    return basis;
}

RatMatrix cech_differential_strand(const CechSpec& spec, int t, const MultiDegree& a) {
    int m = spec.num_generators();
    if (t < 0 || t + 1 > m) throw input_error("cech_differential_strand: index out of range");
    std::vector<IndexSet> src = cech_term_strand_basis(spec, t, a);
    std::vector<IndexSet> tgt = cech_term_strand_basis(spec, t + 1, a);
    RatMatrix d((int)tgt.size(), (int)src.size());
    for (int j = 0; j < (int)src.size(); ++j) {
        for (int g = 0; g < m; ++g) {
            if (contains_index(src[j], g)) continue;
            IndexSet up = insert_sorted(src[j], g);
            auto it = std::lower_bound(tgt.begin(), tgt.end(), up);
            // Target piece is nonzero whenever the source piece is: the
            // support set only grows.
            if (it == tgt.end() || *it != up)
                throw invariant_error("cech_differential_strand: missing target piece");
            int sign = insertion_position(src[j], g) % 2 == 0 ? 1 : -1;
            d.at((int)(it - tgt.begin()), j) = sign;
        }
    }
    return d;
}

Subquotient local_cohomology_piece(const CechSpec& spec, int q, const MultiDegree& a) {
    int m = spec.num_generators();
    if (q < 0) throw input_error("local_cohomology_piece: negative index");
    int dim_q = (int)cech_term_strand_basis(spec, q, a).size();
    if (q > m) {
        Subspace zero(dim_q);  // terms past the end of the complex
        return Subquotient(zero, zero);
    }
    Subspace z = q < m ? kernel_basis(cech_differential_strand(spec, q, a)) : Subspace::full(dim_q);
    Subspace b = q > 0 ? image_basis(cech_differential_strand(spec, q - 1, a)) : Subspace(dim_q);
    return Subquotient(z, b);
}

}  // namespace hodge
