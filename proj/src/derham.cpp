#include "hodge/derham.hpp"

#include <algorithm>

namespace hodge {

GradedModule GradedModule::localization(const MonomialLocalization& loc) {
    return {loc.n, [loc](const MultiDegree& a) { return piece_dim(loc, a); }};
}

GradedModule GradedModule::quotient(const MonomialLocalization& num, const MonomialLocalization& den) {
    if (num.n != den.n) throw input_error("quotient: variable count mismatch");
    if (!std::includes(num.sigma.begin(), num.sigma.end(), den.sigma.begin(), den.sigma.end()))
        throw input_error("quotient: denominator support not contained in numerator support");
    return {num.n,
            [num, den](const MultiDegree& a) { return piece_dim(num, a) - piece_dim(den, a); }};
}

std::vector<int> StrandCochainComplex::cohomology_dims() const {
    std::vector<int> h(length());
    for (int i = 0; i < length(); ++i) h[i] = cohomology_at(first_pos + i).dim();
    return h;
}

Subquotient StrandCochainComplex::cohomology_at(int pos) const {
    int i = pos - first_pos;
    int d = dim(pos);
    Subspace z = i + 1 < length() ? kernel_basis(differentials.at(i)) : Subspace::full(d);
    Subspace b = i > 0 ? image_basis(differentials.at(i - 1)) : Subspace(d);
    return Subquotient(z, b);
}

void StrandCochainComplex::validate() const {
    if ((int)differentials.size() + 1 != length() && length() > 0)
        throw invariant_error("complex: differential count mismatch");
    for (int i = 0; i + 1 < length(); ++i) {
        if (differentials[i].cols() != (int)spaces[i].size() ||
            differentials[i].rows() != (int)spaces[i + 1].size())
            throw invariant_error("complex: differential shape mismatch");
        if (i + 2 < length() && !(differentials[i + 1] * differentials[i]).is_zero())
            throw invariant_error("complex: d.d != 0");
    }
}

std::vector<IndexSet> derham_strand_basis(const GradedModule& m, int p, const MultiDegree& a) {
    if ((int)a.size() != m.n) throw input_error("derham_strand_basis: degree length mismatch");
    std::vector<IndexSet> basis;
    for (const IndexSet& s : subsets_of_size(m.n, p)) {
        MultiDegree coeff = a;
        for (int i : s) coeff[i] -= 1;
        int d = m.piece(coeff);
        if (d < 0 || d > 1) throw invariant_error("graded module piece outside {0,1}");
        if (d == 1) basis.push_back(s);
    }
    return basis;
}

RatMatrix derham_matrix(const GradedModule& m, int p, const MultiDegree& a) {
    std::vector<IndexSet> src = derham_strand_basis(m, p, a);
    std::vector<IndexSet> tgt = derham_strand_basis(m, p + 1, a);
    RatMatrix d((int)tgt.size(), (int)src.size());
    for (int j = 0; j < (int)src.size(); ++j) {
        const IndexSet& s = src[j];
        MultiDegree coeff = a;
        for (int i : s) coeff[i] -= 1;
        for (int v = 0; v < m.n; ++v) {
            if (contains_index(s, v)) continue;
            int scalar = coeff[v];  // d/dx_v on the basis monomial
            IndexSet up = insert_sorted(s, v);
            auto it = std::lower_bound(tgt.begin(), tgt.end(), up);
            if (it == tgt.end() || *it != up) {
                // Target piece absent forces a zero derivative (the only way
                // the piece at coeff - e_v vanishes while coeff's does not).
                if (scalar != 0) throw invariant_error("derham_matrix: nonzero map to absent piece");
                continue;
            }
            int sign = insertion_position(s, v) % 2 == 0 ? 1 : -1;
            d.at((int)(it - tgt.begin()), j) = sign * scalar;
        }
    }
    return d;
}

StrandCochainComplex derham_strand_complex(const GradedModule& m, const MultiDegree& a) {
    StrandCochainComplex cx;
    cx.first_pos = 0;
    for (int p = 0; p <= m.n; ++p) cx.spaces.push_back(derham_strand_basis(m, p, a));
    for (int p = 0; p < m.n; ++p) cx.differentials.push_back(derham_matrix(m, p, a));
    cx.validate();
    return cx;
}

int DoubleComplex::dim(int p, int q) const {
    if (p < 0 || p > pmax || q < 0 || q > qmax) return 0;
    return dims.at(p).at(q);
}

void DoubleComplex::validate() const {
    for (int p = 0; p <= pmax; ++p)
        for (int q = 0; q <= qmax; ++q) {
            if (p < pmax && (d_hor(p, q).cols() != dim(p, q) || d_hor(p, q).rows() != dim(p + 1, q)))
                throw invariant_error("double complex: horizontal shape mismatch");
            if (q < qmax && (d_ver(p, q).cols() != dim(p, q) || d_ver(p, q).rows() != dim(p, q + 1)))
                throw invariant_error("double complex: vertical shape mismatch");
            if (p + 1 < pmax && !(d_hor(p + 1, q) * d_hor(p, q)).is_zero())
                throw invariant_error("double complex: d_hor^2 != 0");
            if (q + 1 < qmax && !(d_ver(p, q + 1) * d_ver(p, q)).is_zero())
                throw invariant_error("double complex: d_ver^2 != 0");
            if (p < pmax && q < qmax &&
                !(d_ver(p + 1, q) * d_hor(p, q) + -(d_hor(p, q + 1) * d_ver(p, q))).is_zero())
                throw invariant_error("double complex: squares do not commute");
        }
}

namespace {

std::vector<StrandBasisElem> entry_basis(const CechSpec& spec, const MultiDegree& a, int p, int q) {
    std::vector<StrandBasisElem> basis;
    for (const IndexSet& s : subsets_of_size(spec.n, p)) {
        MultiDegree coeff = a;
        for (int i : s) coeff[i] -= 1;
        for (const IndexSet& c : subsets_of_size(spec.num_generators(), q)) {
            MonomialLocalization loc(spec.n, spec.support_union(c));
            if (piece_dim(loc, coeff) == 1) basis.push_back({s, c});
        }
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

}  // namespace

int StrandDoubleComplex::find_basis_index(int p, int q, const StrandBasisElem& e) const {
    const auto& b = basis.at(p).at(q);
    auto it = std::lower_bound(b.begin(), b.end(), e);
    if (it == b.end() || !(*it == e)) return -1;
    return (int)(it - b.begin());
}

StrandDoubleComplex strand_double_complex(const CechSpec& spec, const MultiDegree& a) {
    if ((int)a.size() != spec.n) throw input_error("strand_double_complex: degree length mismatch");
    StrandDoubleComplex sdc;
    sdc.spec = spec;
    sdc.strand = a;
    int pmax = spec.n;
    int qmax = spec.num_generators();
    sdc.dc.pmax = pmax;
    sdc.dc.qmax = qmax;
    sdc.basis.assign(pmax + 1, std::vector<std::vector<StrandBasisElem>>(qmax + 1));
    sdc.dc.dims.assign(pmax + 1, std::vector<int>(qmax + 1, 0));
    for (int p = 0; p <= pmax; ++p)
        for (int q = 0; q <= qmax; ++q) {
            sdc.basis[p][q] = entry_basis(spec, a, p, q);
            sdc.dc.dims[p][q] = (int)sdc.basis[p][q].size();
        }

    sdc.dc.hor.assign(pmax + 1, std::vector<RatMatrix>(qmax + 1));
    sdc.dc.ver.assign(pmax + 1, std::vector<RatMatrix>(qmax + 1));
    for (int p = 0; p <= pmax; ++p)
        for (int q = 0; q <= qmax; ++q) {
            const auto& src = sdc.basis[p][q];
            if (p < pmax) {
                RatMatrix d(sdc.dc.dims[p + 1][q], sdc.dc.dims[p][q]);
                for (int j = 0; j < (int)src.size(); ++j) {
                    MultiDegree coeff = a;
                    for (int i : src[j].form) coeff[i] -= 1;
                    for (int v = 0; v < spec.n; ++v) {
                        if (contains_index(src[j].form, v)) continue;
                        int scalar = coeff[v];
                        if (scalar == 0) continue;
                        StrandBasisElem up{insert_sorted(src[j].form, v), src[j].cech};
                        int row = sdc.find_basis_index(p + 1, q, up);
                        if (row < 0)
                            throw invariant_error("strand_double_complex: nonzero map to absent piece");
                        int sign = insertion_position(src[j].form, v) % 2 == 0 ? 1 : -1;
                        d.at(row, j) = sign * scalar;
                    }
                }
                sdc.dc.hor[p][q] = std::move(d);
            }
            if (q < qmax) {
                RatMatrix d(sdc.dc.dims[p][q + 1], sdc.dc.dims[p][q]);
                for (int j = 0; j < (int)src.size(); ++j) {
                    for (int g = 0; g < spec.num_generators(); ++g) {
                        if (contains_index(src[j].cech, g)) continue;
                        StrandBasisElem up{src[j].form, insert_sorted(src[j].cech, g)};
                        int row = sdc.find_basis_index(p, q + 1, up);
                        if (row < 0)
                            throw invariant_error("strand_double_complex: missing Cech target piece");
                        int sign = insertion_position(src[j].cech, g) % 2 == 0 ? 1 : -1;
                        d.at(row, j) = sign;
                    }
                }
                sdc.dc.ver[p][q] = std::move(d);
            }
        }
    sdc.dc.validate();
    return sdc;
}

StrandDoubleComplex strand_double_complex(const CechSpec& spec) {
    return strand_double_complex(spec, MultiDegree(spec.n, 0));
}

std::vector<int> total_cohomology_dims(const DoubleComplex& dc) {
    int top = dc.pmax + dc.qmax;
    // Total space dimensions and differentials with the (-1)^q Koszul sign.
    std::vector<int> tdim(top + 2, 0);
    for (int m = 0; m <= top; ++m)
        for (int p = 0; p <= std::min(m, dc.pmax); ++p) tdim[m] += dc.dim(p, m - p);
    std::vector<RatMatrix> d(top + 1);
    for (int m = 0; m < top; ++m) {
        RatMatrix dm(tdim[m + 1], tdim[m]);
        int srcoff = 0;
        for (int p = 0; p <= std::min(m, dc.pmax); ++p) {
            int q = m - p;
            if (q > dc.qmax) continue;
            // offsets of (p, q+1) and (p+1, q) in Tot^{m+1}
            auto offset = [&](int pp) {
                int off = 0;
                for (int r = 0; r <= std::min(m + 1, dc.pmax); ++r) {
                    if (r == pp) return off;
                    if (m + 1 - r <= dc.qmax) off += dc.dim(r, m + 1 - r);
                }
                return off;
            };
            if (q < dc.qmax) {
                const RatMatrix& v = dc.d_ver(p, q);
                int to = offset(p);
                for (int r = 0; r < v.rows(); ++r)
                    for (int c = 0; c < v.cols(); ++c)
                        if (v.at(r, c) != 0) dm.at(to + r, srcoff + c) = v.at(r, c);
            }
            if (p < dc.pmax) {
                const RatMatrix& h = dc.d_hor(p, q);
                int to = offset(p + 1);
                int sign = q % 2 == 0 ? 1 : -1;
                for (int r = 0; r < h.rows(); ++r)
                    for (int c = 0; c < h.cols(); ++c)
                        if (h.at(r, c) != 0) dm.at(to + r, srcoff + c) = sign * h.at(r, c);
            }
            srcoff += dc.dim(p, q);
        }
        d[m] = std::move(dm);
    }
    std::vector<int> h(top + 1, 0);
    for (int m = 0; m <= top; ++m) {
        int z = m < top ? tdim[m] - rank(d[m]) : tdim[m];
        int b = m > 0 ? rank(d[m - 1]) : 0;
        h[m] = z - b;
    }
    return h;
}

bool euler_contractibility_check(const CechSpec& spec, const MultiDegree& a) {
    if (is_zero_degree(a)) throw input_error("euler_contractibility_check: degree must be nonzero");
    for (int t = 0; t <= spec.num_generators(); ++t) {
        for (const MonomialLocalization& loc : cech_term(spec, t)) {
            StrandCochainComplex row = derham_strand_complex(GradedModule::localization(loc), a);
            for (int hdim : row.cohomology_dims())
                if (hdim != 0) return false;
        }
    }
    return true;
}

}  // namespace hodge
