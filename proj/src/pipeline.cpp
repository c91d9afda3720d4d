#include "hodge/pipeline.hpp"

#include <algorithm>

namespace hodge {

EmbeddingSpec::EmbeddingSpec(int n_, std::vector<MultiDegree> gens) : n(n_), generators(std::move(gens)) {
    if (generators.empty()) throw input_error("embedding spec: the ideal must be nonzero");
    CechSpec check(n, generators);  // full validation
}

const std::map<std::pair<int, int>, int>& SSReport::page(int r) const {
    if (r < 1) throw input_error("page index must be >= 1");
    return pages.at(std::min(r, r_stab) - 1);
}

namespace {

SSReport report_from(const SpectralSequence& ss, int n) {
    SSReport rep;
    rep.n = n;
    rep.r_stab = ss.r_stab();
    for (int r = 1; r <= ss.r_stab(); ++r) rep.pages.push_back(ss.page(r));
    rep.abutment = ss.abutment();
    rep.derham_homology.assign(2 * n + 1, 0);
    for (int i = 0; i <= 2 * n; ++i) {
        int m = 2 * n - i;
        rep.derham_homology[i] = m < (int)rep.abutment.size() ? rep.abutment[m] : 0;
    }
    for (const auto& [pq, d] : rep.page(2))
        if (d < 0) throw invariant_error("negative page entry");
    return rep;
}

SSComputation compute_from_cech(const CechSpec& cech, int n) {
    SSComputation comp;
    comp.strand = std::make_shared<StrandDoubleComplex>(strand_double_complex(cech));
    comp.ss = std::make_shared<SpectralSequence>(comp.strand->dc);
    comp.report = report_from(*comp.ss, n);
    return comp;
}

}  // namespace

SSComputation compute_ss(const EmbeddingSpec& spec) { return compute_from_cech(spec.cech(), spec.n); }

SSReport hodge_derham_ss(const EmbeddingSpec& spec) { return compute_ss(spec).report; }

SSReport smooth_case_ss(int s, int n) {
    if (s < 0 || s > n || n < 1) throw input_error("smooth_case_ss: need 0 <= s <= n, n >= 1");
    std::vector<MultiDegree> gens;
    for (int j = s; j < n; ++j) gens.push_back(unit_degree(n, j));
    return compute_from_cech(CechSpec(n, gens), n).report;
}

EmbeddingSpec reembed(const EmbeddingSpec& specA, int t) {
    if (t < 0) throw input_error("reembed: negative shift");
    int n = specA.n + t;
    std::vector<MultiDegree> gens;
    for (MultiDegree g : specA.generators) {
        g.resize(n, 0);
        gens.push_back(std::move(g));
    }
    for (int j = specA.n; j < n; ++j) gens.push_back(unit_degree(n, j));
    return EmbeddingSpec(n, gens);
}

PsiData psi_chain_map(const EmbeddingSpec& specA, int t) {
    int s = specA.n;
    EmbeddingSpec specB = reembed(specA, t);
    PsiData psi;
    psi.t = t;
    psi.src = std::make_shared<StrandDoubleComplex>(strand_double_complex(specA.cech()));
    psi.tgt = std::make_shared<StrandDoubleComplex>(strand_double_complex(specB.cech()));
    psi.map.src = &psi.src->dc;
    psi.map.tgt = &psi.tgt->dc;
    psi.map.a = psi.map.b = t;

    int ga = specA.cech().num_generators();
    IndexSet form_tail, cech_tail;
    for (int j = s; j < s + t; ++j) form_tail.push_back(j);
    for (int g = ga; g < ga + t; ++g) cech_tail.push_back(g);

    for (int p = 0; p <= psi.src->dc.pmax; ++p)
        for (int q = 0; q <= psi.src->dc.qmax; ++q) {
            int nsrc = psi.src->dc.dim(p, q);
            if (nsrc == 0) continue;
            int ntgt = psi.tgt->dc.dim(p + t, q + t);
            RatMatrix blk(ntgt, nsrc);
            for (int c = 0; c < nsrc; ++c) {
                // (m, S, C) -> (m * (x_{s+1}..x_n)^{-1}, S + tail, C + tail);
                // the appended wedge and Cech indices are strictly larger
                // than everything present, so no reordering signs arise.
                StrandBasisElem e = psi.src->basis[p][q][c];
                e.form.insert(e.form.end(), form_tail.begin(), form_tail.end());
                e.cech.insert(e.cech.end(), cech_tail.begin(), cech_tail.end());
                int r = psi.tgt->find_basis_index(p + t, q + t, e);
                if (r < 0) throw invariant_error("psi_chain_map: image basis element missing");
                blk.at(r, c) = 1;
            }
            psi.map.blocks.emplace(std::make_pair(p, q), std::move(blk));
        }
    psi.map.validate();
    return psi;
}

namespace {

// specB = specA zero-extended plus trailing coordinate generators, in order.
bool is_supported_reembedding(const EmbeddingSpec& a, const EmbeddingSpec& b) {
    int t = b.n - a.n;
    if (t < 0) return false;
    if (b.num_generators() != a.num_generators() + t) return false;
    for (int g = 0; g < a.num_generators(); ++g) {
        MultiDegree ext = a.generators[g];
        ext.resize(b.n, 0);
        if (b.generators[g] != ext) return false;
    }
    for (int j = 0; j < t; ++j)
        if (b.generators[a.num_generators() + j] != unit_degree(b.n, a.n + j)) return false;
    return true;
}

int dim_at(const std::map<std::pair<int, int>, int>& table, int p, int q) {
    auto it = table.find({p, q});
    return it == table.end() ? 0 : it->second;
}

}  // namespace

IndependenceReport compare_embeddings(const EmbeddingSpec& specA, const EmbeddingSpec& specB,
                                      std::optional<int> shift) {
    SSComputation ca = compute_ss(specA);
    SSComputation cb = compute_ss(specB);
    IndependenceReport rep;
    int natural = specB.n - specA.n;
    int t = shift.value_or(natural);
    rep.shift = t;
    rep.report_a = ca.report;
    rep.report_b = cb.report;

    auto compare_page = [&](int r) -> std::string {
        auto pa = ca.ss->page(r);
        auto pb = cb.ss->page(r);
        for (const auto& [pq, d] : pa)
            if (dim_at(pb, pq.first + t, pq.second + t) != d)
                return "E_" + std::to_string(r) + "^{" + std::to_string(pq.first) + "," +
                       std::to_string(pq.second) + "}: " + std::to_string(d) + " vs " +
                       std::to_string(dim_at(pb, pq.first + t, pq.second + t));
        for (const auto& [pq, d] : pb)
            if (dim_at(pa, pq.first - t, pq.second - t) != d)
                return "E_" + std::to_string(r) + "^{" + std::to_string(pq.first - t) + "," +
                       std::to_string(pq.second - t) + "}: " +
                       std::to_string(dim_at(pa, pq.first - t, pq.second - t)) + " vs " +
                       std::to_string(d);
        return "";
    };

    int rmax = std::max(ca.report.r_stab, cb.report.r_stab);
    rep.pages_match = true;
    for (int r = 2; r <= rmax && rep.pages_match; ++r) {
        std::string diff = compare_page(r);
        if (!diff.empty()) {
            rep.pages_match = false;
            rep.first_mismatch = diff;
        }
    }
    rep.e1_match = compare_page(1).empty();

    rep.abutment_match = true;
    int top = std::max((int)ca.report.abutment.size(), (int)cb.report.abutment.size() - 2 * t);
    for (int m = 0; m < top; ++m) {
        int da = m < (int)ca.report.abutment.size() ? ca.report.abutment[m] : 0;
        int mb = m + 2 * t;
        int db = mb >= 0 && mb < (int)cb.report.abutment.size() ? cb.report.abutment[mb] : 0;
        if (da != db) {
            rep.abutment_match = false;
            if (rep.first_mismatch.empty())
                rep.first_mismatch = "H^" + std::to_string(m) + ": " + std::to_string(da) +
                                     " vs " + std::to_string(db);
            break;
        }
    }

    rep.verdict = rep.pages_match && rep.abutment_match;

    if (t == natural && is_supported_reembedding(specA, specB)) {
        rep.psi_checked = true;
        PsiData psi = psi_chain_map(specA, t);
        ShiftedMorphism sm = shifted_morphism_from_map(psi.map, *ca.ss, *cb.ss);
        rep.psi_iso_from_page = sm.iso_from_page;
        rep.psi_iso = sm.iso_from_page != 0 && sm.iso_from_page <= 2;
        if (!rep.psi_iso) {
            rep.verdict = false;
            if (rep.first_mismatch.empty())
                rep.first_mismatch = "psi not an isomorphism from page 2 (from page " +
                                     std::to_string(sm.iso_from_page) + ")";
        }
    }
    return rep;
}

}  // namespace hodge
