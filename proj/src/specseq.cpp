#include "hodge/specseq.hpp"

#include <algorithm>

namespace hodge {

TotalComplex build_total_complex(const DoubleComplex& dc) {
    dc.validate();
    TotalComplex tot;
    tot.pmax = dc.pmax;
    tot.qmax = dc.qmax;
    int top = dc.pmax + dc.qmax;
    tot.dims.assign(top + 1, 0);
    tot.offsets.assign(top + 1, std::vector<int>(dc.pmax + 2, 0));
    for (int m = 0; m <= top; ++m) {
        int off = 0;
        for (int p = 0; p <= dc.pmax; ++p) {
            tot.offsets[m][p] = off;
            off += dc.dim(p, m - p);
        }
        tot.offsets[m][dc.pmax + 1] = off;
        tot.dims[m] = off;
    }
    tot.d.assign(std::max(top, 0), RatMatrix());
    for (int m = 0; m < top; ++m) {
        RatMatrix dm(tot.dims[m + 1], tot.dims[m]);
        for (int p = 0; p <= std::min(m, dc.pmax); ++p) {
            int q = m - p;
            if (q > dc.qmax) continue;
            int srcoff = tot.offsets[m][p];
            if (q < dc.qmax) {
                const RatMatrix& v = dc.d_ver(p, q);
                int to = tot.offsets[m + 1][p];
                for (int r = 0; r < v.rows(); ++r)
                    for (int c = 0; c < v.cols(); ++c)
                        if (v.at(r, c) != 0) dm.at(to + r, srcoff + c) = v.at(r, c);
            }
            if (p < dc.pmax) {
                const RatMatrix& h = dc.d_hor(p, q);
                int to = tot.offsets[m + 1][p + 1];
                int sign = q % 2 == 0 ? 1 : -1;  // Koszul sign on the horizontal part
                for (int r = 0; r < h.rows(); ++r)
                    for (int c = 0; c < h.cols(); ++c)
                        if (h.at(r, c) != 0) dm.at(to + r, srcoff + c) = sign * h.at(r, c);
            }
        }
        tot.d[m] = std::move(dm);
    }
    for (int m = 0; m + 1 < top; ++m)
        if (!(tot.d[m + 1] * tot.d[m]).is_zero())
            throw invariant_error("total complex: D^2 != 0");
    return tot;
}

int Page::dim(int p, int q) const {
    auto it = entries.find({p, q});
    return it == entries.end() ? 0 : it->second.dim();
}

Subspace SpectralSequence::a_space(int m, int pfrom, int pto) {
    if (m < 0 || m > total_.top()) return Subspace(0);
    pfrom = std::max(pfrom, 0);
    int ncols_next = m + 1 <= total_.top() ? std::min(m + 1, pmax_) + 1 : 0;
    pto = std::max(pfrom, std::min(pto, ncols_next + 1));
    auto key = std::make_tuple(m, pfrom, pto);
    auto it = a_cache_.find(key);
    if (it != a_cache_.end()) return it->second;

    int dim_m = total_.dim(m);
    Subspace result(dim_m);
    if (pfrom > std::min(m, pmax_)) {
        a_cache_.emplace(key, result);
        return result;  // F^pfrom Tot^m = 0
    }
    int lo = total_.offsets[m][pfrom];         // free coordinates: columns >= pfrom
    int nfree = dim_m - lo;
    // Constraint rows: components of Tot^{m+1} lying in columns < pto.
    int nrows = 0;
    if (m < total_.top() && pto > 0) nrows = total_.offsets[m + 1][std::min(pto, pmax_ + 1)];
    RatMatrix sys(nrows, nfree);
    if (m < total_.top())
        for (int r = 0; r < nrows; ++r)
            for (int c = 0; c < nfree; ++c) sys.at(r, c) = total_.d[m].at(r, lo + c);
    Subspace ker = kernel_basis(sys);
    RatMatrix emb(ker.dim(), dim_m);
    for (int r = 0; r < ker.dim(); ++r)
        for (int c = 0; c < nfree; ++c) emb.at(r, lo + c) = ker.basis().at(r, c);
    result = Subspace::span(dim_m, emb);
    a_cache_.emplace(key, result);
    return result;
}

SpectralSequence::SpectralSequence(const DoubleComplex& dc)
    : pmax_(dc.pmax), qmax_(dc.qmax), total_(build_total_complex(dc)) {
    // Provably past all differentials for a first-quadrant complex.
    r_stab_ = std::max(pmax_ + 1, qmax_ + 1) + 2;

    for (int r = 1; r <= r_stab_; ++r) {
        Page page;
        page.r = r;
        for (int p = 0; p <= pmax_; ++p)
            for (int q = 0; q <= qmax_; ++q) {
                int m = p + q;
                Subspace z = a_space(m, p, p + r);
                Subspace b = a_space(m, p + 1, p + r);
                if (m > 0) {
                    Subspace prior = a_space(m - 1, p - r + 1, p);
                    RatMatrix img = (total_.d[m - 1] * prior.basis().transpose()).transpose();
                    b = b.sum(Subspace::span(total_.dim(m), img));
                }
                page.entries.emplace(std::make_pair(p, q), Subquotient(z, b));
            }
        for (int p = 0; p <= pmax_; ++p)
            for (int q = 0; q <= qmax_; ++q) {
                int tp = p + r, tq = q - r + 1;
                if (tp > pmax_ || tq < 0) continue;  // zero map out of the quadrant
                const Subquotient& src = page.entries.at({p, q});
                const Subquotient& tgt = page.entries.at({tp, tq});
                page.differentials.emplace(std::make_pair(p, q),
                                           induced_map(total_.d[p + q], src, tgt));
            }
        pages_.push_back(std::move(page));
    }

    abutment_.assign(total_.top() + 1, 0);
    for (int m = 0; m <= total_.top(); ++m) {
        int z = m < total_.top() ? total_.dim(m) - rank(total_.d[m]) : total_.dim(m);
        int b = m > 0 ? rank(total_.d[m - 1]) : 0;
        abutment_[m] = z - b;
    }
    filtration_.assign(total_.top() + 1, std::vector<int>(pmax_ + 2, 0));
    for (int m = 0; m <= total_.top(); ++m) {
        int rk_im = m > 0 ? rank(total_.d[m - 1]) : 0;
        Subspace im(total_.dim(m));
        if (m > 0) im = image_basis(total_.d[m - 1]);
        for (int t = 0; t <= pmax_ + 1; ++t) {
            Subspace zf = a_space(m, t, pmax_ + 2);  // ker D intersected with F^t
            filtration_[m][t] = zf.sum(im).dim() - rk_im;
        }
    }
}

const Page& SpectralSequence::page_data(int r) const {
    if (r < 1) throw input_error("page index must be >= 1");
    return pages_.at(std::min(r, r_stab_) - 1);
}

std::map<std::pair<int, int>, int> SpectralSequence::page(int r) const {
    std::map<std::pair<int, int>, int> out;
    for (const auto& [pq, sq] : page_data(r).entries)
        if (sq.dim() > 0) out.emplace(pq, sq.dim());
    return out;
}

bool SpectralSequence::check_page_consistency() const {
    for (int r = 1; r < r_stab_; ++r) {
        const Page& cur = pages_[r - 1];
        const Page& next = pages_[r];
        for (int p = 0; p <= pmax_; ++p)
            for (int q = 0; q <= qmax_; ++q) {
                auto rank_of = [&](int pp, int qq) {
                    auto it = cur.differentials.find({pp, qq});
                    return it == cur.differentials.end() ? 0 : rank(it->second);
                };
                int ker = cur.dim(p, q) - rank_of(p, q);
                int im = rank_of(p - r, q + r - 1);
                if (next.dim(p, q) != ker - im) return false;
            }
    }
    for (int m = 0; m <= total_.top(); ++m) {
        int sum = 0;
        const Page& last = pages_.back();
        for (int p = 0; p <= std::min(m, pmax_); ++p) sum += last.dim(p, m - p);
        if (sum != abutment_[m]) return false;
        for (int t = 0; t <= pmax_; ++t)
            if (filtration_[m][t] - filtration_[m][t + 1] !=
                (m - t >= 0 && m - t <= qmax_ ? last.dim(t, m - t) : 0))
                return false;
    }
    return true;
}

const RatMatrix* DoubleComplexMap::block(int p, int q) const {
    auto it = blocks.find({p, q});
    return it == blocks.end() ? nullptr : &it->second;
}

namespace {

// f's block at (p,q) as a matrix tgt.dim(p+a,q+b) x src.dim(p,q), absent
// blocks read as zero.
RatMatrix block_or_zero(const DoubleComplexMap& f, int p, int q) {
    int tr = f.tgt->dim(p + f.a, q + f.b);
    int tc = f.src->dim(p, q);
    if (const RatMatrix* blk = f.block(p, q)) {
        if (blk->rows() != tr || blk->cols() != tc)
            throw input_error("double complex map: block shape mismatch");
        return *blk;
    }
    return RatMatrix(tr, tc);
}

RatMatrix hor_or_zero(const DoubleComplex& dc, int p, int q) {
    if (p >= 0 && p < dc.pmax && q >= 0 && q <= dc.qmax) return dc.d_hor(p, q);
    return RatMatrix(dc.dim(p + 1, q), dc.dim(p, q));
}

RatMatrix ver_or_zero(const DoubleComplex& dc, int p, int q) {
    if (q >= 0 && q < dc.qmax && p >= 0 && p <= dc.pmax) return dc.d_ver(p, q);
    return RatMatrix(dc.dim(p, q + 1), dc.dim(p, q));
}

}  // namespace

void DoubleComplexMap::validate() const {
    if (!src || !tgt) throw input_error("double complex map: missing endpoints");
    for (int p = 0; p <= src->pmax; ++p)
        for (int q = 0; q <= src->qmax; ++q) {
            RatMatrix lhs_h = block_or_zero(*this, p + 1, q) * hor_or_zero(*src, p, q);
            RatMatrix rhs_h = hor_or_zero(*tgt, p + a, q + b) * block_or_zero(*this, p, q);
            if (!(lhs_h + -rhs_h).is_zero())
                throw invariant_error("double complex map: horizontal square fails at (" +
                                      std::to_string(p) + "," + std::to_string(q) + ")");
            RatMatrix lhs_v = block_or_zero(*this, p, q + 1) * ver_or_zero(*src, p, q);
            RatMatrix rhs_v = ver_or_zero(*tgt, p + a, q + b) * block_or_zero(*this, p, q);
            if (!(lhs_v + -rhs_v).is_zero())
                throw invariant_error("double complex map: vertical square fails at (" +
                                      std::to_string(p) + "," + std::to_string(q) + ")");
        }
}

ShiftedMorphism shifted_morphism_from_map(const DoubleComplexMap& f, const SpectralSequence& ss_src,
                                          const SpectralSequence& ss_tgt) {
    f.validate();
    const TotalComplex& ts = ss_src.total();
    const TotalComplex& tt = ss_tgt.total();
    int shift = f.a + f.b;

    // Total-complex level map, twisted by (-1)^(b p) so it commutes with the
    // signed total differentials.
    std::vector<RatMatrix> fm(ts.top() + 1);
    for (int m = 0; m <= ts.top(); ++m) {
        RatMatrix mat(tt.dim(m + shift), ts.dim(m));
        for (int p = 0; p <= std::min(m, ss_src.pmax()); ++p) {
            int q = m - p;
            if (q > ss_src.qmax()) continue;
            const RatMatrix* blk = f.block(p, q);
            if (!blk) continue;
            int tp = p + f.a, tq = q + f.b;
            if (tp < 0 || tp > ss_tgt.pmax() || tq < 0 || tq > ss_tgt.qmax()) {
                if (!blk->is_zero())
                    throw input_error("double complex map: nonzero block out of target quadrant");
                continue;
            }
            int sign = (f.b * p) % 2 == 0 ? 1 : -1;
            int so = ts.offsets[m][p];
            int to = tt.offsets[m + shift][tp];
            for (int r = 0; r < blk->rows(); ++r)
                for (int c = 0; c < blk->cols(); ++c)
                    if (blk->at(r, c) != 0) mat.at(to + r, so + c) = sign * blk->at(r, c);
        }
        fm[m] = std::move(mat);
    }
    for (int m = 0; m < ts.top(); ++m) {
        RatMatrix lhs = m + shift < tt.top() ? tt.d[m + shift] * fm[m]
                                             : RatMatrix(0, ts.dim(m));
        RatMatrix rhs_full = fm[m + 1] * ts.d[m];
        if (m + shift >= tt.top()) {
            if (!rhs_full.is_zero())
                throw invariant_error("shifted morphism: total chain map fails at top degree");
            continue;
        }
        if (!(lhs + -rhs_full).is_zero())
            throw invariant_error("shifted morphism: total-complex chain map check failed");
    }

    ShiftedMorphism out;
    out.a = f.a;
    out.b = f.b;
    int rmax = std::max(ss_src.r_stab(), ss_tgt.r_stab());
    out.maps.resize(rmax);
    out.iso_on_page.assign(rmax, true);
    for (int r = 1; r <= rmax; ++r) {
        const Page& ps = ss_src.page_data(r);
        const Page& pt = ss_tgt.page_data(r);
        bool iso = true;
        for (int p = 0; p <= ss_src.pmax(); ++p)
            for (int q = 0; q <= ss_src.qmax(); ++q) {
                int ds = ps.dim(p, q);
                int tp = p + f.a, tq = q + f.b;
                bool in_tgt = tp >= 0 && tp <= ss_tgt.pmax() && tq >= 0 && tq <= ss_tgt.qmax();
                if (!in_tgt) {
                    if (ds > 0) iso = false;
                    continue;
                }
                int m = p + q;
                RatMatrix ind = induced_map(fm[m], ps.entries.at({p, q}), pt.entries.at({tp, tq}));
                if (ds > 0 || pt.dim(tp, tq) > 0)
                    out.maps[r - 1].emplace(std::make_pair(p, q), ind);
                if (ds != pt.dim(tp, tq) || rank(ind) != ds) iso = false;
            }
        // Target entries not hit by any source position must vanish.
        for (int tp = 0; tp <= ss_tgt.pmax() && iso; ++tp)
            for (int tq = 0; tq <= ss_tgt.qmax(); ++tq) {
                int p = tp - f.a, q = tq - f.b;
                bool covered = p >= 0 && p <= ss_src.pmax() && q >= 0 && q <= ss_src.qmax();
                if (!covered && pt.dim(tp, tq) > 0) {
                    iso = false;
                    break;
                }
            }
        out.iso_on_page[r - 1] = iso;
    }
    out.iso_from_page = 0;
    for (int r = rmax; r >= 1; --r) {
        if (!out.iso_on_page[r - 1]) break;
        out.iso_from_page = r;
    }
    return out;
}

}  // namespace hodge
