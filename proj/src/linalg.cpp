#include "hodge/linalg.hpp"

#include <algorithm>

namespace hodge {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(int cols, const std::vector<RatVector>& rows) {
    RatMatrix m((int)rows.size(), cols);
    for (int r = 0; r < (int)rows.size(); ++r) {
        if ((int)rows[r].size() != cols) throw input_error("from_rows: ragged row");
        for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

RatVector RatMatrix::row(int r) const {
    RatVector v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

RatVector RatMatrix::col(int c) const {
    RatVector v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw input_error("matrix product shape mismatch");
    RatMatrix out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(r, k);
            if (a == 0) continue;
            for (int c = 0; c < rhs.cols_; ++c) {
                const Rat& b = rhs.at(k, c);
                if (b != 0) out.at(r, c) += a * b;
            }
        }
    return out;
}

RatVector RatMatrix::apply(const RatVector& v) const {
    if ((int)v.size() != cols_) throw input_error("matrix apply shape mismatch");
    RatVector out(rows_, Rat(0));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (at(r, c) != 0) out[r] += at(r, c) * v[c];
    return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw input_error("matrix sum shape mismatch");
    RatMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

RatMatrix RatMatrix::operator-() const {
    RatMatrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
    return out;
}

bool RatMatrix::is_zero() const {
    for (const Rat& x : data_)
        if (x != 0) return false;
    return true;
}

void RatMatrix::scale(const Rat& c) {
    for (Rat& x : data_) x *= c;
}

RatMatrix RatMatrix::hstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) throw input_error("hstack row mismatch");
    RatMatrix out(a.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
        for (int c = 0; c < b.cols(); ++c) out.at(r, a.cols() + c) = b.at(r, c);
    }
    return out;
}

RatMatrix RatMatrix::vstack(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.cols()) throw input_error("vstack column mismatch");
    RatMatrix out(a.rows() + b.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
    for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) out.at(a.rows() + r, c) = b.at(r, c);
    return out;
}

std::vector<int> rref_inplace(RatMatrix& m) {
    std::vector<int> pivots;
    int lead = 0;
    for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
        // First nonzero entry below the current row: deterministic pivoting.
        int pr = -1;
        for (int r = lead; r < m.rows(); ++r)
            if (m.at(r, col) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != lead)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pr, c), m.at(lead, c));
        Rat inv = 1 / m.at(lead, col);
        for (int c = col; c < m.cols(); ++c) m.at(lead, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == lead) continue;
            Rat f = m.at(r, col);
            if (f == 0) continue;
            for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(lead, c);
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

int rank(const RatMatrix& m) {
    RatMatrix copy = m;
    return (int)rref_inplace(copy).size();
}

Subspace Subspace::span(int ambient_dim, const RatMatrix& vectors) {
    if (vectors.cols() != ambient_dim && vectors.rows() != 0)
        throw input_error("span: vector length != ambient dimension");
    RatMatrix m = vectors.cols() == ambient_dim ? vectors : RatMatrix(0, ambient_dim);
    std::vector<int> pivots = rref_inplace(m);
    Subspace s(ambient_dim);
    RatMatrix basis((int)pivots.size(), ambient_dim);
    for (int r = 0; r < (int)pivots.size(); ++r)
        for (int c = 0; c < ambient_dim; ++c) basis.at(r, c) = m.at(r, c);
    s.basis_ = basis;
    return s;
}

Subspace Subspace::full(int ambient_dim) {
    return span(ambient_dim, RatMatrix::identity(ambient_dim));
}

bool Subspace::contains(const RatVector& v) const {
    if ((int)v.size() != ambient_) throw input_error("contains: length mismatch");
    RatVector w = v;
    for (int r = 0; r < basis_.rows(); ++r) {
        int p = -1;
        for (int c = 0; c < ambient_; ++c)
            if (basis_.at(r, c) != 0) {
                p = c;
                break;
            }
        if (p < 0) continue;
        if (w[p] != 0) {
            Rat f = w[p];  // pivot entries are 1 in RREF
            for (int c = 0; c < ambient_; ++c) w[c] -= f * basis_.at(r, c);
        }
    }
    for (const Rat& x : w)
        if (x != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw input_error("contains: ambient mismatch");
    for (int r = 0; r < other.basis_.rows(); ++r)
        if (!contains(other.basis_.row(r))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw input_error("sum: ambient mismatch");
    return span(ambient_, RatMatrix::vstack(basis_, other.basis_));
}

Subspace kernel_basis(const RatMatrix& m) {
    RatMatrix r = m;
    std::vector<int> pivots = rref_inplace(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<RatVector> gens;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        RatVector v(m.cols(), Rat(0));
        v[c] = 1;
        for (int pr = 0; pr < (int)pivots.size(); ++pr) v[pivots[pr]] = -r.at(pr, c);
        gens.push_back(v);
    }
    return Subspace::span(m.cols(), RatMatrix::from_rows(m.cols(), gens));
}

Subspace image_basis(const RatMatrix& m) {
    return Subspace::span(m.rows(), m.transpose());
}

Subquotient::Subquotient(const Subspace& z, const Subspace& b) : z_(z), b_(b), reps_(0, 0) {
    if (z.ambient_dim() != b.ambient_dim())
        throw input_error("subquotient: ambient dimension mismatch");
    if (!z.contains(b))
        throw invariant_error("subquotient: denominator is not contained in numerator");

    // Representatives: sweep the RREF basis rows of Z against an echelon
    // collection seeded with the rows of B; rows of Z that contribute a new
    // pivot become the representatives.  Deterministic by construction.
    const int n = z.ambient_dim();
    std::vector<RatVector> echelon;   // rows with distinct leading columns
    std::vector<int> leads;           // their leading columns
    auto reduce = [&](RatVector v) {
        bool changed = true;
        while (changed) {
            changed = false;
            int lead = -1;
            for (int c = 0; c < n; ++c)
                if (v[c] != 0) {
                    lead = c;
                    break;
                }
            if (lead < 0) break;
            for (size_t i = 0; i < echelon.size(); ++i) {
                if (leads[i] == lead) {
                    Rat f = v[lead] / echelon[i][lead];
                    for (int c = 0; c < n; ++c) v[c] -= f * echelon[i][c];
                    changed = true;
                    break;
                }
            }
        }
        return v;
    };
    auto push = [&](const RatVector& v) {
        int lead = -1;
        for (int c = 0; c < n; ++c)
            if (v[c] != 0) {
                lead = c;
                break;
            }
        if (lead < 0) return false;
        echelon.push_back(v);
        leads.push_back(lead);
        return true;
    };
    for (int r = 0; r < b.basis().rows(); ++r) push(b.basis().row(r));
    std::vector<RatVector> reps;
    for (int r = 0; r < z.basis().rows(); ++r) {
        RatVector v = reduce(z.basis().row(r));
        if (push(v)) reps.push_back(v);
    }
    reps_ = RatMatrix::from_rows(n, reps);
    if (reps_.rows() != dim()) throw invariant_error("subquotient: representative count mismatch");
}

RatVector Subquotient::coords(const RatVector& v) const {
    if ((int)v.size() != ambient_dim()) throw input_error("coords: length mismatch");
    // Solve [B; reps]^T x = v; the trailing block of x is the quotient
    // coordinate vector.
    RatMatrix a = RatMatrix::vstack(b_.basis(), reps_).transpose();
    RatMatrix rhs((int)v.size(), 1);
    for (int r = 0; r < rhs.rows(); ++r) rhs.at(r, 0) = v[r];
    auto x = solve(a, rhs);
    if (!x) throw invariant_error("coords: vector is not in the numerator subspace");
    RatVector out(dim());
    for (int i = 0; i < dim(); ++i) out[i] = x->at(b_.dim() + i, 0);
    return out;
}

RatMatrix induced_map(const RatMatrix& f, const Subquotient& src, const Subquotient& tgt) {
    if (f.cols() != src.ambient_dim() || f.rows() != tgt.ambient_dim())
        throw input_error("induced_map: shape does not match ambients");
    for (int r = 0; r < src.numerator().basis().rows(); ++r)
        if (!tgt.numerator().contains(f.apply(src.numerator().basis().row(r))))
            throw invariant_error("induced_map: f(Z_src) is not contained in Z_tgt");
    for (int r = 0; r < src.denominator().basis().rows(); ++r)
        if (!tgt.denominator().contains(f.apply(src.denominator().basis().row(r))))
            throw invariant_error("induced_map: f(B_src) is not contained in B_tgt");
    RatMatrix out(tgt.dim(), src.dim());
    for (int j = 0; j < src.dim(); ++j) {
        RatVector c = tgt.coords(f.apply(src.representatives().row(j)));
        for (int i = 0; i < tgt.dim(); ++i) out.at(i, j) = c[i];
    }
    return out;
}

std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) throw input_error("solve: row mismatch");
    RatMatrix aug = RatMatrix::hstack(a, b);
    std::vector<int> pivots = rref_inplace(aug);
    // Any pivot in the RHS block means inconsistency.
    for (int p : pivots)
        if (p >= a.cols()) return std::nullopt;
    RatMatrix x(a.cols(), b.cols());
    for (int pr = 0; pr < (int)pivots.size(); ++pr)
        for (int c = 0; c < b.cols(); ++c) x.at(pivots[pr], c) = aug.at(pr, a.cols() + c);
    return x;
}

}  // namespace hodge
