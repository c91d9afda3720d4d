#pragma once

#include <optional>

#include "hodge/types.hpp"

namespace hodge {

using RatVector = std::vector<Rat>;

// Dense matrix over Q.  A matrix of shape r x c represents a linear map from
// a c-dimensional space to an r-dimensional one (columns index the source).
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

    static RatMatrix identity(int n);
    static RatMatrix zero(int rows, int cols) { return RatMatrix(rows, cols); }
    static RatMatrix from_rows(int cols, const std::vector<RatVector>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) {
        check(r, c);
        return data_[size_t(r) * cols_ + c];
    }
    const Rat& at(int r, int c) const {
        check(r, c);
        return data_[size_t(r) * cols_ + c];
    }

    RatVector row(int r) const;
    RatVector col(int c) const;
    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& rhs) const;
    RatVector apply(const RatVector& v) const;
    RatMatrix operator+(const RatMatrix& rhs) const;
    RatMatrix operator-() const;
    bool operator==(const RatMatrix& rhs) const = default;
    bool is_zero() const;
    void scale(const Rat& c);

    // Horizontal / vertical concatenation.
    static RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);
    static RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);

  private:
    void check(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw input_error("matrix index out of bounds");
    }
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> data_;
};

// Reduced row echelon form; returns the 0-based pivot column of each
// nonzero row, in order.  The input is reduced in place.
std::vector<int> rref_inplace(RatMatrix& m);

int rank(const RatMatrix& m);

// A linear subspace of Q^ambient given by a canonical (RREF) row basis.
class Subspace {
  public:
    explicit Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    // Rows of `vectors` span the subspace; the stored basis is their RREF.
    static Subspace span(int ambient_dim, const RatMatrix& vectors);
    static Subspace full(int ambient_dim);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const RatMatrix& basis() const { return basis_; }

    bool contains(const RatVector& v) const;
    bool contains(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;

    bool operator==(const Subspace& rhs) const = default;

  private:
    int ambient_;
    RatMatrix basis_;  // RREF rows
};

// The kernel {v : Mv = 0}, as a subspace of the source Q^cols.
Subspace kernel_basis(const RatMatrix& m);

// The column space, as a subspace of the target Q^rows.
Subspace image_basis(const RatMatrix& m);

// A subquotient Z/B of Q^ambient, with a deterministic complement basis of
// B inside Z ("representatives").  Quotient coordinates of any v in Z are the
// coefficients of the representatives in the unique expansion of v over
// (basis of B) + representatives.
class Subquotient {
  public:
    Subquotient(const Subspace& z, const Subspace& b);

    int ambient_dim() const { return z_.ambient_dim(); }
    int dim() const { return z_.dim() - b_.dim(); }
    const Subspace& numerator() const { return z_; }
    const Subspace& denominator() const { return b_; }
    // dim() x ambient matrix, one representative per row.
    const RatMatrix& representatives() const { return reps_; }

    // Quotient coordinates of v (throws invariant_error if v is not in Z).
    RatVector coords(const RatVector& v) const;

  private:
    Subspace z_;
    Subspace b_;
    RatMatrix reps_;
};

// The matrix of the map src -> tgt induced by f on representative bases.
// Requires f(Z_src) in Z_tgt and f(B_src) in B_tgt; throws invariant_error
// naming the violated containment otherwise.
RatMatrix induced_map(const RatMatrix& f, const Subquotient& src, const Subquotient& tgt);

// Solve A x = b exactly; empty optional if inconsistent.  Used by the
// subquotient coordinate extraction.
std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b);

}  // namespace hodge
