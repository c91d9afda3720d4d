#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hodge {

// Exact rational scalar. No floating point appears anywhere in this library.
using Rat = mpq_class;

// A point of the Z^n grading lattice (exponent vector of a monomial).
using MultiDegree = std::vector<int>;

// A sorted list of 0-based indices (variable sets, Cech subsets, wedge sets).
using IndexSet = std::vector<int>;

// Malformed caller input (bad dimensions, violated preconditions).
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// A broken internal invariant (ill-formed cohomology data, failed containment).
struct invariant_error : std::logic_error {
    explicit invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

inline MultiDegree add(const MultiDegree& a, const MultiDegree& b) {
    if (a.size() != b.size()) throw input_error("multidegree length mismatch");
    MultiDegree c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

inline MultiDegree unit_degree(int n, int j, int value = 1) {
    MultiDegree e(n, 0);
    e.at(j) = value;
    return e;
}

// Indicator vector chi_S of a subset of {0..n-1}.
inline MultiDegree indicator(int n, const IndexSet& s) {
    MultiDegree chi(n, 0);
    for (int i : s) chi.at(i) = 1;
    return chi;
}

inline bool is_zero_degree(const MultiDegree& a) {
    for (int c : a)
        if (c != 0) return false;
    return true;
}

// All t-element subsets of {0..m-1} in lexicographic order.
std::vector<IndexSet> subsets_of_size(int m, int t);

// Position of j in the sorted set s (j must not be a member); this is the
// number of elements of s smaller than j, i.e. the exponent of the
// insertion sign (-1)^pos.
int insertion_position(const IndexSet& s, int j);

// s with j inserted, kept sorted.
IndexSet insert_sorted(const IndexSet& s, int j);

bool contains_index(const IndexSet& s, int j);

}  // namespace hodge
