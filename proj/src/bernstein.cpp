#include "hodge/bernstein.hpp"

#include <algorithm>

namespace hodge {

BernsteinData bernstein_data(int n, const IndexSet& sigma) {
    if (n < 1) throw input_error("bernstein_data: need at least one variable");
    IndexSet s = sigma;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int j : s)
        if (j < 0 || j >= n) throw input_error("bernstein_data: index out of range");
    return {n, s};
}

long long BernsteinData::hilbert_function(int v) const {
    if (v < 0) return 0;
    // Convolve per-variable counts of |a_i| = k: 1 for all variables at k = 0,
    // 2 at k >= 1 for inverted variables, 1 for the rest.
    std::vector<long long> f(v + 1, 0);
    f[0] = 1;
    for (int j = 0; j < n; ++j) {
        bool inv = contains_index(sigma, j);
        std::vector<long long> g(v + 1, 0);
        for (int t = 0; t <= v; ++t) {
            if (f[t] == 0) continue;
            g[t] += f[t];
            for (int k = 1; t + k <= v; ++k) g[t + k] += f[t] * (inv ? 2 : 1);
        }
        f = std::move(g);
    }
    long long total = 0;
    for (long long c : f) total += c;
    return total;
}

BernsteinResult bernstein_dimension(const BernsteinData& data) {
    int n = data.n;
    // h(v) agrees with its Hilbert polynomial for all v >= 0 here, but sample
    // past n anyway and verify the difference table stays constant out to 3n.
    int lo = n + 1, hi = 3 * n + 2;
    std::vector<long long> samples;
    for (int v = lo; v <= hi; ++v) samples.push_back(data.hilbert_function(v));

    std::vector<long long> diff = samples;
    int deg = 0;
    while (true) {
        bool constant = true;
        for (size_t i = 1; i < diff.size(); ++i) constant = constant && diff[i] == diff[0];
        if (constant) break;
        if (diff.size() < 2) throw invariant_error("bernstein_dimension: no polynomial behavior");
        std::vector<long long> next(diff.size() - 1);
        for (size_t i = 0; i + 1 < diff.size(); ++i) next[i] = diff[i + 1] - diff[i];
        diff = std::move(next);
        ++deg;
    }
    if (diff.empty() || diff[0] == 0)
        throw invariant_error("bernstein_dimension: degenerate difference table");
    BernsteinResult res;
    res.dimension = deg;
    res.multiplicity = diff[0];  // deg-th difference of a degree-deg polynomial = deg! * lead
    res.samples = std::move(samples);
    return res;
}

bool bernstein_bound_check(int n, const IndexSet& sigma) {
    BernsteinResult r = bernstein_dimension(bernstein_data(n, sigma));
    long long expect_mult = 1;
    for (size_t i = 0; i < sigma.size(); ++i) expect_mult *= 2;
    return r.dimension == n && r.multiplicity == expect_mult;
}

}  // namespace hodge
