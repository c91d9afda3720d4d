#include "hodge/types.hpp"

#include <algorithm>
#include <functional>

namespace hodge {

std::vector<IndexSet> subsets_of_size(int m, int t) {
    if (t < 0 || t > m) return {};
    std::vector<IndexSet> out;
    IndexSet cur;
    // Recursive lexicographic enumeration, iterative via explicit stack is
    // overkill at these sizes.
    std::function<void(int)> rec = [&](int start) {
        if ((int)cur.size() == t) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < m; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

int insertion_position(const IndexSet& s, int j) {
    int pos = 0;
    for (int i : s) {
        if (i == j) throw invariant_error("insertion_position: index already present");
        if (i < j) ++pos;
    }
    return pos;
}

IndexSet insert_sorted(const IndexSet& s, int j) {
    IndexSet out = s;
    out.insert(std::lower_bound(out.begin(), out.end(), j), j);
    return out;
}

bool contains_index(const IndexSet& s, int j) {
    return std::binary_search(s.begin(), s.end(), j);
}

}  // namespace hodge
