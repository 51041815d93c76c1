#pragma once

// Independent brute-force oracles kept away from the implementation paths
// they cross-check.

#include <vector>

#include "chaincond/condition.hpp"
#include "chaincond/partition.hpp"

namespace chaincond::testing {

/// All-subsets anti-clique test: no subset of size >= 2 is an edge.
inline bool naive_anti_clique(const HypergraphKind& kind, const std::vector<Branch>& s) {
    const size_t n = s.size();
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        if (__builtin_popcountll(mask) < 2) continue;
        std::vector<Branch> subset;
        for (size_t i = 0; i < n; ++i)
            if (mask & (size_t{1} << i)) subset.push_back(s[i]);
        if (is_edge(kind, subset)) return false;
    }
    return true;
}

/// Literal subset semantics of the class linkedness check: every
/// (n-1)-element set of class members below depth has an anti-clique union.
inline bool brute_class_linked(const SeparatorKey& key, int n, int depth) {
    const std::vector<Condition> members = class_members(key, depth);
    const int subset = n - 1;
    const int m = static_cast<int>(members.size());
    if (m < subset) return true;
    std::vector<int> idx(static_cast<size_t>(subset));
    for (int i = 0; i < subset; ++i) idx[static_cast<size_t>(i)] = i;
    for (;;) {
        std::vector<Condition> chosen;
        for (int i : idx) chosen.push_back(members[static_cast<size_t>(i)]);
        if (!is_anti_clique(key.kind(), element_union(chosen))) return false;
        int pos = subset - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == m - subset + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
        for (int i = pos + 1; i < subset; ++i)
            idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
    }
    return true;
}

/// Every branch over the kind whose support sits below `depth`.
inline std::vector<Branch> branches_below(const TreeKind& kind, int depth) {
    std::vector<Branch> out;
    Word current;
    auto rec = [&](auto&& self, int index) -> void {
        if (index == depth) {
            out.emplace_back(kind, current);
            return;
        }
        for (int v = 0; v < kind.degree_at(index); ++v) {
            current.push_back(v);
            self(self, index + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace chaincond::testing
