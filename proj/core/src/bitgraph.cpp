#include "chaincond/bitgraph.hpp"

#include <algorithm>

namespace chaincond {

namespace {

// Greedy-color the candidate set and return vertices ordered by color,
// with their color numbers; processed in reverse the color number is an
// upper bound on the clique extendable within the remaining candidates.
void color_sort(const BitGraph& g, const std::vector<int>& candidates,
                std::vector<int>& ordered, std::vector<int>& bounds) {
    ordered.clear();
    bounds.clear();
    std::vector<int> pool = candidates;
    int color = 0;
    while (!pool.empty()) {
        ++color;
        std::vector<int> rest;
        BitRow taken_neighbors(g.size());
        for (int v : pool) {
            if (taken_neighbors.test(v)) {
                rest.push_back(v);
            } else {
                ordered.push_back(v);
                bounds.push_back(color);
                taken_neighbors |= g.neighbors(v);
            }
        }
        pool = std::move(rest);
    }
}

void expand(const BitGraph& g, std::vector<int>& current, std::vector<int>& candidates,
            std::vector<int>& best) {
    std::vector<int> ordered;
    std::vector<int> bounds;
    color_sort(g, candidates, ordered, bounds);
    for (int i = static_cast<int>(ordered.size()) - 1; i >= 0; --i) {
        if (static_cast<int>(current.size()) + bounds[static_cast<size_t>(i)] <=
            static_cast<int>(best.size()))
            return;
        const int v = ordered[static_cast<size_t>(i)];
        current.push_back(v);
        std::vector<int> next;
        for (int j = 0; j < i; ++j) {
            const int u = ordered[static_cast<size_t>(j)];
            if (g.adjacent(u, v)) next.push_back(u);
        }
        if (next.empty()) {
            if (current.size() > best.size()) best = current;
        } else {
            expand(g, current, next, best);
        }
        current.pop_back();
    }
}

} // namespace

std::vector<int> max_clique(const BitGraph& g) {
    std::vector<int> candidates(static_cast<size_t>(g.size()));
    for (int v = 0; v < g.size(); ++v) candidates[static_cast<size_t>(v)] = v;
    // Highest degree first helps the coloring bound.
    std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
        const int da = g.neighbors(a).count();
        const int db = g.neighbors(b).count();
        return da != db ? da > db : a < b;
    });
    std::vector<int> current;
    std::vector<int> best;
    if (!candidates.empty()) expand(g, current, candidates, best);
    std::sort(best.begin(), best.end());
    return best;
}

namespace {

bool try_color(const BitGraph& g, const std::vector<int>& order, size_t at, int limit,
               std::vector<int>& coloring, int used) {
    if (at == order.size()) return true;
    const int v = order[at];
    for (int c = 0; c < std::min(used + 1, limit); ++c) {
        bool ok = true;
        g.neighbors(v).for_each([&](int u) {
            if (coloring[static_cast<size_t>(u)] == c) ok = false;
        });
        if (!ok) continue;
        coloring[static_cast<size_t>(v)] = c;
        if (try_color(g, order, at + 1, limit, coloring, std::max(used, c + 1))) return true;
        coloring[static_cast<size_t>(v)] = -1;
    }
    return false;
}

} // namespace

std::pair<int, std::vector<int>> chromatic_number(const BitGraph& g) {
    const int n = g.size();
    if (n == 0) return {0, {}};
    std::vector<int> order(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int da = g.neighbors(a).count();
        const int db = g.neighbors(b).count();
        return da != db ? da > db : a < b;
    });
    const int lower = static_cast<int>(max_clique(g).size());
    for (int limit = std::max(1, lower);; ++limit) {
        std::vector<int> coloring(static_cast<size_t>(n), -1);
        if (try_color(g, order, 0, limit, coloring, 0)) return {limit, coloring};
    }
}

} // namespace chaincond
