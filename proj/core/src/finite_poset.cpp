#include "chaincond/finite_poset.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace chaincond {

void FinitePoset::check_index(int v) const {
    if (v < 0 || v >= size_)
        throw Error(ErrorCode::IndexOutOfRange,
                    "element " + std::to_string(v) + " outside poset of size " + std::to_string(size_));
}

FinitePoset FinitePoset::from_pairs(int size, const std::vector<std::pair<int, int>>& pairs) {
    if (size < 0) throw Error(ErrorCode::IndexOutOfRange, "negative poset size");
    std::vector<BitRow> down(static_cast<size_t>(size), BitRow(size));
    for (int v = 0; v < size; ++v) down[static_cast<size_t>(v)].set(v);
    for (const auto& [a, b] : pairs) {
        if (a < 0 || a >= size || b < 0 || b >= size)
            throw Error(ErrorCode::IndexOutOfRange, "order pair outside the universe");
        down[static_cast<size_t>(b)].set(a);
    }
    // Reflexive-transitive closure by propagation to a fixpoint.
    for (bool changed = true; changed;) {
        changed = false;
        for (int b = 0; b < size; ++b) {
            BitRow merged = down[static_cast<size_t>(b)];
            down[static_cast<size_t>(b)].for_each(
                [&](int a) { merged |= down[static_cast<size_t>(a)]; });
            if (!(merged == down[static_cast<size_t>(b)])) {
                down[static_cast<size_t>(b)] = std::move(merged);
                changed = true;
            }
        }
    }
    for (int a = 0; a < size; ++a) {
        for (int b = a + 1; b < size; ++b) {
            if (down[static_cast<size_t>(b)].test(a) && down[static_cast<size_t>(a)].test(b))
                throw Error(ErrorCode::NotAPartialOrder,
                            "antisymmetry fails on " + std::to_string(a) + "," + std::to_string(b));
        }
    }
    return FinitePoset(size, std::move(down));
}

FinitePoset FinitePoset::from_relation(int size, std::vector<BitRow> below) {
    if (static_cast<int>(below.size()) != size)
        throw Error(ErrorCode::NotAPartialOrder, "relation size mismatch");
    for (int v = 0; v < size; ++v) {
        if (!below[static_cast<size_t>(v)].test(v))
            throw Error(ErrorCode::NotAPartialOrder, "missing reflexive pair");
    }
    for (int b = 0; b < size; ++b) {
        bool ok = true;
        below[static_cast<size_t>(b)].for_each([&](int a) {
            if (!below[static_cast<size_t>(a)].is_subset_of(below[static_cast<size_t>(b)]))
                ok = false;
        });
        if (!ok) throw Error(ErrorCode::NotAPartialOrder, "relation is not transitive");
    }
    for (int a = 0; a < size; ++a) {
        for (int b = a + 1; b < size; ++b) {
            if (below[static_cast<size_t>(b)].test(a) && below[static_cast<size_t>(a)].test(b))
                throw Error(ErrorCode::NotAPartialOrder, "antisymmetry fails");
        }
    }
    return FinitePoset(size, std::move(below));
}

bool FinitePoset::leq(int a, int b) const {
    check_index(a);
    check_index(b);
    return down_[static_cast<size_t>(b)].test(a);
}

const BitRow& FinitePoset::down(int v) const {
    check_index(v);
    return down_[static_cast<size_t>(v)];
}

bool FinitePoset::compatible(int x, int y) const {
    check_index(x);
    check_index(y);
    return down_[static_cast<size_t>(x)].intersects(down_[static_cast<size_t>(y)]);
}

std::vector<std::pair<int, int>> FinitePoset::strict_pairs() const {
    std::vector<std::pair<int, int>> pairs;
    for (int b = 0; b < size_; ++b) {
        down_[static_cast<size_t>(b)].for_each([&](int a) {
            if (a != b) pairs.emplace_back(a, b);
        });
    }
    return pairs;
}

PartitionCondition PartitionCondition::n_linked(int n) {
    if (n < 2) throw Error(ErrorCode::BadArity, "linkedness level must be at least 2");
    return {Kind::NLinked, n};
}

PartitionCondition PartitionCondition::antichain_lt(int n) {
    if (n < 2) throw Error(ErrorCode::BadArity, "antichain bound must be at least 2");
    return {Kind::AntichainLt, n};
}

std::string PartitionCondition::describe() const {
    switch (kind_) {
    case Kind::Linked: return "linked";
    case Kind::NLinked: return "nlinked:" + std::to_string(n_);
    case Kind::Centred: return "centred";
    case Kind::AntichainLt: return "antichain-lt:" + std::to_string(n_);
    }
    return "?";
}

int PartitionCertificate::parts() const {
    int count = 0;
    for (int l : labels) count = std::max(count, l + 1);
    return count;
}

namespace {

BitGraph incompatibility_graph(const FinitePoset& poset) {
    BitGraph g(poset.size());
    for (int a = 0; a < poset.size(); ++a)
        for (int b = a + 1; b < poset.size(); ++b)
            if (!poset.compatible(a, b)) g.add_edge(a, b);
    return g;
}

// Common lower bounds of a member list.
BitRow common_down(const FinitePoset& poset, const std::vector<int>& members) {
    BitRow meet(poset.size());
    for (int v = 0; v < poset.size(); ++v) meet.set(v);
    for (int m : members) meet &= poset.down(m);
    return meet;
}

bool subsets_have_bounds(const FinitePoset& poset, const std::vector<int>& members, int n) {
    const int m = static_cast<int>(members.size());
    if (m <= n) return common_down(poset, members).any();
    std::vector<int> idx(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
    for (;;) {
        std::vector<int> subset;
        for (int i : idx) subset.push_back(members[static_cast<size_t>(i)]);
        if (!common_down(poset, subset).any()) return false;
        int pos = n - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == m - n + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
        for (int i = pos + 1; i < n; ++i)
            idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
    }
    return true;
}

// Is there a clique of the given size among `pool` in g?
bool has_clique(const BitGraph& g, std::vector<int> pool, int size) {
    if (size <= 0) return true;
    if (static_cast<int>(pool.size()) < size) return false;
    for (size_t i = 0; i < pool.size(); ++i) {
        std::vector<int> next;
        for (size_t j = i + 1; j < pool.size(); ++j)
            if (g.adjacent(pool[i], pool[j])) next.push_back(pool[j]);
        if (has_clique(g, std::move(next), size - 1)) return true;
    }
    return false;
}

bool part_valid(const FinitePoset& poset, const BitGraph& incompat,
                const PartitionCondition& condition, const std::vector<int>& members) {
    switch (condition.kind()) {
    case PartitionCondition::Kind::Linked:
        for (size_t a = 0; a < members.size(); ++a)
            for (size_t b = a + 1; b < members.size(); ++b)
                if (incompat.adjacent(members[a], members[b])) return false;
        return true;
    case PartitionCondition::Kind::Centred:
        return members.empty() || common_down(poset, members).any();
    case PartitionCondition::Kind::NLinked:
        return subsets_have_bounds(poset, members, condition.n());
    case PartitionCondition::Kind::AntichainLt:
        return !has_clique(incompat, members, condition.n());
    }
    return false;
}

// Can v join the part without breaking the condition? `meets` caches the
// running common-lower-bound row per part for the Centred case.
bool can_join(const FinitePoset& poset, const BitGraph& incompat,
              const PartitionCondition& condition, const std::vector<int>& part,
              const BitRow& part_meet, int v) {
    switch (condition.kind()) {
    case PartitionCondition::Kind::Linked:
        for (int m : part)
            if (incompat.adjacent(m, v)) return false;
        return true;
    case PartitionCondition::Kind::Centred: {
        BitRow meet = part_meet;
        meet &= poset.down(v);
        return meet.any();
    }
    case PartitionCondition::Kind::NLinked: {
        const int n = condition.n();
        std::vector<int> with = part;
        with.push_back(v);
        if (static_cast<int>(with.size()) <= n) return common_down(poset, with).any();
        // Check the n-subsets that contain v.
        const int pick = n - 1;
        const int m = static_cast<int>(part.size());
        std::vector<int> idx(static_cast<size_t>(pick));
        for (int i = 0; i < pick; ++i) idx[static_cast<size_t>(i)] = i;
        for (;;) {
            std::vector<int> subset{v};
            for (int i : idx) subset.push_back(part[static_cast<size_t>(i)]);
            if (!common_down(poset, subset).any()) return false;
            int pos = pick - 1;
            while (pos >= 0 && idx[static_cast<size_t>(pos)] == m - pick + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<size_t>(pos)];
            for (int i = pos + 1; i < pick; ++i)
                idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
        }
        return true;
    }
    case PartitionCondition::Kind::AntichainLt: {
        std::vector<int> pool;
        for (int m : part)
            if (incompat.adjacent(m, v)) pool.push_back(m);
        return !has_clique(incompat, std::move(pool), condition.n() - 1);
    }
    }
    return false;
}

struct PartState {
    std::vector<std::vector<int>> members;
    std::vector<BitRow> meets;
};

void assign_search(const FinitePoset& poset, const BitGraph& incompat,
                   const PartitionCondition& condition, const std::vector<int>& order, size_t at,
                   PartState& state, std::vector<int>& labels, int& best,
                   std::vector<int>& best_labels) {
    const int used = static_cast<int>(state.members.size());
    if (used >= best) return;
    if (at == order.size()) {
        best = used;
        best_labels = labels;
        return;
    }
    const int v = order[at];
    for (int part = 0; part <= used && part < best; ++part) {
        if (part == used) {
            // Open a fresh part (canonical: always the next index).
            state.members.push_back({v});
            state.meets.push_back(poset.down(v));
            labels[static_cast<size_t>(v)] = part;
            assign_search(poset, incompat, condition, order, at + 1, state, labels, best,
                          best_labels);
            state.members.pop_back();
            state.meets.pop_back();
        } else {
            if (!can_join(poset, incompat, condition, state.members[static_cast<size_t>(part)],
                          state.meets[static_cast<size_t>(part)], v))
                continue;
            state.members[static_cast<size_t>(part)].push_back(v);
            BitRow saved = state.meets[static_cast<size_t>(part)];
            state.meets[static_cast<size_t>(part)] &= poset.down(v);
            labels[static_cast<size_t>(v)] = part;
            assign_search(poset, incompat, condition, order, at + 1, state, labels, best,
                          best_labels);
            state.members[static_cast<size_t>(part)].pop_back();
            state.meets[static_cast<size_t>(part)] = std::move(saved);
        }
    }
    labels[static_cast<size_t>(v)] = -1;
}

} // namespace

std::pair<int, PartitionCertificate> min_parts(const FinitePoset& poset,
                                               const PartitionCondition& condition,
                                               int size_limit) {
    const bool graph_engine = condition.kind() == PartitionCondition::Kind::Linked;
    if (size_limit < 0) {
        size_limit = (graph_engine || condition.kind() == PartitionCondition::Kind::AntichainLt)
                         ? 16
                         : 12;
    }
    if (poset.size() > size_limit)
        throw Error(ErrorCode::TooLarge, "poset of size " + std::to_string(poset.size()) +
                                             " exceeds limit " + std::to_string(size_limit));
    if (poset.size() == 0) return {0, PartitionCertificate{{}, condition}};

    if (graph_engine) {
        // Linked parts are the independent sets of the incompatibility graph.
        auto [count, coloring] = chromatic_number(incompatibility_graph(poset));
        return {count, PartitionCertificate{std::move(coloring), condition}};
    }

    const BitGraph incompat = incompatibility_graph(poset);
    std::vector<int> order(static_cast<size_t>(poset.size()));
    for (int v = 0; v < poset.size(); ++v) order[static_cast<size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int da = incompat.neighbors(a).count();
        const int db = incompat.neighbors(b).count();
        return da != db ? da > db : a < b;
    });

    // Greedy first-fit gives the initial bound.
    PartState greedy;
    std::vector<int> greedy_labels(static_cast<size_t>(poset.size()), -1);
    for (int v : order) {
        bool placed = false;
        for (size_t part = 0; part < greedy.members.size() && !placed; ++part) {
            if (can_join(poset, incompat, condition, greedy.members[part], greedy.meets[part], v)) {
                greedy.members[part].push_back(v);
                greedy.meets[part] &= poset.down(v);
                greedy_labels[static_cast<size_t>(v)] = static_cast<int>(part);
                placed = true;
            }
        }
        if (!placed) {
            greedy.members.push_back({v});
            greedy.meets.push_back(poset.down(v));
            greedy_labels[static_cast<size_t>(v)] = static_cast<int>(greedy.members.size()) - 1;
        }
    }

    int best = static_cast<int>(greedy.members.size());
    std::vector<int> best_labels = greedy_labels;
    PartState state;
    std::vector<int> labels(static_cast<size_t>(poset.size()), -1);
    assign_search(poset, incompat, condition, order, 0, state, labels, best, best_labels);
    return {best, PartitionCertificate{std::move(best_labels), condition}};
}

bool check_partition(const FinitePoset& poset, const PartitionCertificate& cert) {
    if (static_cast<int>(cert.labels.size()) != poset.size()) return false;
    std::map<int, std::vector<int>> parts;
    for (int v = 0; v < poset.size(); ++v) {
        const int label = cert.labels[static_cast<size_t>(v)];
        if (label < 0) return false;
        parts[label].push_back(v);
    }
    const BitGraph incompat = incompatibility_graph(poset);
    for (const auto& [label, members] : parts)
        if (!part_valid(poset, incompat, cert.condition, members)) return false;
    return true;
}

std::vector<int> gh_amplify(const FinitePoset& poset, const GHConfiguration& cfg) {
    const int n = cfg.n;
    if (n < 2) throw Error(ErrorCode::InvalidConfiguration, "n must be at least 2");
    const size_t rows = static_cast<size_t>(n - 1);
    if (cfg.p_list.size() != rows)
        throw Error(ErrorCode::InvalidConfiguration, "p-list must have n-1 elements");
    if (cfg.q_lists.size() != rows || cfg.r_matrix.size() != rows)
        throw Error(ErrorCode::InvalidConfiguration, "q-lists and r-matrix must have n-1 rows");
    for (size_t i = 0; i < rows; ++i) {
        if (cfg.q_lists[i].size() != rows)
            throw Error(ErrorCode::InvalidConfiguration, "q-list row must have n-1 elements");
        if (cfg.r_matrix[i].size() != rows)
            throw Error(ErrorCode::InvalidConfiguration, "r-matrix row must have n-1 elements");
    }
    auto check_range = [&](int v) {
        if (v < 0 || v >= poset.size())
            throw Error(ErrorCode::InvalidConfiguration,
                        "element " + std::to_string(v) + " outside the poset");
    };
    for (int p : cfg.p_list) check_range(p);
    for (const auto& row : cfg.q_lists)
        for (int q : row) check_range(q);
    for (const auto& row : cfg.r_matrix)
        for (int r : row) check_range(r);

    for (size_t a = 0; a < rows; ++a) {
        for (size_t b = a + 1; b < rows; ++b) {
            if (poset.compatible(cfg.p_list[a], cfg.p_list[b]))
                throw Error(ErrorCode::InvalidConfiguration, "p-list is not an antichain");
        }
    }
    for (size_t i = 0; i < rows; ++i) {
        for (size_t a = 0; a < rows; ++a) {
            for (size_t b = a + 1; b < rows; ++b) {
                if (poset.compatible(cfg.q_lists[i][a], cfg.q_lists[i][b]))
                    throw Error(ErrorCode::InvalidConfiguration,
                                "q-list " + std::to_string(i) + " is not an antichain");
            }
        }
    }
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < rows; ++j) {
            if (!poset.leq(cfg.r_matrix[i][j], cfg.p_list[i]))
                throw Error(ErrorCode::InvalidConfiguration, "r does not extend its p");
            if (!poset.leq(cfg.r_matrix[i][j], cfg.q_lists[i][j]))
                throw Error(ErrorCode::InvalidConfiguration, "r does not extend its q");
        }
    }

    std::vector<int> amplified;
    for (const auto& row : cfg.r_matrix) amplified.insert(amplified.end(), row.begin(), row.end());
    for (size_t a = 0; a < amplified.size(); ++a) {
        for (size_t b = a + 1; b < amplified.size(); ++b) {
            if (poset.compatible(amplified[a], amplified[b]))
                throw Error(ErrorCode::InvalidConfiguration, "amplified set is not an antichain");
        }
    }
    if (n > 2 && static_cast<int>(amplified.size()) <= n)
        throw Error(ErrorCode::InvalidConfiguration, "(n-1)^2 does not exceed n");
    return amplified;
}

std::optional<GHConfiguration> gh_find_configuration(const FinitePoset& poset,
                                                     const PartitionCertificate& partition,
                                                     int n) {
    if (n < 2) throw Error(ErrorCode::InvalidConfiguration, "n must be at least 2");
    if (static_cast<int>(partition.labels.size()) != poset.size())
        throw Error(ErrorCode::InvalidConfiguration, "partition does not label the poset");
    const int want = n - 1;
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < poset.size(); ++v) classes[partition.labels[static_cast<size_t>(v)]].push_back(v);

    std::vector<std::vector<int>> antichains; // scratch for the current class
    auto antichains_of = [&](const std::vector<int>& pool) {
        std::vector<std::vector<int>> out;
        std::vector<int> current;
        auto rec = [&](auto&& self, size_t start) -> void {
            if (static_cast<int>(current.size()) == want) {
                out.push_back(current);
                return;
            }
            for (size_t i = start; i < pool.size(); ++i) {
                bool ok = true;
                for (int chosen : current)
                    if (poset.compatible(chosen, pool[i])) ok = false;
                if (!ok) continue;
                current.push_back(pool[i]);
                self(self, i + 1);
                current.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    };

    for (const auto& [class_k, members_k] : classes) {
        antichains = antichains_of(members_k);
        if (antichains.empty()) continue;
        for (const auto& [class_l, members_l] : classes) {
            BitRow class_l_mask(poset.size());
            for (int r : members_l) class_l_mask.set(r);
            for (const auto& p_list : antichains) {
                GHConfiguration cfg;
                cfg.n = n;
                cfg.class_k = class_k;
                cfg.class_l = class_l;
                cfg.p_list = p_list;
                bool all_rows = true;
                for (int p : p_list) {
                    // Reachable through class l: some r <= p, q with label l.
                    BitRow through_p = poset.down(p);
                    through_p &= class_l_mask;
                    std::vector<int> reach;
                    for (int q : members_k) {
                        BitRow meet = through_p;
                        meet &= poset.down(q);
                        if (meet.any()) reach.push_back(q);
                    }
                    const auto q_options = antichains_of(reach);
                    if (q_options.empty()) {
                        all_rows = false;
                        break;
                    }
                    const std::vector<int>& q_row = q_options.front();
                    std::vector<int> r_row;
                    for (int q : q_row) {
                        BitRow meet = through_p;
                        meet &= poset.down(q);
                        int r = -1;
                        meet.for_each([&](int z) {
                            if (r < 0) r = z;
                        });
                        r_row.push_back(r);
                    }
                    cfg.q_lists.push_back(q_row);
                    cfg.r_matrix.push_back(std::move(r_row));
                }
                if (all_rows) return cfg;
            }
        }
    }
    return std::nullopt;
}

std::pair<FinitePoset, GHConfiguration> gh_demo_poset() {
    // 0,1 = p1,p2; 2..5 = q11,q12,q21,q22; 6..9 = r11,r12,r21,r22.
    std::vector<std::pair<int, int>> pairs = {
        {6, 0}, {6, 2}, {7, 0}, {7, 3}, {8, 1}, {8, 4}, {9, 1}, {9, 5},
    };
    FinitePoset poset = FinitePoset::from_pairs(10, pairs);
    GHConfiguration cfg;
    cfg.n = 3;
    cfg.class_k = 0;
    cfg.class_l = 0;
    cfg.p_list = {0, 1};
    cfg.q_lists = {{2, 3}, {4, 5}};
    cfg.r_matrix = {{6, 7}, {8, 9}};
    return {std::move(poset), std::move(cfg)};
}

FiniteHypergraph::FiniteHypergraph(int vertices, std::vector<std::vector<int>> edges)
    : vertices_(vertices), edges_(std::move(edges)) {
    if (vertices_ < 0) throw Error(ErrorCode::IndexOutOfRange, "negative vertex count");
    if (vertices_ > 30) throw Error(ErrorCode::TooLarge, "hypergraphs are capped at 30 vertices");
    for (auto& edge : edges_) {
        std::sort(edge.begin(), edge.end());
        if (edge.size() < 2)
            throw Error(ErrorCode::InvalidConfiguration, "edges need at least two vertices");
        if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
            throw Error(ErrorCode::InvalidConfiguration, "edge vertices must be distinct");
        for (int v : edge) {
            if (v < 0 || v >= vertices_)
                throw Error(ErrorCode::IndexOutOfRange, "edge vertex outside the universe");
        }
    }
}

std::vector<uint32_t> FiniteHypergraph::component_masks() const {
    std::vector<int> parent(static_cast<size_t>(vertices_));
    for (int v = 0; v < vertices_; ++v) parent[static_cast<size_t>(v)] = v;
    auto find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    };
    for (const auto& edge : edges_) {
        const int root = find(edge.front());
        for (int v : edge) parent[static_cast<size_t>(find(v))] = root;
    }
    std::map<int, uint32_t> masks;
    for (int v = 0; v < vertices_; ++v) masks[find(v)] |= (uint32_t{1} << v);
    std::vector<uint32_t> out;
    for (const auto& [root, mask] : masks) out.push_back(mask);
    return out;
}

bool FiniteHypergraph::is_anti_clique_mask(uint32_t mask) const {
    for (const auto& edge : edges_) {
        uint32_t edge_mask = 0;
        for (int v : edge) edge_mask |= (uint32_t{1} << v);
        if ((edge_mask & mask) == edge_mask) return false;
    }
    return true;
}

LabeledPoset condition_poset_of(const FiniteHypergraph& hypergraph) {
    if (hypergraph.vertices() > 12)
        throw Error(ErrorCode::TooLarge, "anti-clique poset is capped at 12 vertices");
    std::vector<uint32_t> elements;
    for (uint32_t mask = 0; mask < (uint32_t{1} << hypergraph.vertices()); ++mask)
        if (hypergraph.is_anti_clique_mask(mask)) elements.push_back(mask);
    const int m = static_cast<int>(elements.size());
    std::vector<BitRow> down(static_cast<size_t>(m), BitRow(m));
    for (int v = 0; v < m; ++v) {
        for (int z = 0; z < m; ++z) {
            // z <= v in reverse inclusion: v's set is contained in z's.
            if ((elements[static_cast<size_t>(v)] & elements[static_cast<size_t>(z)]) ==
                elements[static_cast<size_t>(v)])
                down[static_cast<size_t>(v)].set(z);
        }
    }
    return LabeledPoset{FinitePoset::from_relation(m, std::move(down)), std::move(elements)};
}

PartitionCertificate sigma_centred_partition(const FiniteHypergraph& hypergraph) {
    const LabeledPoset labeled = condition_poset_of(hypergraph);
    const std::vector<uint32_t> components = hypergraph.component_masks();
    std::map<std::vector<uint32_t>, int> part_of_trace;
    PartitionCertificate cert{{}, PartitionCondition::centred()};
    cert.labels.resize(labeled.element_masks.size());
    for (size_t v = 0; v < labeled.element_masks.size(); ++v) {
        std::vector<uint32_t> trace;
        trace.reserve(components.size());
        for (uint32_t comp : components) trace.push_back(labeled.element_masks[v] & comp);
        const auto [it, fresh] =
            part_of_trace.emplace(std::move(trace), static_cast<int>(part_of_trace.size()));
        cert.labels[v] = it->second;
    }
    return cert;
}

FinitePoset random_poset(int size, uint64_t seed, double edge_probability) {
    if (size < 0) throw Error(ErrorCode::IndexOutOfRange, "negative poset size");
    std::mt19937_64 rng(seed);
    std::vector<int> perm(static_cast<size_t>(size));
    for (int v = 0; v < size; ++v) perm[static_cast<size_t>(v)] = v;
    for (int i = size - 1; i > 0; --i) {
        const int j = static_cast<int>(rng() % static_cast<uint64_t>(i + 1));
        std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    }
    const uint64_t threshold = static_cast<uint64_t>(edge_probability * 1000.0);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < size; ++i) {
        for (int j = i + 1; j < size; ++j) {
            if (rng() % 1000 < threshold)
                pairs.emplace_back(perm[static_cast<size_t>(j)], perm[static_cast<size_t>(i)]);
        }
    }
    return FinitePoset::from_pairs(size, pairs);
}

std::vector<FinitePoset> poset_catalog(int max_size) {
    std::vector<FinitePoset> out;
    for (int m = 1; m <= max_size; ++m) {
        std::vector<std::pair<int, int>> slots; // strict pairs a < b, read as b <= a
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) slots.emplace_back(a, b);
        const uint32_t total = uint32_t{1} << slots.size();
        for (uint32_t mask = 0; mask < total; ++mask) {
            // rel[b][a] records b <= a for a < b.
            auto rel = [&](int a, int b) {
                for (size_t s = 0; s < slots.size(); ++s)
                    if (slots[s].first == a && slots[s].second == b) return ((mask >> s) & 1) != 0;
                return false;
            };
            bool transitive = true;
            for (int a = 0; a < m && transitive; ++a)
                for (int b = a + 1; b < m && transitive; ++b)
                    for (int c = b + 1; c < m && transitive; ++c)
                        if (rel(b, c) && rel(a, b) && !rel(a, c)) transitive = false;
            if (!transitive) continue;
            std::vector<std::pair<int, int>> pairs;
            for (size_t s = 0; s < slots.size(); ++s)
                if ((mask >> s) & 1) pairs.emplace_back(slots[s].second, slots[s].first);
            out.push_back(FinitePoset::from_pairs(m, pairs));
        }
    }
    return out;
}

} // namespace chaincond
