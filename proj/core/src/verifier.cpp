#include "chaincond/verifier.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "chaincond/bitgraph.hpp"

namespace chaincond {

RamseyBound ramsey_upper(int colors) {
    if (colors < 1) throw Error(ErrorCode::BadArity, "need at least one color");
    long long value = 3;
    for (int k = 2; k <= colors; ++k) value = k * (value - 1) + 2;
    return RamseyBound{colors, value};
}

std::pair<int, std::vector<Condition>> max_antichain(const std::vector<Condition>& A) {
    if (A.empty()) return {0, {}};
    for (const Condition& c : A) {
        if (c.kind() != A.front().kind())
            throw Error(ErrorCode::KindMismatch, "mixed condition kinds");
    }
    BitGraph incompat(static_cast<int>(A.size()));
    for (size_t a = 0; a < A.size(); ++a)
        for (size_t b = a + 1; b < A.size(); ++b)
            if (!compatible(A[a], A[b]))
                incompat.add_edge(static_cast<int>(a), static_cast<int>(b));
    const std::vector<int> clique = max_clique(incompat);
    std::vector<Condition> witness;
    witness.reserve(clique.size());
    for (int v : clique) witness.push_back(A[static_cast<size_t>(v)]);
    return {static_cast<int>(clique.size()), std::move(witness)};
}

AntichainReport check_class_antichain_bound(const SeparatorKey& key, int depth) {
    if (key.kind().family() != EdgeFamily::Hn || key.kind().arity() != 2)
        throw Error(ErrorCode::KindMismatch, "antichain bound runs over hn(2)");
    std::vector<Condition> corpus = class_members(key, depth);
    if (corpus.empty())
        throw Error(ErrorCode::DepthTooSmall, "no class member fits below depth " + std::to_string(depth));
    AntichainReport report{key, static_cast<int>(corpus.size()), 0,
                           ramsey_upper(key.size()).value, {}};
    auto [size, witness] = max_antichain(corpus);
    report.max_antichain_found = size;
    report.witness = std::move(witness);
    return report;
}

namespace {

// Edges inside a set of branches, found by anchoring at pairwise dense
// meets and grouping by shared tail.
std::vector<std::vector<Branch>> edges_inside(const HypergraphKind& kind,
                                              const std::vector<Branch>& universe) {
    const DenseSequence dense(kind.tree());
    std::set<Node> anchors;
    for (size_t a = 0; a < universe.size(); ++a) {
        for (size_t b = a + 1; b < universe.size(); ++b) {
            Node d = delta(universe[a], universe[b]);
            if (dense.contains(d)) anchors.insert(std::move(d));
        }
    }
    auto tail_above = [](const Branch& b, int offset) {
        Word w;
        for (int i = offset + 1; i < b.support_length(); ++i) w.push_back(b.at(i));
        while (!w.empty() && w.back() == 0) w.pop_back();
        return w;
    };
    std::vector<std::vector<Branch>> edges;
    for (const Node& d : anchors) {
        const int len = d.length();
        std::map<Word, std::map<int, Branch>> buckets; // tail -> entry -> branch
        for (const Branch& b : universe)
            if (extends(b, d)) buckets[tail_above(b, len)].emplace(b.at(len), b);
        for (const auto& [tail, group] : buckets) {
            switch (kind.family()) {
            case EdgeFamily::Hn: {
                if (static_cast<int>(group.size()) != kind.arity()) break;
                std::vector<Branch> edge;
                for (const auto& [entry, b] : group) edge.push_back(b);
                edges.push_back(std::move(edge));
                break;
            }
            case EdgeFamily::H0Inf: {
                if (len < 2) break;
                std::vector<Branch> edge;
                for (const auto& [entry, b] : group)
                    if (entry < len) edge.push_back(b);
                if (static_cast<int>(edge.size()) == len) edges.push_back(std::move(edge));
                break;
            }
            case EdgeFamily::H1Inf: {
                std::vector<Branch> low;
                for (const auto& [entry, b] : group)
                    if (entry < len) low.push_back(b);
                for (size_t a = 0; a < low.size(); ++a)
                    for (size_t b = a + 1; b < low.size(); ++b)
                        edges.push_back({low[a], low[b]});
                break;
            }
            }
        }
    }
    return edges;
}

// Index of the unique key node a branch extends.
int node_of(const SeparatorKey& key, const Branch& b) {
    for (size_t i = 0; i < key.nodes().size(); ++i)
        if (extends(b, key.nodes()[i])) return static_cast<int>(i);
    return -1;
}

} // namespace

LinkedCheck check_class_linked_report(const SeparatorKey& key, int n, int depth) {
    if (n < 2) throw Error(ErrorCode::BadArity, "linkedness parameter must be at least 2");
    const int subset = n - 1;

    std::vector<std::vector<Branch>> ext;
    long long total = 1;
    for (const Node& t : key.nodes()) {
        ext.push_back(extensions_below(t, depth));
        if (ext.back().empty())
            throw Error(ErrorCode::DepthTooSmall,
                        "no extension of " + t.describe() + " below depth " + std::to_string(depth));
        total *= static_cast<long long>(ext.back().size());
    }
    // Fewer members than the subset size: nothing to check.
    if (total < subset) {
        const auto members = class_members(key, depth);
        if (members.empty())
            throw Error(ErrorCode::DepthTooSmall, "empty class below depth " + std::to_string(depth));
        if (static_cast<int>(members.size()) < subset) return {true, {}};
    }

    std::vector<Branch> universe;
    for (const auto& list : ext) universe.insert(universe.end(), list.begin(), list.end());

    for (const std::vector<Branch>& edge : edges_inside(key.kind(), universe)) {
        std::map<int, std::vector<Branch>> per_node;
        bool inside = true;
        for (const Branch& b : edge) {
            const int i = node_of(key, b);
            if (i < 0) {
                inside = false;
                break;
            }
            per_node[i].push_back(b);
        }
        if (!inside) continue;
        size_t need = 0;
        for (const auto& [i, list] : per_node) need = std::max(need, list.size());
        if (static_cast<int>(need) > subset) continue;

        // Assemble `subset` distinct members whose union covers the edge.
        std::vector<Condition> bad;
        for (int s = 0; s < subset; ++s) {
            std::vector<Branch> tuple;
            for (size_t i = 0; i < key.nodes().size(); ++i) {
                const auto it = per_node.find(static_cast<int>(i));
                if (it != per_node.end() && s < static_cast<int>(it->second.size()))
                    tuple.push_back(it->second[static_cast<size_t>(s)]);
                else
                    tuple.push_back(ext[i][std::min<size_t>(static_cast<size_t>(s),
                                                            ext[i].size() - 1)]);
            }
            if (!is_anti_clique(key.kind(), tuple))
                throw Error(ErrorCode::InvalidConfiguration,
                            "class tuple is not a condition; key lacks the separator guarantee");
            bad.emplace_back(key.kind(), std::move(tuple));
        }
        std::sort(bad.begin(), bad.end());
        bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
        // Padding may have collided; top up with fresh members if needed.
        if (static_cast<int>(bad.size()) < subset) {
            for (const Condition& m : class_members(key, depth)) {
                if (std::find(bad.begin(), bad.end(), m) == bad.end()) bad.push_back(m);
                if (static_cast<int>(bad.size()) == subset) break;
            }
        }
        if (static_cast<int>(bad.size()) == subset &&
            !is_anti_clique(key.kind(), element_union(bad)))
            return {false, std::move(bad)};
    }
    return {true, {}};
}

bool check_class_linked(const SeparatorKey& key, int n, int depth) {
    return check_class_linked_report(key, n, depth).linked;
}

H1CliqueReport check_h1_no_unbounded_clique(const SeparatorKey& key, int depth) {
    if (key.kind().family() != EdgeFamily::H1Inf)
        throw Error(ErrorCode::KindMismatch, "clique report runs over h1inf");
    if (key.size() != 1)
        throw Error(ErrorCode::InvalidConfiguration,
                    "clique report takes a singleton key; got " + std::to_string(key.size()) + " nodes");
    const Node& t = key.nodes().front();
    const std::vector<Branch> members = extensions_below(t, depth);
    if (members.empty())
        throw Error(ErrorCode::DepthTooSmall, "no class member fits below depth " + std::to_string(depth));

    BitGraph adj(static_cast<int>(members.size()));
    for (size_t a = 0; a < members.size(); ++a)
        for (size_t b = a + 1; b < members.size(); ++b)
            if (is_edge(key.kind(), {members[a], members[b]}))
                adj.add_edge(static_cast<int>(a), static_cast<int>(b));
    const std::vector<int> clique = max_clique(adj);

    H1CliqueReport report;
    report.max_clique = std::max(1, static_cast<int>(clique.size()));
    for (int v : clique) report.witness.push_back(members[static_cast<size_t>(v)]);
    if (report.witness.empty()) report.witness.push_back(members.front());

    const DenseSequence dense(t.kind());
    report.anchor_len = 1;
    for (int level = t.length(); level <= depth; ++level) {
        if (t.is_prefix_of(dense.node_at(level))) report.anchor_len = level;
    }
    return report;
}

RamseyCertificate certify_two_color_triangle_bound() {
    RamseyCertificate cert;
    auto edge_index = [](int n, int i, int j) {
        int idx = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b, ++idx)
                if (a == i && b == j) return idx;
        return -1;
    };
    auto has_mono_triangle = [&](int n, uint32_t mask) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    const int c1 = (mask >> edge_index(n, i, j)) & 1;
                    const int c2 = (mask >> edge_index(n, i, k)) & 1;
                    const int c3 = (mask >> edge_index(n, j, k)) & 1;
                    if (c1 == c2 && c2 == c3) return true;
                }
        return false;
    };
    cert.k6_forced = true;
    for (uint32_t mask = 0; mask < (1u << 15); ++mask) {
        if (!has_mono_triangle(6, mask)) {
            cert.k6_forced = false;
            break;
        }
    }
    for (uint32_t mask = 0; mask < (1u << 10); ++mask) {
        if (!has_mono_triangle(5, mask)) {
            cert.k5_escape_found = true;
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j)
                    if (((mask >> edge_index(5, i, j)) & 1) == 0)
                        cert.k5_first_color.emplace_back(i, j);
            break;
        }
    }
    return cert;
}

Condition dense_anchored_pair(const HypergraphKind& kind, int level) {
    const DenseSequence dense(kind.tree());
    for (int l = std::max(2, level); l < std::max(2, level) + 16; ++l) {
        const Node d = dense.node_at(l);
        const Node stem = d.prefix(l - 1);
        if (dense.contains(stem)) continue; // need a non-dense meet
        const int taken = d.at(l - 1);
        int other = -1;
        for (int v = 0; v < kind.tree().degree_at(l - 1); ++v) {
            if (v != taken) {
                other = v;
                break;
            }
        }
        if (other < 0) continue;
        Word w0 = d.word();
        Word w1 = stem.word();
        w1.push_back(other);
        return Condition(kind, {Branch(kind.tree(), std::move(w0)),
                                Branch(kind.tree(), std::move(w1))});
    }
    throw Error(ErrorCode::InvalidConfiguration,
                "no dense-anchored pair near level " + std::to_string(level));
}

} // namespace chaincond
