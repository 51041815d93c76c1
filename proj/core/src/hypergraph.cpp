#include "chaincond/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace chaincond {

std::string HypergraphKind::describe() const {
    switch (family_) {
    case EdgeFamily::Hn: return "hn(" + std::to_string(tree_.arity_value()) + ")";
    case EdgeFamily::H0Inf: return "h0inf";
    case EdgeFamily::H1Inf: return "h1inf";
    }
    return "?";
}

namespace {

void check_members_kind(const HypergraphKind& kind, const std::vector<Branch>& s) {
    for (const Branch& b : s) {
        if (b.kind() != kind.tree())
            throw Error(ErrorCode::KindMismatch,
                        "branch over " + b.kind().describe() + " fed to " + kind.describe());
    }
}

// Suffix of the branch above `offset`, trimmed of trailing zeros.
Word tail_above(const Branch& b, int offset) {
    Word w;
    const int limit = b.support_length();
    for (int i = offset + 1; i < limit; ++i) w.push_back(b.at(i));
    while (!w.empty() && w.back() == 0) w.pop_back();
    return w;
}

// Does the entry set at the anchor realize an edge of this family?
bool entry_set_is_edge(const HypergraphKind& kind, int anchor_len, const std::set<int>& entries) {
    switch (kind.family()) {
    case EdgeFamily::Hn: {
        const int n = kind.arity();
        if (static_cast<int>(entries.size()) != n) return false;
        // entries are < n, so full size means exactly {0..n-1}
        return true;
    }
    case EdgeFamily::H0Inf: {
        if (anchor_len < 2) return false;
        if (static_cast<int>(entries.size()) != anchor_len) return false;
        return *entries.rbegin() == anchor_len - 1; // exactly {0..|d|-1}
    }
    case EdgeFamily::H1Inf: {
        if (entries.size() != 2) return false;
        return *entries.rbegin() < anchor_len;
    }
    }
    return false;
}

} // namespace

bool is_edge(const HypergraphKind& kind, const std::vector<Branch>& s) {
    check_members_kind(kind, s);
    if (s.size() < 2) return false;
    std::vector<Branch> members = s;
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) return false;

    Node anchor = delta(members[0], members[1]);
    const int len = anchor.length();
    std::set<int> entries;
    for (const Branch& b : members) {
        if (!extends(b, anchor)) return false;
        if (!entries.insert(b.at(len)).second) return false; // shared entry: meet longer than anchor
    }
    const Word tail = tail_above(members[0], len);
    for (const Branch& b : members) {
        if (tail_above(b, len) != tail) return false;
    }
    if (!DenseSequence(kind.tree()).contains(anchor)) return false;
    return entry_set_is_edge(kind, len, entries);
}

bool is_anti_clique(const HypergraphKind& kind, const std::vector<Branch>& s) {
    check_members_kind(kind, s);
    if (s.size() < 2) return true;
    std::vector<Branch> members(s.begin(), s.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    // Any edge inside `members` is anchored at the meet of two of them.
    DenseSequence dense(kind.tree());
    std::set<Node> anchors;
    for (size_t a = 0; a < members.size(); ++a) {
        for (size_t b = a + 1; b < members.size(); ++b) {
            Node d = delta(members[a], members[b]);
            if (dense.contains(d)) anchors.insert(std::move(d));
        }
    }
    for (const Node& d : anchors) {
        const int len = d.length();
        // Members through d, bucketed by the tail above the anchor; within a
        // bucket the entries at |d| are pairwise distinct.
        std::map<Word, std::set<int>> buckets;
        for (const Branch& b : members) {
            if (extends(b, d)) buckets[tail_above(b, len)].insert(b.at(len));
        }
        for (const auto& [tail, entries] : buckets) {
            switch (kind.family()) {
            case EdgeFamily::Hn:
                if (static_cast<int>(entries.size()) == kind.arity()) return false;
                break;
            case EdgeFamily::H0Inf: {
                if (len < 2) break;
                int below = 0;
                for (int e : entries)
                    if (e < len) ++below;
                if (below == len) return false;
                break;
            }
            case EdgeFamily::H1Inf: {
                int below = 0;
                for (int e : entries)
                    if (e < len) ++below;
                if (below >= 2) return false;
                break;
            }
            }
        }
    }
    return true;
}

std::vector<Edge> edges_within(const HypergraphKind& kind, int depth,
                               const std::vector<int>& anchor_levels) {
    if (depth < 0) throw Error(ErrorCode::IndexOutOfRange, "depth must be nonnegative");
    std::vector<int> levels = anchor_levels;
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    const DenseSequence dense(kind.tree());
    std::vector<Edge> out;
    for (int level : levels) {
        if (level < 0 || level >= depth) continue; // members must split below depth
        if (kind.family() != EdgeFamily::Hn && level < 2) continue;
        const Node anchor = dense.node_at(level);

        // Tails occupy indices level+1 .. depth-1; entry bounds are taken at
        // the absolute index, so growing-tree tails may exceed the standalone
        // branch bound at their own offset.
        std::vector<Word> tails;
        Word current;
        const int tail_len = depth - level - 1;
        auto emit = [&](auto&& self, int pos) -> void {
            if (pos == tail_len) {
                Word trimmed = current;
                while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
                tails.push_back(std::move(trimmed));
                return;
            }
            const int deg = kind.tree().degree_at(level + 1 + pos);
            for (int v = 0; v < deg; ++v) {
                current.push_back(v);
                self(self, pos + 1);
                current.pop_back();
            }
        };
        emit(emit, 0);
        std::sort(tails.begin(), tails.end());
        tails.erase(std::unique(tails.begin(), tails.end()), tails.end());

        auto make_member = [&](int entry, const Word& tail) {
            Word support = anchor.word();
            support.push_back(entry);
            support.insert(support.end(), tail.begin(), tail.end());
            return Branch(kind.tree(), std::move(support));
        };
        auto push_edge = [&](const std::vector<int>& entries, const Word& tail) {
            Edge e{kind, anchor, tail, {}};
            for (int i : entries) e.members.push_back(make_member(i, tail));
            std::sort(e.members.begin(), e.members.end());
            out.push_back(std::move(e));
        };

        for (const Word& tail : tails) {
            switch (kind.family()) {
            case EdgeFamily::Hn: {
                std::vector<int> entries(static_cast<size_t>(kind.arity()));
                for (int i = 0; i < kind.arity(); ++i) entries[static_cast<size_t>(i)] = i;
                push_edge(entries, tail);
                break;
            }
            case EdgeFamily::H0Inf: {
                std::vector<int> entries(static_cast<size_t>(level));
                for (int i = 0; i < level; ++i) entries[static_cast<size_t>(i)] = i;
                push_edge(entries, tail);
                break;
            }
            case EdgeFamily::H1Inf: {
                for (int i = 0; i < level; ++i)
                    for (int j = i + 1; j < level; ++j) push_edge({i, j}, tail);
                break;
            }
            }
        }
    }
    return out;
}

int meet_anchor_clique_bound(const Branch& x, const std::vector<Branch>& clique) {
    if (x.kind() != TreeKind::omega())
        throw Error(ErrorCode::KindMismatch, "clique bound is defined over the growing tree");
    const HypergraphKind kind = HypergraphKind::h1_inf();
    std::vector<Branch> all = clique;
    all.push_back(x);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    if (all.size() < 2)
        throw Error(ErrorCode::NotAClique, "need at least two distinct branches");
    for (size_t a = 0; a < all.size(); ++a) {
        for (size_t b = a + 1; b < all.size(); ++b) {
            if (!is_edge(kind, {all[a], all[b]}))
                throw Error(ErrorCode::NotAClique,
                            all[a].describe() + " and " + all[b].describe() + " are not adjacent");
        }
    }
    // Pairwise adjacency forces one shared anchor; assert rather than trust.
    const Node anchor = delta(all[0], all[1]);
    for (size_t a = 0; a < all.size(); ++a) {
        for (size_t b = a + 1; b < all.size(); ++b) {
            if (delta(all[a], all[b]) != anchor)
                throw Error(ErrorCode::NotAClique, "clique meets are not constant");
        }
    }
    return anchor.length();
}

} // namespace chaincond
