#pragma once

#include <string>
#include <vector>

#include "chaincond/tree.hpp"

namespace chaincond {

enum class EdgeFamily { Hn, H0Inf, H1Inf };

/// Which branch hypergraph is in play. Hn(n) lives over the arity-n tree and
/// has edges of size exactly n; H0Inf and H1Inf live over the growing tree,
/// with edge size |anchor| resp. 2.
class HypergraphKind {
public:
    static HypergraphKind hn(int n) { return HypergraphKind(EdgeFamily::Hn, TreeKind::arity(n)); }
    static HypergraphKind h0_inf() { return HypergraphKind(EdgeFamily::H0Inf, TreeKind::omega()); }
    static HypergraphKind h1_inf() { return HypergraphKind(EdgeFamily::H1Inf, TreeKind::omega()); }

    EdgeFamily family() const { return family_; }
    const TreeKind& tree() const { return tree_; }
    int arity() const { return tree_.arity_value(); }

    friend bool operator==(const HypergraphKind&, const HypergraphKind&) = default;
    std::string describe() const;

private:
    HypergraphKind(EdgeFamily family, TreeKind tree) : family_(family), tree_(tree) {}
    EdgeFamily family_;
    TreeKind tree_;
};

/// One hyperedge: a bundle of branches splitting at a dense anchor with a
/// common tail. `tail` is the shared suffix sitting at offset |anchor|+1;
/// it is stored as a trimmed word because legal tails at that offset may
/// exceed the standalone branch entry bound over the growing tree.
struct Edge {
    HypergraphKind kind;
    Node anchor;
    Word tail;
    std::vector<Branch> members; // sorted, pairwise distinct
};

/// True iff `s` is exactly an edge of the hypergraph.
bool is_edge(const HypergraphKind& kind, const std::vector<Branch>& s);

/// True iff no subset of `s` is an edge. Works by grouping members around
/// candidate anchors (pairwise meets) instead of enumerating subsets.
bool is_anti_clique(const HypergraphKind& kind, const std::vector<Branch>& s);

/// All edges anchored at a dense node whose level lies in `anchor_levels`
/// and whose members are supported below `depth`.
std::vector<Edge> edges_within(const HypergraphKind& kind, int depth,
                               const std::vector<int>& anchor_levels);

/// Length of the common anchor of a pairwise H1Inf-adjacent set containing
/// x. Every such clique splits at a single dense node with a single shared
/// tail, so its size is capped by the returned length.
int meet_anchor_clique_bound(const Branch& x, const std::vector<Branch>& clique);

} // namespace chaincond
