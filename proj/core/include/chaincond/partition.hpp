#pragma once

#include <vector>

#include "chaincond/condition.hpp"

namespace chaincond {

/// Shape of an anti-clique of size >= 2, tested in order: some pairwise meet
/// is not dense (Case1); the meets are dense but not all equal (Case2); all
/// meets equal one dense node (Case3). Singleton covers sizes 0 and 1.
enum class CaseTag { Case1, Case2, Case3, Singleton };

const char* case_tag_name(CaseTag tag);

CaseTag classify(const Condition& p);

/// The class identifier of a condition: same-length prefixes (t_0,...,t_k)
/// of its elements, cut deep enough that every tuple of end-extensions of
/// the t_i is again an anti-clique.
class SeparatorKey {
public:
    SeparatorKey(HypergraphKind kind, std::vector<Node> nodes, int min_len);

    const HypergraphKind& kind() const { return kind_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    int size() const { return static_cast<int>(nodes_.size()); }
    int length() const { return nodes_.front().length(); }
    int min_len() const { return min_len_; }

    friend bool operator==(const SeparatorKey&, const SeparatorKey&) = default;
    std::string describe() const;

private:
    HypergraphKind kind_;
    std::vector<Node> nodes_;
    int min_len_;
};

/// Computes the separator key of a nonempty condition.
///
/// The cut level l is the smallest level that (a) exceeds every pairwise
/// meet, (b) reaches min_len, and (c) blocks every potential edge among
/// prefix-extensions: for each subset of elements sharing a dense meet whose
/// entries there realize an edge pattern of the kind, the cut passes the
/// first index above the meet at which the first such pair (in element
/// order) differs. Since the condition is an anti-clique such an index
/// always exists, and once the difference is visible in the prefixes no
/// tuple of extensions can complete that pattern to an edge. Guarantee: for
/// |p| >= 2, every tuple (y_0,...,y_k) with t_i end-extended by y_i is an
/// anti-clique.
SeparatorKey separator(const Condition& p, int min_len);

/// Deterministic alias of separator used as the partition index:
/// structurally equal conditions receive identical keys, and
/// member_of(p, class_key(p, m)) always holds.
SeparatorKey class_key(const Condition& p, int min_len);

/// True iff |q| = |key.nodes| and the elements of q match the nodes
/// bijectively by end-extension (the matching is unique when it exists).
bool member_of(const Condition& q, const SeparatorKey& key);

/// All branches end-extending t with support below `depth`, in increasing
/// order.
std::vector<Branch> extensions_below(const Node& t, int depth);

/// All class members whose element supports lie below `depth`: one
/// extension per key node, kept when the tuple is an anti-clique (for keys
/// produced by separator, every tuple qualifies).
std::vector<Condition> class_members(const SeparatorKey& key, int depth);

} // namespace chaincond
