#pragma once

#include <utility>
#include <vector>

#include "chaincond/partition.hpp"

namespace chaincond {

struct RamseyBound {
    int colors;
    long long value;
};

/// Upper bound on the k-color Ramsey number for triangles, via the
/// recursion U(1) = 3, U(k) = k*(U(k-1)-1) + 2. U(2) = 6 is exact.
RamseyBound ramsey_upper(int colors);

/// Exact maximum pairwise-incompatible subset (a maximum clique of the
/// incompatibility graph), with witness.
std::pair<int, std::vector<Condition>> max_antichain(const std::vector<Condition>& A);

struct AntichainReport {
    SeparatorKey class_key;
    int corpus_size = 0;
    int max_antichain_found = 0;
    long long bound = 0;
    std::vector<Condition> witness;
};

/// Enumerates the class members of a 2-dimensional fixed-arity key below
/// `depth` and checks the largest antichain against ramsey_upper(|key|).
AntichainReport check_class_antichain_bound(const SeparatorKey& key, int depth);

struct LinkedCheck {
    bool linked = false;
    std::vector<Condition> counterexample; // nonempty when !linked
};

/// True iff every (n-1)-element set of class members below `depth` is
/// centred. Decided exactly by edge-cover analysis over the union universe
/// of member extensions: an edge is completable from (n-1) members iff its
/// largest per-node multiplicity is at most n-1. Equivalent to enumerating
/// all (n-1)-subsets (each member holds one extension per key node).
bool check_class_linked(const SeparatorKey& key, int n, int depth);
LinkedCheck check_class_linked_report(const SeparatorKey& key, int n, int depth);

struct H1CliqueReport {
    int max_clique = 0;
    int anchor_len = 0;
    std::vector<Branch> witness;
};

/// Exact maximum clique among the singleton class members of an H1Inf key
/// below `depth`, together with the longest dense anchor reachable from the
/// key node within `depth`. Always max_clique <= anchor_len: a pairwise
/// adjacent family splits at one dense node and shares one tail.
H1CliqueReport check_h1_no_unbounded_clique(const SeparatorKey& key, int depth);

struct RamseyCertificate {
    bool k6_forced = false;       // every 2-coloring of K6 has a mono triangle
    bool k5_escape_found = false; // some 2-coloring of K5 has none
    std::vector<std::pair<int, int>> k5_first_color; // witnessing coloring, color-0 edges
};

/// Exhaustive certificate that the 2-color triangle Ramsey number is 6.
RamseyCertificate certify_two_color_triangle_bound();

/// A 2-element condition whose first separator node is the dense node at
/// `level` (or the nearest level above where the construction is valid).
/// Its class contains the full edge bundle under that dense node, so it
/// witnesses failure of arity-linkedness while staying (arity-1)-linked.
Condition dense_anchored_pair(const HypergraphKind& kind, int level);

} // namespace chaincond
