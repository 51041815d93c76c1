#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chaincond/bitgraph.hpp"
#include "chaincond/error.hpp"

namespace chaincond {

/// An explicit finite partial order on {0..m-1}.
class FinitePoset {
public:
    /// Builds from order pairs (a <= b). Reflexive pairs may be omitted; the
    /// reflexive-transitive closure is computed and antisymmetry validated.
    static FinitePoset from_pairs(int size, const std::vector<std::pair<int, int>>& pairs);

    /// Builds from a relation that is already a partial order (validated).
    static FinitePoset from_relation(int size, std::vector<BitRow> below);

    int size() const { return size_; }
    bool leq(int a, int b) const;

    /// All z with z <= v.
    const BitRow& down(int v) const;

    /// True iff some z lies below both.
    bool compatible(int x, int y) const;

    /// Order pairs a <= b with a != b, for serialization.
    std::vector<std::pair<int, int>> strict_pairs() const;

private:
    FinitePoset(int size, std::vector<BitRow> down) : size_(size), down_(std::move(down)) {}
    void check_index(int v) const;
    int size_ = 0;
    std::vector<BitRow> down_; // down_[v] = {z : z <= v}
};

/// Part-validity conditions for countable-partition style analyses.
/// - Linked: pairwise compatible.
/// - NLinked(n): every subset of size <= n has a common lower bound.
/// - Centred: the whole part has a common lower bound.
/// - AntichainLt(n): no n pairwise-incompatible elements.
class PartitionCondition {
public:
    enum class Kind { Linked, NLinked, Centred, AntichainLt };

    static PartitionCondition linked() { return {Kind::Linked, 0}; }
    static PartitionCondition n_linked(int n);
    static PartitionCondition centred() { return {Kind::Centred, 0}; }
    static PartitionCondition antichain_lt(int n);

    Kind kind() const { return kind_; }
    int n() const { return n_; }
    std::string describe() const;

    friend bool operator==(const PartitionCondition&, const PartitionCondition&) = default;

private:
    PartitionCondition(Kind kind, int n) : kind_(kind), n_(n) {}
    Kind kind_;
    int n_;
};

struct PartitionCertificate {
    std::vector<int> labels; // element -> part index
    PartitionCondition condition = PartitionCondition::linked();
    int parts() const;
};

/// Exact minimum number of parts such that every part satisfies the
/// condition. Linked/AntichainLt run on the incompatibility graph (size
/// limit 16); NLinked/Centred use canonical part-assignment backtracking
/// (size limit 12). Limits overridable for callers that know better.
std::pair<int, PartitionCertificate> min_parts(const FinitePoset& poset,
                                               const PartitionCondition& condition,
                                               int size_limit = -1);

/// Re-validates a certificate from scratch.
bool check_partition(const FinitePoset& poset, const PartitionCertificate& cert);

/// The configuration extracted by the amplification argument: an
/// (n-1)-antichain of p's, per p an (n-1)-antichain of q's reachable from it
/// through class l, and the common extensions r_ij <= p_i, q_ij.
struct GHConfiguration {
    int n = 0;
    int class_k = 0;
    int class_l = 0;
    std::vector<int> p_list;
    std::vector<std::vector<int>> q_lists;
    std::vector<std::vector<int>> r_matrix;
};

/// Validates the configuration and returns the flattened r-matrix, verified
/// pairwise incompatible: an antichain of size (n-1)^2, which exceeds n for
/// n > 2.
std::vector<int> gh_amplify(const FinitePoset& poset, const GHConfiguration& cfg);

/// Brute-force search for an amplification configuration inside the given
/// partition. Returns the lexicographically first one, or nothing.
std::optional<GHConfiguration> gh_find_configuration(const FinitePoset& poset,
                                                     const PartitionCertificate& partition,
                                                     int n);

/// Hand-built 10-element poset (2 p's, 4 q's, 4 minimal r's) on which the
/// n = 3 amplification yields a 4-antichain, with its configuration.
std::pair<FinitePoset, GHConfiguration> gh_demo_poset();

/// Finite hypergraph on {0..vertices-1}; every edge has >= 2 distinct
/// vertices.
class FiniteHypergraph {
public:
    FiniteHypergraph(int vertices, std::vector<std::vector<int>> edges);

    int vertices() const { return vertices_; }
    const std::vector<std::vector<int>>& edges() const { return edges_; }

    /// Vertex sets of the connected components (singletons included),
    /// ordered by least vertex.
    std::vector<uint32_t> component_masks() const;

    bool is_anti_clique_mask(uint32_t mask) const;

private:
    int vertices_;
    std::vector<std::vector<int>> edges_;
};

/// A finite poset whose elements carry vertex-set labels.
struct LabeledPoset {
    FinitePoset poset;
    std::vector<uint32_t> element_masks; // element index -> vertex set
};

/// The poset of all anti-cliques of H under reverse inclusion; elements are
/// enumerated in increasing bitmask order. Vertex count capped at 12.
LabeledPoset condition_poset_of(const FiniteHypergraph& hypergraph);

/// Partition of condition_poset_of(H) by component traces: each condition
/// joins the part keyed by its trace on every component (empty traces filled
/// with the least anti-clique, the empty one). Every part is centred.
PartitionCertificate sigma_centred_partition(const FiniteHypergraph& hypergraph);

/// Random poset: seeded DAG on {0..size-1} (edges point downward through a
/// shuffled order), reflexive-transitive closure.
FinitePoset random_poset(int size, uint64_t seed, double edge_probability = 0.3);

/// Every reflexive-transitive-antisymmetric relation contained in the
/// natural strict order, for all sizes 1..max_size. Hits every isomorphism
/// type of poset with that many elements.
std::vector<FinitePoset> poset_catalog(int max_size);

} // namespace chaincond
