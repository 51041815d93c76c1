#pragma once

#include <functional>
#include <map>

#include "chaincond/condition.hpp"

namespace chaincond {

/// A coloring of branches that only reads the first `depth` entries.
class PrefixColoring {
public:
    using Assign = std::function<int(const Word&)>;

    PrefixColoring(TreeKind kind, int depth, int palette_size, Assign assign);

    /// Deterministic pseudo-random table driven by a seed.
    static PrefixColoring seeded(TreeKind kind, int depth, int palette_size, uint64_t seed);

    /// Explicit table; must cover every legal word of length `depth`.
    static PrefixColoring from_table(TreeKind kind, int depth, int palette_size,
                                     const std::map<Word, int>& table);

    const TreeKind& kind() const { return kind_; }
    int depth() const { return depth_; }
    int palette_size() const { return palette_; }

    int color_of(const Branch& x) const;
    int color_of_word(const Word& prefix) const;

private:
    TreeKind kind_;
    int depth_;
    int palette_;
    Assign assign_;
};

struct MonochromeWitness {
    std::vector<Branch> members;
    int color = 0;
    Node anchor;
};

/// Defeats the coloring on Hn or H0Inf: the edge bundle under the dense node
/// at level max(depth, 2) shares its depth-prefix, hence its color. The
/// witness is re-verified (same color, valid edge) before returning, and the
/// coloring is only ever queried on the witness members.
MonochromeWitness find_mono_edge(const PrefixColoring& coloring, const HypergraphKind& kind);

/// A monochromatic pairwise H1Inf-adjacent family of size m, taken under
/// the dense node at level max(depth, m).
MonochromeWitness find_mono_clique(const PrefixColoring& coloring, int m);

/// Singleton conditions carrying an H0Inf edge inside one color class:
/// (|edge|-1)-linked but not centred.
std::vector<Condition> refute_centred_class(const PrefixColoring& coloring);

} // namespace chaincond
