#include "chaincond/adversary.hpp"

#include <algorithm>

namespace chaincond {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

PrefixColoring::PrefixColoring(TreeKind kind, int depth, int palette_size, Assign assign)
    : kind_(kind), depth_(depth), palette_(palette_size), assign_(std::move(assign)) {
    if (depth_ < 0) throw Error(ErrorCode::IndexOutOfRange, "coloring depth must be nonnegative");
    if (palette_ < 1) throw Error(ErrorCode::BadArity, "palette needs at least one color");
    if (!assign_) throw Error(ErrorCode::ConfigError, "coloring has no assignment map");
}

PrefixColoring PrefixColoring::seeded(TreeKind kind, int depth, int palette_size, uint64_t seed) {
    auto assign = [seed, palette_size](const Word& w) {
        uint64_t h = splitmix64(seed ^ 0x5851f42d4c957f2dULL);
        for (int v : w) h = splitmix64(h ^ (static_cast<uint64_t>(v) + 0x100000001b3ULL));
        return static_cast<int>(h % static_cast<uint64_t>(palette_size));
    };
    return PrefixColoring(kind, depth, palette_size, std::move(assign));
}

PrefixColoring PrefixColoring::from_table(TreeKind kind, int depth, int palette_size,
                                          const std::map<Word, int>& table) {
    // The table must be total over legal length-`depth` words.
    Word current;
    auto walk = [&](auto&& self, int index) -> void {
        if (index == depth) {
            const auto it = table.find(current);
            if (it == table.end())
                throw Error(ErrorCode::ConfigError, "coloring table is missing a word");
            if (it->second < 0 || it->second >= palette_size)
                throw Error(ErrorCode::ConfigError, "coloring table color out of palette");
            return;
        }
        for (int v = 0; v < kind.degree_at(index); ++v) {
            current.push_back(v);
            self(self, index + 1);
            current.pop_back();
        }
    };
    walk(walk, 0);
    auto assign = [table](const Word& w) { return table.at(w); };
    return PrefixColoring(kind, depth, palette_size, std::move(assign));
}

int PrefixColoring::color_of_word(const Word& prefix) const {
    if (static_cast<int>(prefix.size()) != depth_)
        throw Error(ErrorCode::IndexOutOfRange, "prefix length differs from coloring depth");
    const int c = assign_(prefix);
    if (c < 0 || c >= palette_)
        throw Error(ErrorCode::ConfigError, "assignment returned a color outside the palette");
    return c;
}

int PrefixColoring::color_of(const Branch& x) const {
    if (x.kind() != kind_) throw Error(ErrorCode::KindMismatch, "branch kind differs from coloring kind");
    return color_of_word(x.prefix(depth_).word());
}

namespace {

MonochromeWitness verified_witness(const PrefixColoring& coloring, const HypergraphKind& kind,
                                   std::vector<Branch> members, Node anchor, bool pairwise) {
    MonochromeWitness w{std::move(members), 0, std::move(anchor)};
    w.color = coloring.color_of(w.members.front());
    for (const Branch& b : w.members) {
        if (coloring.color_of(b) != w.color)
            throw Error(ErrorCode::InvalidConfiguration, "witness is not monochromatic");
    }
    if (pairwise) {
        for (size_t a = 0; a < w.members.size(); ++a)
            for (size_t b = a + 1; b < w.members.size(); ++b)
                if (!is_edge(kind, {w.members[a], w.members[b]}))
                    throw Error(ErrorCode::InvalidConfiguration, "witness is not pairwise adjacent");
    } else if (!is_edge(kind, w.members)) {
        throw Error(ErrorCode::InvalidConfiguration, "witness is not an edge");
    }
    return w;
}

} // namespace

MonochromeWitness find_mono_edge(const PrefixColoring& coloring, const HypergraphKind& kind) {
    if (kind.family() == EdgeFamily::H1Inf)
        throw Error(ErrorCode::KindMismatch, "pair edges are produced by find_mono_clique");
    if (coloring.kind() != kind.tree())
        throw Error(ErrorCode::KindMismatch, "coloring tree differs from hypergraph tree");
    const int level = std::max(coloring.depth(), 2);
    const Node d = DenseSequence(kind.tree()).node_at(level);
    const int fan = kind.family() == EdgeFamily::Hn ? kind.arity() : d.length();
    std::vector<Branch> members;
    members.reserve(static_cast<size_t>(fan));
    for (int i = 0; i < fan; ++i)
        members.push_back(concat_branch(d, i, Branch::all_zero(kind.tree())));
    return verified_witness(coloring, kind, std::move(members), d, /*pairwise=*/false);
}

MonochromeWitness find_mono_clique(const PrefixColoring& coloring, int m) {
    if (m < 2) throw Error(ErrorCode::BadArity, "clique size must be at least 2");
    if (coloring.kind() != TreeKind::omega())
        throw Error(ErrorCode::KindMismatch, "cliques live over the growing tree");
    const HypergraphKind kind = HypergraphKind::h1_inf();
    const int level = std::max(coloring.depth(), m);
    const Node d = DenseSequence(kind.tree()).node_at(level);
    std::vector<Branch> members;
    members.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        members.push_back(concat_branch(d, i, Branch::all_zero(kind.tree())));
    return verified_witness(coloring, kind, std::move(members), d, /*pairwise=*/true);
}

std::vector<Condition> refute_centred_class(const PrefixColoring& coloring) {
    if (coloring.kind() != TreeKind::omega())
        throw Error(ErrorCode::KindMismatch, "centredness refutation lives over the growing tree");
    const HypergraphKind kind = HypergraphKind::h0_inf();
    const int level = std::max(coloring.depth(), 2);
    const Node d = DenseSequence(kind.tree()).node_at(level);
    std::vector<Branch> members;
    for (int i = 0; i < d.length(); ++i)
        members.push_back(concat_branch(d, i, Branch::all_zero(kind.tree())));
    MonochromeWitness edge =
        verified_witness(coloring, kind, std::move(members), d, /*pairwise=*/false);
    std::vector<Condition> family;
    family.reserve(edge.members.size());
    for (const Branch& b : edge.members) family.emplace_back(kind, std::vector<Branch>{b});
    return family;
}

} // namespace chaincond
