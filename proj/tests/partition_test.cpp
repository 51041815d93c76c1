#include <doctest.h>

#include <map>
#include <set>

#include "chaincond/partition.hpp"
#include "chaincond/random.hpp"
#include "support/oracles.hpp"

using namespace chaincond;

TEST_SUITE_BEGIN("partition");

namespace {
const HypergraphKind h2 = HypergraphKind::hn(2);
const HypergraphKind h3 = HypergraphKind::hn(3);

Condition cond(const HypergraphKind& kind, std::vector<Word> supports) {
    std::vector<Branch> elements;
    for (Word& w : supports) elements.emplace_back(kind.tree(), std::move(w));
    return Condition(kind, std::move(elements));
}

// Exhaustively checks the separator guarantee: every one-per-node tuple of
// extensions below `depth` is an anti-clique.
void check_guarantee(const SeparatorKey& key, int depth) {
    std::vector<std::vector<Branch>> ext;
    for (const Node& t : key.nodes()) ext.push_back(extensions_below(t, depth));
    std::vector<size_t> pick(ext.size(), 0);
    std::vector<Branch> tuple;
    for (;;) {
        tuple.clear();
        for (size_t i = 0; i < ext.size(); ++i) tuple.push_back(ext[i][pick[i]]);
        CHECK(is_anti_clique(key.kind(), tuple));
        size_t pos = ext.size();
        while (pos > 0 && pick[pos - 1] + 1 == ext[pos - 1].size()) --pos;
        if (pos == 0) break;
        ++pick[pos - 1];
        for (size_t i = pos; i < ext.size(); ++i) pick[i] = 0;
    }
}
} // namespace

TEST_CASE("classification") {
    CHECK(classify(cond(h2, {{1, 1}, {1, 0, 1}})) == CaseTag::Case1);
    CHECK(classify(cond(h2, {{0, 1}, {1}})) == CaseTag::Case3);
    CHECK(classify(cond(h2, {{0, 1}})) == CaseTag::Singleton);
    CHECK(classify(Condition::empty(h2)) == CaseTag::Singleton);
    CHECK(classify(cond(h2, {{}, {1, 0, 0, 1}, {1, 0, 1}})) == CaseTag::Case2);
}

TEST_CASE("separator examples") {
    const SeparatorKey k1 = separator(cond(h2, {{0, 1}, {1}}), 1);
    CHECK(k1.length() == 2);
    CHECK(k1.nodes() == std::vector<Node>{Node(h2.tree(), {0, 1}), Node(h2.tree(), {1, 0})});

    const SeparatorKey k2 = separator(cond(h2, {{1, 1}, {1, 0, 1}}), 1);
    CHECK(k2.length() == 2);
    CHECK(k2.nodes() == std::vector<Node>{Node(h2.tree(), {1, 0}), Node(h2.tree(), {1, 1})});

    const SeparatorKey k3 = separator(cond(h2, {{0, 1}}), 4);
    CHECK(k3.nodes() == std::vector<Node>{Node(h2.tree(), {0, 1, 0, 0})});

    CHECK_THROWS_AS(separator(Condition::empty(h2), 1), Error);
    CHECK_THROWS_AS(separator(cond(h2, {{1}}), 0), Error);
}

TEST_CASE("class_key is deterministic") {
    const Condition p = cond(h2, {{0, 1}, {1}});
    const Condition q = cond(h2, {{1}, {0, 1}});
    CHECK(class_key(p, 1) == class_key(q, 1));
    CHECK(class_key(p, 3).length() == 3);
}

TEST_CASE("membership") {
    const SeparatorKey key(h2, {Node(h2.tree(), {0, 1}), Node(h2.tree(), {1, 0})}, 1);
    CHECK(member_of(cond(h2, {{0, 1}, {1}}), key));
    CHECK(member_of(cond(h2, {{0, 1, 1}, {1, 0, 1}}), key));
    CHECK_FALSE(member_of(cond(h2, {{0, 1, 1}, {1, 1}}), key)); // [1,1] leaves [1,0]
    CHECK_FALSE(member_of(cond(h2, {{0, 0, 1}, {1}}), key));
    CHECK_FALSE(member_of(cond(h2, {{0, 1}}), key));
    CHECK_FALSE(member_of(Condition::empty(h2), key));
}

TEST_CASE("self-membership on random conditions") {
    Rng rng(17);
    for (const HypergraphKind& kind : {h2, h3}) {
        for (int trial = 0; trial < 150; ++trial) {
            const Condition p = sample_anti_clique(kind, 1 + rng.below(3), 8, rng);
            for (int m : {1, 5}) CHECK(member_of(p, class_key(p, m)));
        }
    }
}

TEST_CASE("extension tuples stay anti-cliques") {
    // The configurations that defeat the naive max-meet cut:
    // a dense-meet pair whose tails first differ beyond every meet.
    const Condition tricky1 = cond(h2, {{}, {1, 0, 0, 1}, {1, 0, 1}});
    check_guarantee(class_key(tricky1, 1), class_key(tricky1, 1).length() + 3);
    // its case-1 cousin: one non-dense meet alongside a late-splitting pair
    const Condition tricky2 = cond(h2, {{1, 1, 0, 0, 1}, {0, 1, 0, 0, 0, 1}, {1, 0}});
    check_guarantee(class_key(tricky2, 1), class_key(tricky2, 1).length() + 3);

    Rng rng(29);
    for (const HypergraphKind& kind : {h2, h3}) {
        for (int trial = 0; trial < 40; ++trial) {
            const Condition p = sample_anti_clique(kind, 2 + rng.below(2), 6, rng);
            const SeparatorKey key = class_key(p, 1);
            check_guarantee(key, key.length() + 3);
        }
    }
}

TEST_CASE("size-two anti-cliques sharing a tail still get sound keys") {
    // All meets equal a dense node yet no pair differs above it.
    const Condition p = cond(h3, {{}, {1}});
    CHECK(classify(p) == CaseTag::Case3);
    const SeparatorKey key = class_key(p, 1);
    CHECK(key.length() == 1);
    check_guarantee(key, 4);
}

TEST_CASE("growing-tree pair classes separate every critical pair") {
    const TreeKind tw = TreeKind::omega();
    const HypergraphKind h1 = HypergraphKind::h1_inf();
    // three members under the dense node [0,1,0], splitting pairwise at
    // staggered depths (4, 7); a single-pair cut would miss one of them
    const Condition p = Condition(
        h1, {Branch(tw, {0, 1, 0, 0}), Branch(tw, {0, 1, 0, 1, 1}),
             Branch(tw, {0, 1, 0, 2, 0, 0, 0, 1})});
    CHECK(classify(p) == CaseTag::Case3);
    const SeparatorKey key = class_key(p, 1);
    CHECK(key.length() == 8);
    check_guarantee(key, key.length() + 1);
}

TEST_CASE("extensions below a depth") {
    const Node t(h2.tree(), {0, 1});
    CHECK(extensions_below(t, 4).size() == 4);
    CHECK(extensions_below(t, 2).size() == 1); // only t itself, zero-filled
    CHECK(extensions_below(Node(h2.tree(), {0, 1}), 1).empty()); // support too deep
    const auto exts = extensions_below(t, 4);
    for (const Branch& y : exts) CHECK(extends(y, t));
}

TEST_CASE("class members enumerate one extension per node") {
    const SeparatorKey key = class_key(cond(h2, {{0, 1}, {1}}), 1);
    const auto members = class_members(key, 4);
    CHECK(members.size() == 16); // 4 extensions per node, all tuples anti-cliques
    for (const Condition& m : members) CHECK(member_of(m, key));
}

TEST_CASE("key space stays countable by counting") {
    Rng rng(31);
    std::set<std::string> keys;
    std::map<std::pair<int, int>, int> shapes; // (length, size) -> count seen
    for (int trial = 0; trial < 200; ++trial) {
        const Condition p = sample_anti_clique(h2, 1 + rng.below(3), 6, rng);
        const SeparatorKey key = class_key(p, 1);
        if (keys.insert(key.describe()).second) ++shapes[{key.length(), key.size()}];
    }
    for (const auto& [shape, count] : shapes) {
        const auto& [length, size] = shape;
        // distinct ordered tuples of distinct nodes at this length
        double tuples = 1;
        double nodes = 1;
        for (int i = 0; i < length; ++i) nodes *= 2;
        for (int i = 0; i < size; ++i) tuples *= (nodes - i);
        CHECK(static_cast<double>(count) <= tuples);
    }
}

TEST_SUITE_END();
