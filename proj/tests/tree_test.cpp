#include <doctest.h>

#include "chaincond/random.hpp"
#include "chaincond/tree.hpp"
#include "support/oracles.hpp"

using namespace chaincond;

TEST_SUITE_BEGIN("tree");

namespace {
const TreeKind t2 = TreeKind::arity(2);
const TreeKind t3 = TreeKind::arity(3);
const TreeKind tw = TreeKind::omega();

Branch br(const TreeKind& kind, Word w) { return Branch(kind, std::move(w)); }
} // namespace

TEST_CASE("kind invariants") {
    CHECK_THROWS_AS(TreeKind::arity(1), Error);
    CHECK(t3.degree_at(7) == 3);
    CHECK(tw.degree_at(0) == 1);
    CHECK(tw.degree_at(4) == 5);
    CHECK_THROWS_AS(tw.arity_value(), Error);
}

TEST_CASE("entry bounds enforced") {
    CHECK_THROWS_AS(br(t2, {2}), Error);
    CHECK_THROWS_AS(br(tw, {1}), Error); // index 0 only admits 0
    CHECK_NOTHROW(br(tw, {0, 1, 2}));
    CHECK_THROWS_AS(Node(tw, {0, 2}), Error);
}

TEST_CASE("canonical form trims trailing zeros") {
    CHECK(br(t2, {1, 0, 0}) == br(t2, {1}));
    CHECK(br(t2, {0, 0}) == Branch::all_zero(t2));
    CHECK(br(t2, {0, 1}).support() == Word{0, 1});
}

TEST_CASE("delta examples") {
    CHECK(delta(br(t3, {2, 1}), br(t3, {2, 2, 1})) == Node(t3, {2}));
    CHECK(delta(Branch::all_zero(t2), br(t2, {1})) == Node(t2, {}));
    CHECK(delta(br(tw, {0, 1}), br(tw, {0, 0, 1})) == Node(tw, {0}));
    CHECK_THROWS_AS(delta(br(t2, {1}), br(t2, {1})), Error);
    CHECK_THROWS_AS(delta(br(t2, {1}), br(t3, {1})), Error);
}

TEST_CASE("delta properties on random pairs") {
    Rng rng(7);
    for (const TreeKind& kind : {t2, t3, tw}) {
        for (int trial = 0; trial < 200; ++trial) {
            const Branch x = random_branch(kind, 8, rng);
            const Branch y = random_branch(kind, 8, rng);
            if (x == y) continue;
            const Node d = delta(x, y);
            CHECK(delta(y, x) == d);
            CHECK(extends(x, d));
            CHECK(extends(y, d));
            CHECK(x.at(d.length()) != y.at(d.length()));
        }
    }
}

TEST_CASE("dense nodes over the binary tree") {
    const DenseSequence d2(t2);
    CHECK(d2.node_at(0) == Node(t2, {}));
    CHECK(d2.node_at(1) == Node(t2, {0}));
    CHECK(d2.node_at(2) == Node(t2, {1, 0}));
    CHECK(d2.node_at(4) == Node(t2, {0, 1, 0, 0}));
    CHECK(d2.contains(Node(t2, {1, 0})));
    CHECK_FALSE(d2.contains(Node(t2, {1})));
    CHECK(d2.contains(Node(t2, {})));
}

TEST_CASE("exactly one dense node per level") {
    for (const TreeKind& kind : {t2, t3, tw}) {
        const DenseSequence d(kind);
        for (int k = 0; k <= 64; ++k) CHECK(d.node_at(k).length() == k);
    }
}

TEST_CASE("density up to depth 6") {
    for (const TreeKind& kind : {t2, t3}) {
        const DenseSequence d(kind);
        Word current;
        auto visit = [&](auto&& self, int length) -> void {
            const Node s(kind, current);
            const long long k = d.index_of(s);
            CHECK(s.is_prefix_of(d.node_at(k)));
            if (length == 6) return;
            for (int v = 0; v < kind.degree_at(length); ++v) {
                current.push_back(v);
                self(self, length + 1);
                current.pop_back();
            }
        };
        visit(visit, 0);
    }
    // Shallower over the growing tree: level counts are factorial.
    const DenseSequence dw(tw);
    Word current;
    auto visit = [&](auto&& self, int length) -> void {
        const Node s(tw, current);
        CHECK(s.is_prefix_of(dw.node_at(dw.index_of(s))));
        if (length == 5) return;
        for (int v = 0; v < tw.degree_at(length); ++v) {
            current.push_back(v);
            self(self, length + 1);
            current.pop_back();
        }
    };
    visit(visit, 0);
}

TEST_CASE("concat examples") {
    CHECK(concat_branch(Node(t2, {1, 0}), 1, Branch::all_zero(t2)) == br(t2, {1, 0, 1}));
    CHECK(concat_branch(Node(t2, {1, 0}), 0, Branch::all_zero(t2)) == br(t2, {1}));
    CHECK_THROWS_AS(concat_branch(Node(t2, {}), 5, Branch::all_zero(t2)), Error);
}

TEST_CASE("concat round trip") {
    Rng rng(13);
    for (const TreeKind& kind : {t2, t3, tw}) {
        for (int trial = 0; trial < 200; ++trial) {
            const Branch stem = random_branch(kind, 6, rng);
            const int dlen = rng.below(6);
            const Node d = stem.prefix(dlen);
            const int i = rng.below(kind.degree_at(dlen));
            const Branch x = random_branch(kind, 6, rng);
            const Branch y = concat_branch(d, i, x);
            for (int j = 0; j < dlen; ++j) CHECK(y.at(j) == d.at(j));
            CHECK(y.at(dlen) == i);
            for (int j = 0; j < 20; ++j) CHECK(y.at(dlen + 1 + j) == x.at(j));
        }
    }
}

TEST_CASE("extends examples") {
    CHECK(extends(br(t2, {0, 1}), Node(t2, {0, 1})));
    CHECK(extends(br(t2, {0, 1}), Node(t2, {0, 1, 0})));
    CHECK_FALSE(extends(br(t2, {1}), Node(t2, {0, 1})));
}

TEST_SUITE_END();
