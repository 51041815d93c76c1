#include <doctest.h>

#include <algorithm>

#include "chaincond/condition.hpp"
#include "chaincond/random.hpp"
#include "support/oracles.hpp"

using namespace chaincond;
using chaincond::testing::branches_below;

TEST_SUITE_BEGIN("condition");

namespace {
const HypergraphKind h2 = HypergraphKind::hn(2);
const HypergraphKind h3 = HypergraphKind::hn(3);

Condition cond(const HypergraphKind& kind, std::vector<Word> supports) {
    std::vector<Branch> elements;
    for (Word& w : supports) elements.emplace_back(kind.tree(), std::move(w));
    return Condition(kind, std::move(elements));
}

// Every anti-clique of size <= max_size drawn from the pool.
std::vector<Condition> all_conditions(const HypergraphKind& kind, const std::vector<Branch>& pool,
                                      int max_size) {
    std::vector<Condition> out{Condition::empty(kind)};
    std::vector<int> idx;
    auto rec = [&](auto&& self, int start) -> void {
        if (!idx.empty()) {
            std::vector<Branch> subset;
            for (int i : idx) subset.push_back(pool[static_cast<size_t>(i)]);
            if (is_anti_clique(kind, subset)) out.emplace_back(kind, subset);
        }
        if (static_cast<int>(idx.size()) == max_size) return;
        for (int i = start; i < static_cast<int>(pool.size()); ++i) {
            idx.push_back(i);
            self(self, i + 1);
            idx.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}
} // namespace

TEST_CASE("conditions reject edges") {
    CHECK_THROWS_AS(cond(h3, {{}, {1}, {2}}), Error);
    CHECK_NOTHROW(cond(h3, {{}, {1}}));
}

TEST_CASE("order is reverse inclusion") {
    const Condition qa = cond(h2, {{0, 1}, {1}});
    const Condition pa = cond(h2, {{0, 1}});
    CHECK(leq(qa, pa));
    CHECK_FALSE(leq(pa, qa));
    CHECK(leq(pa, pa));
    CHECK(leq(qa, Condition::empty(h2))); // the empty condition is the maximum
}

TEST_CASE("compatibility examples") {
    CHECK(compatible(cond(h2, {{0, 1}}), cond(h2, {{1}})));
    CHECK_FALSE(compatible(cond(h2, {{}}), cond(h2, {{1}})));
    CHECK(compatible(Condition::empty(h2), cond(h2, {{1}})));
    CHECK_THROWS_AS(compatible(Condition::empty(h2), Condition::empty(h3)), Error);
}

TEST_CASE("linkedness examples") {
    const std::vector<Condition> a = {cond(h3, {{}}), cond(h3, {{1}}), cond(h3, {{2}})};
    CHECK(is_n_linked(a, 2));
    CHECK_FALSE(is_n_linked(a, 3));
    CHECK(is_n_linked(std::span<const Condition>(a.data(), 2), 3)); // vacuous
    CHECK_THROWS_AS(is_n_linked(a, 1), Error);
    CHECK_FALSE(is_centred(a));
    CHECK(is_centred(std::vector<Condition>{cond(h2, {{0, 1}}), cond(h2, {{1}})}));
    CHECK(is_centred(std::vector<Condition>{}));
}

TEST_CASE("antichain examples") {
    CHECK(is_antichain(std::vector<Condition>{cond(h2, {{}}), cond(h2, {{1}})}));
    CHECK_FALSE(is_antichain(std::vector<Condition>{cond(h2, {{0, 1}}), cond(h2, {{1}})}));
    CHECK(is_antichain(std::vector<Condition>{cond(h2, {{1}})}));
}

TEST_CASE("compatibility means a common extension exists") {
    // On a small universe, compatible(p,q) iff some enumerated r extends
    // both, and the witness is the union.
    const std::vector<Branch> pool = branches_below(h2.tree(), 3);
    const std::vector<Condition> smalls = all_conditions(h2, pool, 2);
    const std::vector<Condition> everything = all_conditions(h2, pool, 5);
    for (const Condition& p : smalls) {
        for (const Condition& q : smalls) {
            bool witnessed = false;
            for (const Condition& r : everything) {
                if (leq(r, p) && leq(r, q)) {
                    witnessed = true;
                    break;
                }
            }
            CHECK(witnessed == compatible(p, q));
            if (compatible(p, q)) {
                const Condition pair[] = {p, q};
                const Condition join(h2, element_union(pair));
                CHECK(leq(join, p));
                CHECK(leq(join, q));
            }
        }
    }
}

TEST_CASE("centred implies n-linked implies linked") {
    Rng rng(21);
    for (int trial = 0; trial < 80; ++trial) {
        std::vector<Condition> family;
        const int count = 2 + rng.below(3);
        for (int i = 0; i < count; ++i)
            family.push_back(sample_anti_clique(h3, 1 + rng.below(2), 5, rng));
        if (is_centred(family)) {
            for (int n = 2; n <= 5; ++n) CHECK(is_n_linked(family, n));
        }
        if (is_n_linked(family, 2)) {
            // nothing stronger claimed
        } else {
            CHECK_FALSE(is_centred(family));
        }
    }
}

TEST_CASE("singleton families over fixed arity: centred = anti-clique") {
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Branch> branches;
        std::vector<Condition> singletons;
        for (int i = 0; i < 4; ++i) {
            const Branch b = random_branch(h3.tree(), 5, rng);
            branches.push_back(b);
            singletons.emplace_back(h3, std::vector<Branch>{b});
        }
        CHECK(is_centred(singletons) == is_anti_clique(h3, branches));
    }
}

TEST_CASE("growing-tree singleton families: n-linked tracks edge size") {
    const HypergraphKind h0 = HypergraphKind::h0_inf();
    for (const Edge& e : edges_within(h0, 5, {2, 3, 4})) {
        std::vector<Condition> singletons;
        for (const Branch& b : e.members) singletons.emplace_back(h0, std::vector<Branch>{b});
        const int size = static_cast<int>(e.members.size());
        CHECK_FALSE(is_n_linked(singletons, size));
        if (size > 2) CHECK(is_n_linked(singletons, size - 1));
        CHECK_FALSE(is_centred(singletons));
    }
}

TEST_SUITE_END();
