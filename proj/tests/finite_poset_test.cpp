#include <doctest.h>

#include <set>

#include "chaincond/finite_poset.hpp"
#include "chaincond/json_io.hpp"

using namespace chaincond;

TEST_SUITE_BEGIN("finite_poset");

namespace {
FinitePoset chain(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return FinitePoset::from_pairs(n, pairs);
}

FinitePoset antichain(int n) { return FinitePoset::from_pairs(n, {}); }

// three atoms with pairwise meets and no triple meet
FinitePoset atoms_with_meets() {
    return FinitePoset::from_pairs(6, {{3, 0}, {3, 1}, {4, 0}, {4, 2}, {5, 1}, {5, 2}});
}
} // namespace

TEST_CASE("closure and validation") {
    const FinitePoset p = FinitePoset::from_pairs(3, {{0, 1}, {1, 2}});
    CHECK(p.leq(0, 2)); // transitive closure filled in
    CHECK(p.leq(1, 1)); // reflexive closure filled in
    CHECK_FALSE(p.leq(2, 0));
    CHECK_THROWS_AS(FinitePoset::from_pairs(2, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(FinitePoset::from_pairs(2, {{0, 5}}), Error);
}

TEST_CASE("compatibility") {
    const FinitePoset c = chain(3);
    CHECK(c.compatible(0, 2));
    const FinitePoset a = antichain(2);
    CHECK_FALSE(a.compatible(0, 1));
    CHECK(a.compatible(0, 0));
    CHECK_THROWS_AS(a.compatible(0, 9), Error);
}

TEST_CASE("minimum partitions on the landmark posets") {
    CHECK(min_parts(antichain(3), PartitionCondition::linked()).first == 3);
    CHECK(min_parts(chain(3), PartitionCondition::centred()).first == 1);
    CHECK(min_parts(antichain(5), PartitionCondition::antichain_lt(3)).first == 3);
    CHECK(min_parts(atoms_with_meets(), PartitionCondition::centred()).first == 3);
    for (const PartitionCondition& condition :
         {PartitionCondition::linked(), PartitionCondition::centred(),
          PartitionCondition::n_linked(3), PartitionCondition::antichain_lt(3)}) {
        const auto [count, cert] = min_parts(atoms_with_meets(), condition);
        CHECK(check_partition(atoms_with_meets(), cert));
        CHECK(cert.parts() == count);
    }
    CHECK_THROWS_AS(min_parts(antichain(17), PartitionCondition::linked()), Error);
    CHECK_THROWS_AS(min_parts(antichain(13), PartitionCondition::centred()), Error);
}

TEST_CASE("partition checking") {
    const FinitePoset a = antichain(2);
    PartitionCertificate singletons{{0, 1}, PartitionCondition::linked()};
    CHECK(check_partition(a, singletons));
    PartitionCertificate lumped{{0, 0}, PartitionCondition::linked()};
    CHECK_FALSE(check_partition(a, lumped));
    PartitionCertificate short_labels{{0}, PartitionCondition::linked()};
    CHECK_FALSE(check_partition(a, short_labels));
}

TEST_CASE("amplification on the hand-built poset") {
    const auto [poset, cfg] = gh_demo_poset();
    const std::vector<int> amplified = gh_amplify(poset, cfg);
    CHECK(amplified.size() == 4);
    for (size_t a = 0; a < amplified.size(); ++a)
        for (size_t b = a + 1; b < amplified.size(); ++b)
            CHECK_FALSE(poset.compatible(amplified[a], amplified[b]));

    GHConfiguration broken = cfg;
    broken.p_list = {0, 0};
    CHECK_THROWS_AS(gh_amplify(poset, broken), Error);

    GHConfiguration tiny;
    tiny.n = 2;
    tiny.class_k = tiny.class_l = 0;
    tiny.p_list = {0};
    tiny.q_lists = {{2}};
    tiny.r_matrix = {{6}};
    CHECK(gh_amplify(poset, tiny).size() == 1);
}

TEST_CASE("configuration search") {
    const auto [poset, expected] = gh_demo_poset();
    PartitionCertificate one_class{std::vector<int>(10, 0), PartitionCondition::linked()};
    const auto found = gh_find_configuration(poset, one_class, 3);
    REQUIRE(found.has_value());
    CHECK(gh_amplify(poset, *found).size() == 4);

    PartitionCertificate chain_class{std::vector<int>(3, 0), PartitionCondition::linked()};
    CHECK_FALSE(gh_find_configuration(chain(3), chain_class, 3).has_value());
    PartitionCertificate empty_class{{}, PartitionCondition::linked()};
    CHECK_FALSE(gh_find_configuration(antichain(0), empty_class, 3).has_value());
}

TEST_CASE("anti-clique posets of finite hypergraphs") {
    const FiniteHypergraph one_edge(2, {{0, 1}});
    const LabeledPoset p1 = condition_poset_of(one_edge);
    CHECK(p1.poset.size() == 3); // {}, {0}, {1}
    CHECK(p1.element_masks[0] == 0u);
    for (int v = 0; v < 3; ++v) CHECK(p1.poset.leq(v, 0)); // empty set is the maximum

    CHECK(condition_poset_of(FiniteHypergraph(2, {})).poset.size() == 4);
    CHECK(condition_poset_of(FiniteHypergraph(3, {{0, 1, 2}})).poset.size() == 7);
    CHECK_THROWS_AS(condition_poset_of(FiniteHypergraph(13, {})), Error);
}

TEST_CASE("component-trace partitions are centred") {
    const FiniteHypergraph two_edges(4, {{0, 1}, {2, 3}});
    const LabeledPoset labeled = condition_poset_of(two_edges);
    const PartitionCertificate cert = sigma_centred_partition(two_edges);
    CHECK(cert.condition == PartitionCondition::centred());
    CHECK(check_partition(labeled.poset, cert));
    CHECK(cert.labels.size() == labeled.element_masks.size());
    // {0,2} and {0} trace differently on the second component
    int v02 = -1, v0 = -1;
    for (size_t v = 0; v < labeled.element_masks.size(); ++v) {
        if (labeled.element_masks[v] == 0b0101u) v02 = static_cast<int>(v);
        if (labeled.element_masks[v] == 0b0001u) v0 = static_cast<int>(v);
    }
    REQUIRE(v02 >= 0);
    REQUIRE(v0 >= 0);
    CHECK(cert.labels[static_cast<size_t>(v02)] != cert.labels[static_cast<size_t>(v0)]);

    const FiniteHypergraph single(2, {{0, 1}});
    const PartitionCertificate c1 = sigma_centred_partition(single);
    CHECK(c1.parts() == 3);
    CHECK(check_partition(condition_poset_of(single).poset, c1));
}

TEST_CASE("partition-number hierarchy on the small catalog") {
    const std::vector<FinitePoset> catalog = poset_catalog(5);
    CHECK(catalog.size() > 400);
    for (const FinitePoset& poset : catalog) {
        const int linked = min_parts(poset, PartitionCondition::linked()).first;
        const int anti2 = min_parts(poset, PartitionCondition::antichain_lt(2)).first;
        CHECK(linked == anti2);
        const int centred = min_parts(poset, PartitionCondition::centred()).first;
        const int linked3 = min_parts(poset, PartitionCondition::n_linked(3)).first;
        const int linked4 = min_parts(poset, PartitionCondition::n_linked(4)).first;
        const int anti3 = min_parts(poset, PartitionCondition::antichain_lt(3)).first;
        CHECK(centred >= linked4);
        CHECK(linked4 >= linked3);
        CHECK(linked3 >= linked);
        CHECK(linked >= anti3);
    }
}

TEST_CASE("hierarchy holds on random posets") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        const FinitePoset poset = random_poset(8, seed);
        const int linked = min_parts(poset, PartitionCondition::linked()).first;
        CHECK(min_parts(poset, PartitionCondition::antichain_lt(2)).first == linked);
        CHECK(min_parts(poset, PartitionCondition::centred()).first >=
              min_parts(poset, PartitionCondition::n_linked(3)).first);
        CHECK(min_parts(poset, PartitionCondition::n_linked(3)).first >= linked);
        CHECK(linked >= min_parts(poset, PartitionCondition::antichain_lt(3)).first);
    }
}

TEST_CASE("random posets are reproducible") {
    const FinitePoset a = random_poset(9, 123);
    const FinitePoset b = random_poset(9, 123);
    CHECK(a.strict_pairs() == b.strict_pairs());
    CHECK(json_of(a) == json_of(b));
}

TEST_CASE("amplified sets verify on random posets") {
    int found = 0;
    for (uint64_t seed = 0; seed < 60; ++seed) {
        const FinitePoset poset = random_poset(9, seed);
        PartitionCertificate one_class{std::vector<int>(9, 0), PartitionCondition::linked()};
        const auto cfg = gh_find_configuration(poset, one_class, 3);
        if (!cfg) continue;
        ++found;
        const std::vector<int> amplified = gh_amplify(poset, *cfg);
        CHECK(amplified.size() == 4);
        std::set<int> distinct(amplified.begin(), amplified.end());
        CHECK(distinct.size() == 4);
    }
    CHECK(found > 0);
}

TEST_SUITE_END();
