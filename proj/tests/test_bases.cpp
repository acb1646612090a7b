#include <algorithm>

#include "doctest.h"
#include "latpoly/bases.hpp"

using namespace latpoly;

TEST_CASE("x-part generators are the layers of delta") {
    const auto g1 = x_part_generators(LatticeDiagram({{0, 0}, {1, 0}}));
    REQUIRE(g1.size() == 1);
    CHECK(g1[0] == parse_polynomial(2, "x2 - x1"));

    const auto g2 = x_part_generators(LatticeDiagram({{0, 0}, {0, 1}}));
    REQUIRE(g2.size() == 2);
    for (const Polynomial& g : g2) CHECK(g.leading_monomial().deg() == 0);

    const auto g3 = x_part_generators(partition_cells(Partition({2, 1})));
    REQUIRE(g3.size() == 3);
    for (const Polynomial& g : g3) CHECK(g.bidegree() == Bidegree{1, 0});
    Polynomial total(3);
    for (const Polynomial& g : g3) total += g;
    CHECK(total.is_zero());
}

TEST_CASE("x-space dimensions") {
    CHECK(x_space(partition_cells(Partition({2, 1}))).dimension() == 3);
    CHECK(x_space(LatticeDiagram({{0, 0}, {1, 0}})).dimension() == 2);
    CHECK(x_space(partition_cells(Partition({1, 1, 1}))).dimension() == 6);
    CHECK(x_space(partition_cells(Partition({3}))).dimension() == 1);
}

TEST_CASE("greedy monomial basis") {
    CHECK(greedy_monomial_basis(LatticeDiagram({{0, 0}, {1, 0}})).size() == 2);
    CHECK(greedy_monomial_basis(partition_cells(Partition({2, 1}))).size() == 3);
    CHECK(greedy_monomial_basis(partition_cells(Partition({2, 2}))).size() == 6);
}

TEST_CASE("greedy basis of a partition diagram has size n over nu factorial") {
    for (int n = 1; n <= 4; ++n)
        for (const Partition& nu : partitions_of(n))
            CHECK(static_cast<std::int64_t>(
                      greedy_monomial_basis(partition_cells(nu)).size()) ==
                  count_row_increasing(nu, n));
}

TEST_CASE("basis family on small anchors") {
    const BasisFamily b21 = build_basis_family(Partition({2, 1}), {0, 0}, 1);
    CHECK(b21.size() == 3);
    const BasisFamily b22 = build_basis_family(Partition({2, 2}), {0, 0}, 1);
    CHECK(b22.size() == 6);
    const BasisFamily b0 = build_basis_family(Partition({2, 1}), {0, 0}, 0);
    CHECK(b0.size() == 3);
    for (const BasisEntry& e : b0.entries) CHECK(e.selection.k() == 0);
}

TEST_CASE("basis family verification") {
    for (const char* mu : {"2,1", "2,2", "3,1", "2,1,1"}) {
        for (int k : {0, 1, 2}) {
            const Partition p = parse_partition(mu);
            if (k > shadow_size(p, {0, 0}) || p.size() - k < 1) continue;
            const BasisVerification v = verify_basis_family(p, {0, 0}, k);
            CHECK(v.ok());
            CHECK(v.family_size == v.tableau_count);
        }
    }
}

TEST_CASE("family values live in the sum space") {
    const Partition mu({2, 2});
    const GradedSubspace space = build_mkij(mu, {0, 0}, 1, /*x_only=*/true);
    for (const BasisEntry& e : build_basis_family(mu, {0, 0}, 1).entries) {
        CHECK(space.contains(e.value));
        CHECK(e.value.bidegree().dy == 0);
    }
}

TEST_CASE("depth filtration kills everything below the deepest selection") {
    const KillReport r1 = depth_filtration_kill(Partition({2, 2}), {0, 0}, 1);
    CHECK(r1.all_ok());
    CHECK(r1.entries.size() == 2);
    int targets = 0;
    for (const auto& e : r1.entries) {
        if (e.is_target) {
            ++targets;
            CHECK(e.depths == DepthTuple{1});
            CHECK_FALSE(e.image_zero);
        } else {
            CHECK(e.image_zero);
        }
    }
    CHECK(targets == 1);

    CHECK(depth_filtration_kill(Partition({2, 2}), {0, 0}, 2).all_ok());
    CHECK(depth_filtration_kill(Partition({2, 1}), {0, 0}, 2).all_ok());
    CHECK(depth_filtration_kill(Partition({3, 2}), {0, 0}, 2).all_ok());
    CHECK(depth_filtration_kill(Partition({2, 1, 1}), {0, 0}, 2).all_ok());

    // Single selection: the target must simply survive.
    const KillReport solo = depth_filtration_kill(Partition({2}), {0, 1}, 1);
    CHECK(solo.entries.size() == 1);
    CHECK(solo.all_ok());
}

TEST_CASE("the ascending strategy also separates the k=1 cases") {
    CHECK(depth_filtration_kill(Partition({2, 2}), {0, 0}, 1, KillStrategy::ascending)
              .all_ok());
    CHECK(depth_filtration_kill(Partition({3, 2}), {0, 0}, 1, KillStrategy::ascending)
              .all_ok());
}
