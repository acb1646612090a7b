#include <random>

#include "doctest.h"
#include "latpoly/spaces.hpp"
#include "latpoly/shiftops.hpp"

using namespace latpoly;

TEST_CASE("derivative closure of simple generators") {
    const GradedSubspace sx = derivative_closure(Polynomial::variable(1, Alpha::X, 0));
    CHECK(sx.dimension() == 2);
    CHECK(sx.block_dimension({1, 0}) == 1);
    CHECK(sx.block_dimension({0, 0}) == 1);

    const GradedSubspace s2 = derivative_closure(delta(LatticeDiagram({{0, 0}, {1, 0}})));
    CHECK(s2.dimension() == 2);
    CHECK(s2.contains(parse_polynomial(2, "x2 - x1")));
    CHECK(s2.contains(Polynomial::constant(2, 1)));

    CHECK(derivative_closure(delta(partition_cells(Partition({2, 1})))).dimension() == 6);
    CHECK_THROWS_AS(derivative_closure(Polynomial(2)), std::invalid_argument);
}

TEST_CASE("closure matches the serial reference") {
    for (const char* mu : {"2,1", "2,2", "3,1"}) {
        const Polynomial d = delta(partition_cells(parse_partition(mu)));
        CHECK(derivative_closure(d) == derivative_closure_serial(d));
    }
    const Polynomial d = delta(LatticeDiagram({{0, 1}, {1, 0}, {2, 2}}));
    CHECK(derivative_closure(d) == derivative_closure_serial(d));
}

TEST_CASE("closure is a derivative fixpoint") {
    const GradedSubspace s = derivative_closure(delta(partition_cells(Partition({2, 2}))));
    for (const Polynomial* row : s.rows())
        for (int i = 0; i < row->nvars(); ++i) {
            CHECK(s.contains(row->derivative(Alpha::X, i)));
            CHECK(s.contains(row->derivative(Alpha::Y, i)));
        }
}

TEST_CASE("sums of spaces") {
    const GradedSubspace a = derivative_closure(Polynomial::variable(2, Alpha::X, 0));
    const GradedSubspace b = derivative_closure(Polynomial::variable(2, Alpha::X, 1));
    CHECK(sum_spaces({a, a}).dimension() == a.dimension());
    CHECK(sum_spaces({a, a}) == a);
    const GradedSubspace ab = sum_spaces({a, b});
    CHECK(ab.dimension() == 3);
    CHECK(ab.block_dimension({1, 0}) == 2);
    CHECK_THROWS_AS(sum_spaces({}), std::invalid_argument);
}

TEST_CASE("the three-hole probe escapes the two nested-hole spaces") {
    const Partition mu({3, 2});
    const GradedSubspace sum = sum_spaces(
        {derivative_closure(delta(HoledDiagram(mu, {{0, 0}, {1, 0}, {0, 1}}).cells())),
         derivative_closure(delta(HoledDiagram(mu, {{0, 0}, {0, 1}, {0, 2}}).cells()))});
    const Polynomial probe = delta(HoledDiagram(mu, {{0, 0}, {1, 0}, {0, 2}}).cells());
    CHECK_FALSE(sum.contains(probe));
}

TEST_CASE("the two-hole space has two generators") {
    const Partition mu({3, 2});
    const GradedSubspace m2 = build_mkij(mu, {0, 0}, 2);
    const GradedSubspace two = sum_spaces(
        {derivative_closure(delta(HoledDiagram(mu, {{0, 0}, {0, 1}}).cells())),
         derivative_closure(delta(HoledDiagram(mu, {{0, 0}, {1, 0}}).cells()))});
    CHECK(m2 == two);
    bool mutual = true;
    for (const Polynomial* row : m2.rows()) mutual &= two.contains(*row);
    for (const Polynomial* row : two.rows()) mutual &= m2.contains(*row);
    CHECK(mutual);
}

TEST_CASE("two generators suffice at every anchor with both dominoes") {
    for (const char* shape : {"2,2", "3,2", "2,2,1"}) {
        const Partition mu = parse_partition(shape);
        for (const Cell& c : pseudo_lex_order(partition_cells(mu))) {
            const Cell right{c.row, c.col + 1}, up{c.row + 1, c.col};
            if (!mu.contains(right) || !mu.contains(up)) continue;
            const GradedSubspace two = sum_spaces(
                {derivative_closure(delta(HoledDiagram(mu, {c, right}).cells())),
                 derivative_closure(delta(HoledDiagram(mu, {c, up}).cells()))});
            CHECK(build_mkij(mu, c, 2) == two);
        }
    }
}

TEST_CASE("hilbert series") {
    CHECK(hilbert_series(derivative_closure(delta(partition_cells(Partition({1, 1}))))) ==
          std::vector<HilbertEntry>{{0, 0, 1}, {1, 0, 1}});
    CHECK(hilbert_series(derivative_closure(delta(partition_cells(Partition({2}))))) ==
          std::vector<HilbertEntry>{{0, 0, 1}, {0, 1, 1}});
    const auto h21 = hilbert_series(derivative_closure(delta(partition_cells(Partition({2, 1})))));
    CHECK(h21 == std::vector<HilbertEntry>{{0, 0, 1}, {0, 1, 2}, {1, 0, 2}, {1, 1, 1}});
}

TEST_CASE("membership") {
    const Partition mu({2, 1});
    const Polynomial d = delta(partition_cells(mu));
    const GradedSubspace m = derivative_closure(d);
    CHECK(m.contains(d));
    CHECK_FALSE(m.contains(parse_polynomial(3, "x1*y1*x2")));
    CHECK(m.contains(Polynomial(3)));
}

TEST_CASE("k-hole sum spaces") {
    CHECK(build_mkij(Partition({2, 1}), {0, 0}, 0) ==
          derivative_closure(delta(partition_cells(Partition({2, 1})))));
    CHECK(build_mkij(Partition({1, 1}), {0, 0}, 1).dimension() == 2);
    const GradedSubspace m1 = build_mkij(Partition({2, 1}), {0, 0}, 1);
    CHECK(m1.dimension() == 6);
    CHECK(build_mkij(Partition({2, 1}), {0, 0}, 1, /*x_only=*/true).dimension() == 3);
    CHECK(build_mkij(Partition({2, 1}), {0, 0}, 1) ==
          build_mkij_serial(Partition({2, 1}), {0, 0}, 1));
    CHECK_THROWS_AS(build_mkij(Partition({2, 1}), {0, 1}, 2), std::domain_error);
}

TEST_CASE("x-space equals the zero-y-degree part of the closure") {
    std::vector<LatticeDiagram> samples = {
        LatticeDiagram({{0, 0}, {1, 0}}),
        LatticeDiagram({{0, 0}, {0, 1}}),
        partition_cells(Partition({2, 1})),
        partition_cells(Partition({2, 2})),
        LatticeDiagram({{0, 1}, {1, 0}, {2, 0}}),
        HoledDiagram(Partition({3, 2}), {{0, 1}}).cells(),
    };
    for (const LatticeDiagram& d : samples)
        CHECK(x_space(d) == derivative_closure(delta(d)).x_restriction());
}

TEST_CASE("ideal membership, both routes") {
    const Partition mu({2, 1});
    const Cell c{0, 0};
    for (int k : {0, 1}) {
        const int n = mu.size() - k;
        CHECK_FALSE(ideal_member_direct(Polynomial::constant(n, 1), mu, c, k));
        CHECK_FALSE(ideal_member_intersection(Polynomial::constant(n, 1), mu, c, k));
        const Polynomial high = p_sym(5, n, Alpha::X);
        CHECK(ideal_member_direct(high, mu, c, k));
        CHECK(ideal_member_intersection(high, mu, c, k));
    }
    const Polynomial p1 = p_sym(1, 2, Alpha::X);
    CHECK(ideal_member_direct(p1, mu, c, 1) ==
          ideal_member_intersection(p1, mu, c, 1));
}

TEST_CASE("the two ideal routes agree on random inputs") {
    std::mt19937_64 rng(31);
    const Partition mu({2, 1});
    std::uniform_int_distribution<int> deg(0, 2), var(0, 1), coef(-2, 2);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial p(2);
        const int dx = deg(rng), dy = deg(rng);
        for (int t = 0; t < 3; ++t) {
            Monomial m = Monomial::one(2);
            for (int e = 0; e < dx; ++e) ++m.xe[var(rng)];
            for (int e = 0; e < dy; ++e) ++m.ye[var(rng)];
            int cf = coef(rng);
            p.add_term(m, cf == 0 ? 1 : cf);
        }
        CHECK(ideal_member_direct(p, mu, {0, 0}, 1) ==
              ideal_member_intersection(p, mu, {0, 0}, 1));
    }
}

TEST_CASE("orbit points") {
    const std::vector<Rational> alpha{1, 2, 3}, beta{1, 2, 3};
    CHECK(orbit_points(Partition({1}), {0, 0}, 0, alpha, beta).size() == 1);
    CHECK(orbit_points(Partition({2, 1}), {0, 0}, 1, alpha, beta).size() == 6);
    CHECK(orbit_points(Partition({2, 1}), {0, 0}, 0, alpha, beta).size() == 6);
    CHECK_THROWS_AS(orbit_points(Partition({2, 1}), {0, 0}, 1, {1, 1, 2}, beta),
                    std::invalid_argument);
    CHECK_THROWS_AS(orbit_points(Partition({3, 1}), {0, 0}, 0, alpha, {1, 2}),
                    std::invalid_argument);
}

TEST_CASE("orbit vanishing transfer") {
    const Partition mu({2, 1});
    const std::vector<Rational> alpha{2, 5, 11}, beta{3, 7};
    CHECK(orbit_vanishing_transfer(Polynomial(2), mu, {0, 1}, 1, alpha, beta));
    const auto points = orbit_points(mu, {0, 1}, 1, alpha, beta);
    const auto ann = vanishing_ideal_basis(points, 2, 2);
    REQUIRE(!ann.empty());
    for (const Polynomial& p : ann) {
        for (const OrbitPoint& pt : points) CHECK(is_zero(p.evaluate(pt.a, pt.b)));
        CHECK(orbit_vanishing_transfer(p, mu, {0, 1}, 1, alpha, beta));
    }
    CHECK_THROWS_AS(
        orbit_vanishing_transfer(Polynomial::constant(2, 1), mu, {0, 1}, 1, alpha, beta),
        std::invalid_argument);
}
