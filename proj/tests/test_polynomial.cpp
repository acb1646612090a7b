#include <random>

#include "doctest.h"
#include "latpoly/polynomial.hpp"

using namespace latpoly;

namespace {

Polynomial var(int n, Alpha a, int i) { return Polynomial::variable(n, a, i); }

Polynomial random_poly(int n, int maxdeg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> exp(0, maxdeg);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> terms(1, 5);
    Polynomial p(n);
    for (int t = terms(rng); t > 0; --t) {
        Monomial m = Monomial::one(n);
        for (int i = 0; i < n; ++i) {
            m.xe[i] = exp(rng);
            m.ye[i] = exp(rng);
        }
        int c = coef(rng);
        if (c == 0) c = 1;
        p.add_term(m, c);
    }
    return p;
}

}  // namespace

TEST_CASE("ring arithmetic") {
    const int n = 2;
    CHECK((var(n, Alpha::X, 0) + (-var(n, Alpha::X, 0))).is_zero());
    CHECK(mul(var(n, Alpha::X, 0), var(n, Alpha::Y, 0)) ==
          parse_polynomial(n, "x1*y1"));
    CHECK(mul(var(n, Alpha::X, 1) - var(n, Alpha::X, 0),
              var(n, Alpha::X, 1) + var(n, Alpha::X, 0)) ==
          parse_polynomial(n, "x2^2 - x1^2"));
    CHECK_THROWS_AS(add(Polynomial::constant(2, 1), Polynomial::constant(3, 1)),
                    std::invalid_argument);
}

TEST_CASE("operator application") {
    const int n = 2;
    CHECK(apply_operator(var(n, Alpha::X, 0), parse_polynomial(n, "x1^2")) ==
          parse_polynomial(n, "2*x1"));
    CHECK(apply_operator(parse_polynomial(n, "x1 + x2"),
                         parse_polynomial(n, "x2 - x1"))
              .is_zero());
    CHECK(apply_operator(parse_polynomial(n, "x1*y1"), parse_polynomial(n, "x1*y1")) ==
          Polynomial::constant(n, 1));
    CHECK(apply_operator(var(n, Alpha::X, 0), parse_polynomial(n, "x1^3")) ==
          parse_polynomial(n, "3*x1^2"));
}

TEST_CASE("operators compose multiplicatively") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const Polynomial a = random_poly(2, 2, rng);
        const Polynomial b = random_poly(2, 2, rng);
        const Polynomial q = random_poly(2, 3, rng);
        CHECK(apply_operator(mul(a, b), q) == apply_operator(a, apply_operator(b, q)));
    }
}

TEST_CASE("apolar pairing") {
    const int n = 2;
    CHECK(apolar_pairing(parse_polynomial(n, "x1^2"), parse_polynomial(n, "x1^2")) == 2);
    CHECK(apolar_pairing(var(n, Alpha::X, 0), var(n, Alpha::X, 1)) == 0);
    CHECK(apolar_pairing(parse_polynomial(n, "x2 - x1"),
                         parse_polynomial(n, "x2 - x1")) == 2);
}

TEST_CASE("pairing is symmetric and vanishes across bidegrees") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        const Polynomial a = random_poly(2, 2, rng);
        const Polynomial b = random_poly(2, 2, rng);
        CHECK(apolar_pairing(a, b) == apolar_pairing(b, a));
    }
    CHECK(apolar_pairing(parse_polynomial(2, "x1*x2"), parse_polynomial(2, "x1*y2")) == 0);
}

TEST_CASE("bihomogeneous components") {
    const Polynomial p = parse_polynomial(2, "x1 + y1");
    const auto comps = bihomogeneous_components(p);
    CHECK(comps.size() == 2);
    CHECK(comps.at({1, 0}) == parse_polynomial(2, "x1"));
    CHECK(comps.at({0, 1}) == parse_polynomial(2, "y1"));
    CHECK(bihomogeneous_components(parse_polynomial(2, "x1*y2 - x2*y1")).size() == 1);
    CHECK(bihomogeneous_components(Polynomial(2)).empty());
    CHECK(parse_polynomial(2, "x1*y2 - x2*y1").bidegree() == Bidegree{1, 1});
}

TEST_CASE("derivatives drop one bidegree step") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial p(3);
        Monomial m = Monomial::one(3);
        std::uniform_int_distribution<int> exp(0, 3);
        for (int i = 0; i < 3; ++i) {
            m.xe[i] = exp(rng);
            m.ye[i] = exp(rng);
        }
        p.add_term(m, 1);
        const Bidegree d = p.bidegree();
        const Polynomial dx = p.derivative(Alpha::X, 0);
        if (!dx.is_zero()) CHECK(dx.bidegree() == Bidegree{d.dx - 1, d.dy});
        const Polynomial dy = p.derivative(Alpha::Y, 2);
        if (!dy.is_zero()) CHECK(dy.bidegree() == Bidegree{d.dx, d.dy - 1});
    }
}

TEST_CASE("y layers") {
    const auto layers = y_layers(parse_polynomial(2, "y2 - y1"));
    CHECK(layers.size() == 2);
    CHECK(layers.at({1, 0}) == Polynomial::constant(2, -1));
    CHECK(layers.at({0, 1}) == Polynomial::constant(2, 1));

    const Polynomial xonly = parse_polynomial(2, "x1*x2 + x1");
    const auto xl = y_layers(xonly);
    CHECK(xl.size() == 1);
    CHECK(xl.at({0, 0}) == xonly);
}

TEST_CASE("y layers of a bihomogeneous polynomial share the y-degree") {
    const Polynomial p = parse_polynomial(3, "x1*y2*y3 - x2*y1*y3 + x3*y1*y2");
    for (const auto& [beta, c] : y_layers(p)) {
        int total = 0;
        for (int e : beta) total += e;
        CHECK(total == 2);
        CHECK(c.bidegree() == Bidegree{1, 0});
    }
}

TEST_CASE("reconstruction from layers") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        const Polynomial p = random_poly(3, 2, rng);
        Polynomial rebuilt(3);
        for (const auto& [beta, c] : y_layers(p)) {
            Monomial ym(std::vector<std::int32_t>(3, 0), beta);
            rebuilt += Polynomial::monomial(ym, 1) * c;
        }
        CHECK(rebuilt == p);
    }
}

TEST_CASE("text format round trip") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        const Polynomial p = random_poly(3, 3, rng);
        CHECK(parse_polynomial(3, to_string(p)) == p);
    }
    CHECK(to_string(Polynomial(2)) == "0");
    CHECK(parse_polynomial(2, "0").is_zero());
    CHECK(to_string(parse_polynomial(2, "1/2*x1 - 2")) == "1/2*x1 - 2");
}

TEST_CASE("variable permutation and embedding") {
    const Polynomial p = parse_polynomial(2, "x1*y2 - x2*y1");
    CHECK(p.permute_variables({1, 0}) == -p);
    const Polynomial e = p.embed(3);
    CHECK(e.nvars() == 3);
    CHECK(e == parse_polynomial(3, "x1*y2 - x2*y1"));
    CHECK_THROWS_AS(p.embed(1), std::invalid_argument);
}

TEST_CASE("evaluation") {
    const Polynomial p = parse_polynomial(2, "x1*y2 - x2*y1");
    CHECK(p.evaluate({1, 2}, {3, 4}) == Rational(1 * 4 - 2 * 3));
    CHECK(p.evaluate({Rational(1, 2), 1}, {0, 1}) == Rational(1, 2));
}
