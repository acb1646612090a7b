#include <algorithm>

#include "doctest.h"
#include "latpoly/shiftops.hpp"

using namespace latpoly;

namespace {

bool sum_equals(const SignedDiagramSum& s,
                const std::vector<std::pair<int, LatticeDiagram>>& want) {
    if (s.size() != want.size()) return false;
    for (const auto& [c, d] : want) {
        auto it = std::find_if(s.begin(), s.end(), [&](const SignedDiagram& t) {
            return t.diagram == d;
        });
        if (it == s.end() || it->coeff != c) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("symmetric polynomial generators") {
    CHECK(p_sym(2, 3, Alpha::X) == parse_polynomial(3, "x1^2 + x2^2 + x3^2"));
    CHECK(e_sym(2, 3, Alpha::X) == parse_polynomial(3, "x1*x2 + x1*x3 + x2*x3"));
    CHECK(e_sym(0, 3, Alpha::X) == Polynomial::constant(3, 1));
    CHECK(e_sym(4, 3, Alpha::X).is_zero());
    CHECK(h_sym(2, 2, Alpha::Y) == parse_polynomial(2, "y1^2 + y1*y2 + y2^2"));
    CHECK(h_sym(3, 3, Alpha::X).term_count() == 10);  // C(5,3)
    CHECK(h_sym(0, 2, Alpha::X) == Polynomial::constant(2, 1));
}

TEST_CASE("pk expansion") {
    CHECK(pk_apply(1, LatticeDiagram({{0, 0}, {1, 0}})).empty());
    CHECK(sum_equals(pk_apply(1, LatticeDiagram({{0, 0}, {2, 0}})),
                     {{2, LatticeDiagram({{0, 0}, {1, 0}})}}));
    CHECK(pk_apply(2, LatticeDiagram({{0, 0}, {2, 0}})).empty());
    // A crossing move picks up the reordering sign.
    CHECK(sum_equals(pk_apply(2, LatticeDiagram({{1, 0}, {2, 0}})),
                     {{-2, LatticeDiagram({{0, 0}, {1, 0}})}}));
}

TEST_CASE("ek expansion") {
    const LatticeDiagram tri({{0, 0}, {1, 0}, {0, 1}});
    CHECK(ek_apply(1, tri).empty());
    CHECK(ek_apply(2, LatticeDiagram({{0, 0}, {1, 0}, {2, 0}})).empty());
    CHECK(sum_equals(ek_apply(2, LatticeDiagram({{2, 0}, {3, 0}})),
                     {{6, LatticeDiagram({{1, 0}, {2, 0}})}}));
    CHECK_THROWS_AS(ek_apply(3, LatticeDiagram({{0, 0}})), std::invalid_argument);
}

TEST_CASE("hk expansion") {
    CHECK(sum_equals(hk_apply(1, LatticeDiagram({{1, 0}})),
                     {{1, LatticeDiagram({{0, 0}})}}));
    CHECK(sum_equals(hk_apply(2, LatticeDiagram({{2, 0}})),
                     {{2, LatticeDiagram({{0, 0}})}}));
    // h_1 = e_1 = p_1 termwise.
    const LatticeDiagram d({{0, 0}, {2, 0}, {1, 1}});
    CHECK(expand(hk_apply(1, d), 3) == expand(ek_apply(1, d), 3));
    CHECK(expand(hk_apply(1, d), 3) == expand(pk_apply(1, d), 3));
}

TEST_CASE("expansions agree with direct differentiation") {
    std::vector<Cell> box;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) box.push_back({r, c});
    for (int mask = 1; mask < (1 << 9); ++mask) {
        const int m = __builtin_popcount(mask);
        if (m > 4) continue;
        std::vector<Cell> sub;
        for (int t = 0; t < 9; ++t)
            if (mask & (1 << t)) sub.push_back(box[t]);
        const LatticeDiagram L(std::move(sub));
        const Polynomial D = delta(L);
        for (int k = 1; k <= 2; ++k) {
            CHECK(expand(pk_apply(k, L), m) == apply_operator(p_sym(k, m, Alpha::X), D));
            CHECK(expand(hk_apply(k, L), m) == apply_operator(h_sym(k, m, Alpha::X), D));
            if (k <= m)
                CHECK(expand(ek_apply(k, L), m) ==
                      apply_operator(e_sym(k, m, Alpha::X), D));
            for (const auto& [c, d] : ek_apply(std::min(k, m), L))
                CHECK(sgn(c) > 0);
            for (const auto& [c, d] : hk_apply(k, L)) {
                CHECK(sgn(c) > 0);
                CHECK(c.get_den() == 1);
                CHECK(is_hole_swap_image(L, d, k));
            }
        }
    }
}

TEST_CASE("the y alphabet goes through the same code path") {
    const LatticeDiagram L({{0, 0}, {0, 2}, {1, 1}});
    const int n = L.size();
    for (int k = 1; k <= 2; ++k) {
        CHECK(expand(pk_apply(k, L, Alpha::Y), n) ==
              apply_operator(p_sym(k, n, Alpha::Y), delta(L)));
        CHECK(expand(ek_apply(k, L, Alpha::Y), n) ==
              apply_operator(e_sym(k, n, Alpha::Y), delta(L)));
        CHECK(expand(hk_apply(k, L, Alpha::Y), n) ==
              apply_operator(h_sym(k, n, Alpha::Y), delta(L)));
        for (const auto& [c, d] : hk_apply(k, L, Alpha::Y))
            CHECK(is_hole_swap_image(L, d, k, Alpha::Y));
    }
    CHECK(sum_equals(pk_apply(1, LatticeDiagram({{0, 0}, {0, 2}}), Alpha::Y),
                     {{2, LatticeDiagram({{0, 0}, {0, 1}})}}));
}

TEST_CASE("newton recursion") {
    CHECK(newton_recursion_check(2, LatticeDiagram({{0, 0}, {1, 0}, {0, 1}})));
    CHECK(newton_recursion_check(2, LatticeDiagram({{0, 2}, {1, 0}, {2, 1}})));
    CHECK(newton_recursion_check(3, partition_cells(Partition({2, 1}))));
    CHECK(newton_recursion_check(2, LatticeDiagram({{2, 0}})));
    CHECK_THROWS_AS(newton_recursion_check(1, LatticeDiagram({{0, 0}})),
                    std::invalid_argument);
}

TEST_CASE("two-hole rewriting stays inside the two-diagram span") {
    // Frozen from direct computation: the vertical-domino start yields
    // coefficients of opposite sign, the horizontal-domino start equal signs.
    auto h22 = two_hole_identity(Partition({2, 2}), {0, 0}, 1, 1,
                                 TwoHoleVariant::horizontal);
    CHECK(h22.residual_zero);
    CHECK(h22.c1 == -1);
    CHECK(h22.c2 == 1);
    CHECK_FALSE(h22.signs_equal);

    auto v22 = two_hole_identity(Partition({2, 2}), {0, 0}, 1, 1,
                                 TwoHoleVariant::vertical);
    CHECK(v22.residual_zero);
    CHECK(v22.c1 == 1);
    CHECK(v22.c2 == 1);
    CHECK(v22.signs_equal);

    auto h333 = two_hole_identity(Partition({3, 3, 3}), {0, 0}, 2, 2,
                                  TwoHoleVariant::horizontal);
    CHECK(h333.c1 == -4);
    CHECK(h333.c2 == 4);
    auto v333 = two_hole_identity(Partition({3, 3, 3}), {0, 0}, 2, 2,
                                  TwoHoleVariant::vertical);
    CHECK(v333.c1 == -4);
    CHECK(v333.c2 == -4);
    CHECK(v333.signs_equal);

    auto h33 = two_hole_identity(Partition({3, 3}), {0, 1}, 1, 1,
                                 TwoHoleVariant::horizontal);
    CHECK(h33.c1 == -2);
    CHECK(h33.c2 == 2);
}

TEST_CASE("two-hole rewriting rejects targets outside the shape") {
    CHECK_THROWS_AS(two_hole_identity(Partition({2, 2}), {0, 0}, 2, 1,
                                      TwoHoleVariant::horizontal),
                    std::invalid_argument);
    CHECK_THROWS_AS(two_hole_identity(Partition({2, 2, 2}), {0, 0}, 2, 1,
                                      TwoHoleVariant::vertical),
                    std::invalid_argument);
}

TEST_CASE("an image outside the two-diagram span is flagged") {
    CHECK_THROWS_AS(two_hole_identity(Partition({3, 3, 3}), {0, 0}, 2, 1,
                                      TwoHoleVariant::horizontal),
                    std::domain_error);
}
