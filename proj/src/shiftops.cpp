#include "latpoly/shiftops.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace latpoly {

Polynomial p_sym(int k, int n, Alpha a) {
    if (k < 1) throw std::invalid_argument("p_k needs k >= 1");
    Polynomial p(n);
    for (int i = 0; i < n; ++i) p.add_term(Monomial::var(n, a, i, k), 1);
    return p;
}

Polynomial e_sym(int k, int n, Alpha a) {
    if (k < 0) throw std::invalid_argument("e_k needs k >= 0");
    Polynomial p(n);
    if (k > n) return p;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k == 0) {
        p.add_term(Monomial::one(n), 1);
        return p;
    }
    while (true) {
        Monomial m = Monomial::one(n);
        for (int i : idx) (a == Alpha::X ? m.xe[i] : m.ye[i]) = 1;
        p.add_term(m, 1);
        int t = k - 1;
        while (t >= 0 && idx[t] == n - k + t) --t;
        if (t < 0) break;
        ++idx[t];
        for (int u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
    }
    return p;
}

Polynomial h_sym(int k, int n, Alpha a) {
    if (k < 0) throw std::invalid_argument("h_k needs k >= 0");
    Polynomial p(n);
    std::vector<std::int32_t> exps(n, 0);
    // All exponent vectors of total degree k.
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == n - 1) {
            exps[var] = left;
            Monomial m = Monomial::one(n);
            if (a == Alpha::X)
                m.xe.assign(exps.begin(), exps.end());
            else
                m.ye.assign(exps.begin(), exps.end());
            p.add_term(m, 1);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            exps[var] = e;
            self(self, var + 1, left - e);
        }
    };
    if (n == 0) throw std::invalid_argument("h_k needs n >= 1");
    rec(rec, 0, k);
    return p;
}

namespace {

// Sort modified cells back to pseudo-lex order; empty if the multiset has a
// repeat or a negative coordinate.
std::optional<std::pair<int, LatticeDiagram>> reorder(std::vector<Cell> cells) {
    for (const Cell& c : cells)
        if (c.row < 0 || c.col < 0) return std::nullopt;
    int inv = 0;
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i + 1; j < cells.size(); ++j) {
            if (cells[i] == cells[j]) return std::nullopt;
            if (pseudo_lex_less(cells[j], cells[i])) ++inv;
        }
    const int sign = (inv % 2 == 0) ? 1 : -1;
    return std::make_pair(sign, LatticeDiagram(std::move(cells)));
}

SignedDiagramSum collect(std::map<LatticeDiagram, Rational>& acc) {
    SignedDiagramSum out;
    for (auto& [d, c] : acc)
        if (!is_zero(c)) out.push_back({c, d});
    return out;
}

}  // namespace

namespace {
int coordinate(const Cell& c, Alpha a) { return a == Alpha::X ? c.row : c.col; }
void drop(Cell& c, Alpha a, int k) { (a == Alpha::X ? c.row : c.col) -= k; }
}  // namespace

SignedDiagramSum pk_apply(int k, const LatticeDiagram& L, Alpha a) {
    if (k < 1) throw std::invalid_argument("pk_apply needs k >= 1");
    std::map<LatticeDiagram, Rational> acc;
    const auto& cells = L.cells();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (coordinate(cells[i], a) < k) continue;
        std::vector<Cell> moved = cells;
        drop(moved[i], a, k);
        if (auto r = reorder(std::move(moved))) {
            const Rational c =
                Rational(falling_factorial(coordinate(cells[i], a), k)) * r->first;
            acc[r->second] += c;
        }
    }
    return collect(acc);
}

SignedDiagramSum ek_apply(int k, const LatticeDiagram& L, Alpha a) {
    const int n = L.size();
    if (k < 1 || k > n) throw std::invalid_argument("ek_apply needs 1 <= k <= |L|");
    std::map<LatticeDiagram, Rational> acc;
    const auto& cells = L.cells();
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        bool feasible = true;
        Integer mag = 1;
        for (int i : idx) {
            if (coordinate(cells[i], a) < 1) {
                feasible = false;
                break;
            }
            mag *= coordinate(cells[i], a);
        }
        if (feasible) {
            std::vector<Cell> moved = cells;
            for (int i : idx) drop(moved[i], a, 1);
            if (auto r = reorder(std::move(moved)))
                acc[r->second] += Rational(mag) * r->first;
        }
        int t = k - 1;
        while (t >= 0 && idx[t] == n - k + t) --t;
        if (t < 0) break;
        ++idx[t];
        for (int u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
    }
    return collect(acc);
}

SignedDiagramSum hk_apply(int k, const LatticeDiagram& L, Alpha a) {
    if (k < 1) throw std::invalid_argument("hk_apply needs k >= 1");
    std::map<LatticeDiagram, Rational> acc;
    for (int m = 1; m <= k; ++m) {
        if (m > L.size()) break;
        const int sign = (m % 2 == 1) ? 1 : -1;
        for (const auto& [ce, Lm] : ek_apply(m, L, a)) {
            if (k - m == 0) {
                acc[Lm] += sign * ce;
            } else {
                for (const auto& [ch, Lh] : hk_apply(k - m, Lm, a))
                    acc[Lh] += sign * ce * ch;
            }
        }
    }
    return collect(acc);
}

bool is_hole_swap_image(const LatticeDiagram& L, const LatticeDiagram& target,
                        int k, Alpha a) {
    if (L.size() != target.size()) return false;
    std::set<Cell> from(L.cells().begin(), L.cells().end());
    std::set<Cell> to(target.cells().begin(), target.cells().end());
    // Per line of the alphabet's axis: holes climbed in disjoint chains
    // [g, l) ending at a lost cell, the intermediate slots previously holes;
    // the climbs total k.
    auto line = [a](const Cell& c) { return a == Alpha::X ? c.col : c.row; };
    auto along = [a](const Cell& c) { return a == Alpha::X ? c.row : c.col; };
    auto make = [a](int pos, int ln) {
        return a == Alpha::X ? Cell{pos, ln} : Cell{ln, pos};
    };
    std::map<int, std::vector<int>> gained, lost;
    for (const Cell& c : to)
        if (!from.contains(c)) gained[line(c)].push_back(along(c));
    for (const Cell& c : from)
        if (!to.contains(c)) lost[line(c)].push_back(along(c));
    int total = 0;
    if (gained.size() != lost.size()) return false;
    for (auto& [ln, g] : gained) {
        auto it = lost.find(ln);
        if (it == lost.end() || it->second.size() != g.size()) return false;
        auto& l = it->second;
        std::sort(g.begin(), g.end());
        std::sort(l.begin(), l.end());
        for (std::size_t t = 0; t < g.size(); ++t) {
            if (g[t] >= l[t]) return false;
            for (int r = g[t]; r < l[t]; ++r)
                if (from.contains(make(r, ln))) return false;
            total += l[t] - g[t];
        }
    }
    return total == k;
}

Polynomial expand(const SignedDiagramSum& s, int nvars) {
    Polynomial p(nvars);
    for (const auto& [c, d] : s) p += c * delta(d);
    return p;
}

bool newton_recursion_check(int k, const LatticeDiagram& L) {
    if (k < 2) throw std::invalid_argument("newton_recursion_check needs k >= 2");
    const int n = L.size();
    const Polynomial D = delta(L);
    const Polynomial lhs = apply_operator(h_sym(k, n, Alpha::X), D);
    Polynomial rhs(n);
    for (int m = 1; m <= k; ++m) {
        const Polynomial op = h_sym(k - m, n, Alpha::X) * e_sym(m, n, Alpha::X);
        const Polynomial t = apply_operator(op, D);
        rhs += (m % 2 == 1) ? t : -t;
    }
    return lhs == rhs;
}

TwoHoleResult two_hole_identity(const Partition& mu, const Cell& anchor, int k,
                                int l, TwoHoleVariant variant) {
    if (k < 1 || l < 1) throw std::invalid_argument("two_hole_identity needs k,l >= 1");
    const int i = anchor.row, j = anchor.col;
    const Cell start2 = variant == TwoHoleVariant::horizontal ? Cell{i + 1, j}
                                                              : Cell{i, j + 1};
    const Cell tA{i + k, j + l};
    const Cell tB1{i + l, j}, tB2{i, j + k};
    for (const Cell& c : {anchor, start2, tA, tB1, tB2})
        if (!mu.contains(c))
            throw std::invalid_argument("two_hole_identity: cell " + to_string(c) +
                                        " outside " + to_string(mu));
    const LatticeDiagram source = HoledDiagram(mu, {anchor, start2}).cells();
    const LatticeDiagram dA = HoledDiagram(mu, {anchor, tA}).cells();
    const LatticeDiagram dB = HoledDiagram(mu, {tB1, tB2}).cells();
    const int n = source.size();
    const Polynomial op =
        variant == TwoHoleVariant::horizontal
            ? e_sym(k - 1, n, Alpha::X) * p_sym(l, n, Alpha::Y)
            : e_sym(l - 1, n, Alpha::Y) * p_sym(k, n, Alpha::X);
    const Polynomial lhs = apply_operator(op, delta(source));
    // Throws when the image leaves the 2-dimensional target span.
    const auto cs = extract_diagram_coefficients(lhs, {dA, dB});
    TwoHoleResult r;
    r.c1 = cs[0];
    r.c2 = cs[1];
    r.residual_zero = true;
    r.signs_equal = sgn(r.c1) == sgn(r.c2);
    return r;
}

}  // namespace latpoly
