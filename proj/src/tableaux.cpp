#include "latpoly/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "latpoly/rational.hpp"

namespace latpoly {

std::vector<Cell> Selection::circled() const {
    std::vector<Cell> out;
    for (int r = 0; r < shape.rows(); ++r)
        for (int t = 0; t < whites_per_row[r]; ++t)
            out.push_back({r, shape.parts()[r] - 1 - t});
    return out;
}

int Selection::k() const {
    return std::accumulate(whites_per_row.begin(), whites_per_row.end(), 0);
}

std::int64_t count_row_increasing(const Partition& nu, int n) {
    if (nu.size() != n)
        throw std::invalid_argument("count_row_increasing: |nu| != n");
    Integer c = factorial(n);
    for (int p : nu.parts()) c /= factorial(p);
    return to_int64(c);
}

namespace {

// Per-row capacities for white suffixes in the shadow of c.
std::vector<int> suffix_capacities(const Partition& mu, const Cell& c) {
    if (!mu.contains(c))
        throw std::invalid_argument("anchor " + to_string(c) + " not in " +
                                    to_string(mu));
    std::vector<int> cap(mu.rows(), 0);
    for (int r = c.row; r < mu.rows(); ++r)
        cap[r] = std::max(0, mu.parts()[r] - c.col);
    return cap;
}

void profiles_rec(const std::vector<int>& cap, int r, int left,
                  std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (r == static_cast<int>(cap.size())) {
        if (left == 0) out.push_back(cur);
        return;
    }
    for (int w = 0; w <= std::min(cap[r], left); ++w) {
        cur[r] = w;
        profiles_rec(cap, r + 1, left - w, cur, out);
    }
    cur[r] = 0;
}

}  // namespace

std::vector<Selection> enum_selections(const Partition& mu, const Cell& c, int k) {
    const auto cap = suffix_capacities(mu, c);
    const int s = shadow_size(mu, c);
    if (k < 0 || k > s)
        throw std::domain_error("k = " + std::to_string(k) +
                                " exceeds shadow size " + std::to_string(s));
    std::vector<std::vector<int>> profiles;
    std::vector<int> cur(cap.size(), 0);
    profiles_rec(cap, 0, k, cur, profiles);
    std::vector<Selection> out;
    out.reserve(profiles.size());
    for (auto& w : profiles) out.push_back({mu, c, std::move(w)});
    return out;
}

Partition mu_f(const Selection& sel) {
    std::vector<int> parts;
    for (int r = 0; r < sel.shape.rows(); ++r) {
        const int len = sel.shape.parts()[r] - sel.whites_per_row[r];
        if (len > 0) parts.push_back(len);
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

HoledDiagram mu_f_holes(const Selection& sel) {
    const Partition& mu = sel.shape;
    const Cell anchor = sel.anchor;
    std::vector<Cell> circles = sel.circled();
    // Right to left, bottom to top.
    std::sort(circles.begin(), circles.end(), [](const Cell& a, const Cell& b) {
        if (a.col != b.col) return a.col > b.col;
        return a.row < b.row;
    });
    // A place below where this circle could have been put: a row whose filled
    // part ends exactly at this column, or a lower circle of the column.
    std::set<Cell> holes;
    for (const Cell& circ : circles) {
        int l = 0;
        for (int r = anchor.row; r < circ.row; ++r) {
            if (mu.parts()[r] - sel.whites_per_row[r] - 1 == circ.col)
                ++l;
            else if (sel.whites_per_row[r] > 0 &&
                     mu.parts()[r] - sel.whites_per_row[r] <= circ.col)
                ++l;  // (r, circ.col) carries a circle
        }
        const Cell hole{anchor.row + l, circ.col};
        if (!mu.contains(hole) || holes.contains(hole))
            throw std::logic_error("hole placement failed at " + to_string(hole) +
                                   " for " + to_string(mu));
        holes.insert(hole);
    }
    return HoledDiagram(mu, std::move(holes));
}

DepthTuple depth_tuple(const HoledDiagram& hd) {
    DepthTuple out;
    for (const Cell& h : hd.holes()) {
        int d = 0;
        for (int r = h.row + 1; r < hd.shape().rows(); ++r)
            if (hd.shape().contains({r, h.col}) && !hd.holes().contains({r, h.col}))
                ++d;
        out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Distribute values 1..n over the rows (sizes fixed), each row increasing.
void fillings_rec(const std::vector<std::vector<Cell>>& row_cells, std::size_t r,
                  std::vector<int>& pool, Tableau& t, std::vector<Tableau>& out) {
    if (r == row_cells.size()) {
        out.push_back(t);
        return;
    }
    const int need = static_cast<int>(row_cells[r].size());
    if (need == 0) {
        fillings_rec(row_cells, r + 1, pool, t, out);
        return;
    }
    const int m = static_cast<int>(pool.size());
    std::vector<int> idx(need);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<int> rest;
        for (int i = 0, t2 = 0; i < m; ++i) {
            if (t2 < need && idx[t2] == i)
                ++t2;
            else
                rest.push_back(pool[i]);
        }
        for (int t2 = 0; t2 < need; ++t2) t.entries[row_cells[r][t2]] = pool[idx[t2]];
        std::swap(pool, rest);
        fillings_rec(row_cells, r + 1, pool, t, out);
        std::swap(pool, rest);
        for (int t2 = 0; t2 < need; ++t2) t.entries.erase(row_cells[r][t2]);
        int u = need - 1;
        while (u >= 0 && idx[u] == m - need + u) --u;
        if (u < 0) break;
        ++idx[u];
        for (int v = u + 1; v < need; ++v) idx[v] = idx[v - 1] + 1;
    }
}

}  // namespace

std::vector<Tableau> enum_tableaux(const Partition& mu, const Cell& c, int k) {
    std::vector<Tableau> out;
    for (const Selection& sel : enum_selections(mu, c, k)) {
        Tableau base;
        base.shape = mu;
        for (const Cell& w : sel.circled()) base.white.insert(w);
        std::vector<std::vector<Cell>> row_cells(mu.rows());
        for (int r = 0; r < mu.rows(); ++r)
            for (int q = 0; q < mu.parts()[r] - sel.whites_per_row[r]; ++q)
                row_cells[r].push_back({r, q});
        std::vector<int> pool(mu.size() - k);
        std::iota(pool.begin(), pool.end(), 1);
        fillings_rec(row_cells, 0, pool, base, out);
    }
    return out;
}

std::int64_t count_tableaux(const Partition& mu, const Cell& c, int k) {
    const int n = mu.size() - k;
    Integer total = 0;
    for (const Selection& sel : enum_selections(mu, c, k)) {
        Integer t = factorial(n);
        for (int r = 0; r < mu.rows(); ++r)
            t /= factorial(mu.parts()[r] - sel.whites_per_row[r]);
        total += t;
    }
    return to_int64(total);
}

bool counting_identity(const Partition& mu, const Cell& c, int k) {
    const int n = mu.size() - k;
    Integer lhs = 0;
    for (const Selection& sel : enum_selections(mu, c, k)) {
        Integer t = factorial(n);
        const Partition mf = mu_f(sel);
        for (int p : mf.parts()) t /= factorial(p);
        lhs += t;
    }
    const auto tableaux = enum_tableaux(mu, c, k);
    return lhs == Integer(static_cast<long>(tableaux.size())) &&
           to_int64(lhs) == count_tableaux(mu, c, k);
}

}  // namespace latpoly
