#include "latpoly/spaces.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace latpoly {

namespace {

void check_arity(int a, int b, const char* what) {
    if (a != b)
        throw std::invalid_argument(std::string(what) + ": arity mismatch " +
                                    std::to_string(a) + " vs " + std::to_string(b));
}

std::vector<std::pair<Alpha, int>> derivative_vars(int n, Derivatives which) {
    std::vector<std::pair<Alpha, int>> vars;
    if (which != Derivatives::y_only)
        for (int i = 0; i < n; ++i) vars.emplace_back(Alpha::X, i);
    if (which != Derivatives::x_only)
        for (int i = 0; i < n; ++i) vars.emplace_back(Alpha::Y, i);
    return vars;
}

}  // namespace

bool GradedSubspace::insert(const Polynomial& p) {
    if (p.is_zero()) return false;
    check_arity(p.nvars(), n_, "GradedSubspace::insert");
    bool grew = false;
    for (auto& [deg, comp] : bihomogeneous_components(p))
        grew |= insert_component(std::move(comp));
    return grew;
}

bool GradedSubspace::insert_component(Polynomial p) {
    if (p.is_zero()) return false;
    const Bidegree deg = p.bidegree();
    auto& rows = blocks_[deg];
    // Full reduction against the block.
    for (const Polynomial& row : rows) {
        const Rational c = p.coeff(row.leading_monomial());
        if (!is_zero(c)) p -= c * row;
    }
    if (p.is_zero()) {
        if (rows.empty()) blocks_.erase(deg);
        return false;
    }
    p = Rational(1) / p.coeff(p.leading_monomial()) * p;
    // Eliminate the new pivot from the existing rows.
    for (Polynomial& row : rows) {
        const Rational c = row.coeff(p.leading_monomial());
        if (!is_zero(c)) row -= c * p;
    }
    const Monomial& piv = p.leading_monomial();
    auto it = std::lower_bound(rows.begin(), rows.end(), piv,
                               [](const Polynomial& row, const Monomial& m) {
                                   return monomial_less(m, row.leading_monomial());
                               });
    rows.insert(it, std::move(p));
    return true;
}

Polynomial GradedSubspace::reduce(Polynomial p) const {
    if (p.is_zero()) return p;
    check_arity(p.nvars(), n_, "GradedSubspace::reduce");
    Polynomial out(n_);
    for (auto& [deg, comp] : bihomogeneous_components(p)) {
        auto it = blocks_.find(deg);
        if (it == blocks_.end()) {
            out += comp;
            continue;
        }
        Polynomial r = std::move(comp);
        for (const Polynomial& row : it->second) {
            const Rational c = r.coeff(row.leading_monomial());
            if (!is_zero(c)) r -= c * row;
        }
        out += r;
    }
    return out;
}

bool GradedSubspace::contains(const Polynomial& p) const {
    return reduce(p).is_zero();
}

std::int64_t GradedSubspace::dimension() const {
    std::int64_t d = 0;
    for (const auto& [deg, rows] : blocks_) d += static_cast<std::int64_t>(rows.size());
    return d;
}

std::int64_t GradedSubspace::block_dimension(const Bidegree& d) const {
    auto it = blocks_.find(d);
    return it == blocks_.end() ? 0 : static_cast<std::int64_t>(it->second.size());
}

std::vector<HilbertEntry> GradedSubspace::hilbert_series() const {
    std::vector<HilbertEntry> out;
    for (const auto& [deg, rows] : blocks_)
        out.push_back({deg.dx, deg.dy, static_cast<std::int64_t>(rows.size())});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<const Polynomial*> GradedSubspace::rows() const {
    std::vector<const Polynomial*> out;
    for (const auto& [deg, rows] : blocks_)
        for (const Polynomial& r : rows) out.push_back(&r);
    return out;
}

GradedSubspace GradedSubspace::x_restriction() const {
    GradedSubspace s(n_);
    for (const auto& [deg, rows] : blocks_)
        if (deg.dy == 0) s.blocks_[deg] = rows;
    return s;
}

GradedSubspace closure_of(const std::vector<Polynomial>& gens, int nvars,
                          Derivatives which) {
    GradedSubspace space(nvars);
    const auto vars = derivative_vars(nvars, which);
    std::vector<Polynomial> frontier;
    for (const Polynomial& g : gens)
        for (auto& [deg, comp] : bihomogeneous_components(g))
            if (space.insert(comp)) frontier.push_back(comp);
    while (!frontier.empty()) {
        const std::size_t m = frontier.size() * vars.size();
        std::vector<Polynomial> candidates(m);
#pragma omp parallel for schedule(dynamic)
        for (std::size_t t = 0; t < m; ++t) {
            const auto& [a, i] = vars[t % vars.size()];
            candidates[t] = frontier[t / vars.size()].derivative(a, i);
        }
        std::vector<Polynomial> next;
        for (Polynomial& c : candidates) {
            if (c.is_zero()) continue;
            Polynomial red = space.reduce(c);
            if (red.is_zero()) continue;
            space.insert(red);
            next.push_back(std::move(red));
        }
        frontier = std::move(next);
    }
    return space;
}

GradedSubspace derivative_closure(const Polynomial& P, Derivatives which) {
    if (P.is_zero()) throw std::invalid_argument("closure of the zero polynomial");
    return closure_of({P}, P.nvars(), which);
}

GradedSubspace derivative_closure_serial(const Polynomial& P, Derivatives which) {
    if (P.is_zero()) throw std::invalid_argument("closure of the zero polynomial");
    GradedSubspace space(P.nvars());
    const auto vars = derivative_vars(P.nvars(), which);
    std::vector<Polynomial> work;
    for (auto& [deg, comp] : bihomogeneous_components(P))
        if (space.insert(comp)) work.push_back(comp);
    while (!work.empty()) {
        Polynomial q = std::move(work.back());
        work.pop_back();
        for (const auto& [a, i] : vars) {
            Polynomial d = q.derivative(a, i);
            if (d.is_zero()) continue;
            Polynomial red = space.reduce(d);
            if (red.is_zero()) continue;
            space.insert(red);
            work.push_back(std::move(red));
        }
    }
    return space;
}

GradedSubspace sum_spaces(const std::vector<GradedSubspace>& spaces) {
    if (spaces.empty()) throw std::invalid_argument("sum of no spaces");
    GradedSubspace acc(spaces.front().nvars());
    for (const GradedSubspace& s : spaces) {
        check_arity(s.nvars(), acc.nvars(), "sum_spaces");
        for (const Polynomial* row : s.rows()) acc.insert(*row);
    }
    return acc;
}

std::vector<Polynomial> x_part_generators(const LatticeDiagram& d) {
    std::vector<Polynomial> gens;
    for (auto& [beta, cbeta] : y_layers(delta(d))) gens.push_back(cbeta);
    return gens;
}

GradedSubspace x_space(const LatticeDiagram& d) {
    return closure_of(x_part_generators(d), d.size(), Derivatives::x_only);
}

std::vector<std::vector<Cell>> shadow_subsets(const Partition& mu, const Cell& c,
                                              int k) {
    const std::vector<Cell> sh = shadow(mu, c);
    const int s = static_cast<int>(sh.size());
    if (k < 0 || k > s)
        throw std::domain_error("k = " + std::to_string(k) +
                                " exceeds shadow size " + std::to_string(s));
    std::vector<std::vector<Cell>> subsets;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<Cell> sub;
        for (int i : idx) sub.push_back(sh[i]);
        subsets.push_back(std::move(sub));
        if (k == 0) break;
        int t = k - 1;
        while (t >= 0 && idx[t] == s - k + t) --t;
        if (t < 0) break;
        ++idx[t];
        for (int u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
    }
    return subsets;
}

namespace {

GradedSubspace mkij_impl(const Partition& mu, const Cell& c, int k, bool x_only,
                         bool parallel) {
    const auto subsets = shadow_subsets(mu, c, k);
    const int count = static_cast<int>(subsets.size());
    std::vector<GradedSubspace> parts(count);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int t = 0; t < count; ++t) {
        const LatticeDiagram d =
            HoledDiagram(mu, std::set<Cell>(subsets[t].begin(), subsets[t].end()))
                .cells();
        parts[t] = x_only ? x_space(d) : derivative_closure(delta(d));
    }
    return sum_spaces(parts);
}

}  // namespace

GradedSubspace build_mkij(const Partition& mu, const Cell& c, int k, bool x_only) {
    return mkij_impl(mu, c, k, x_only, true);
}

GradedSubspace build_mkij_serial(const Partition& mu, const Cell& c, int k,
                                 bool x_only) {
    return mkij_impl(mu, c, k, x_only, false);
}

std::vector<HilbertEntry> hilbert_series(const GradedSubspace& s) {
    return s.hilbert_series();
}

bool ideal_member_direct(const Polynomial& P, const Partition& mu, const Cell& c,
                         int k) {
    for (const auto& sub : shadow_subsets(mu, c, k)) {
        const LatticeDiagram d =
            HoledDiagram(mu, std::set<Cell>(sub.begin(), sub.end())).cells();
        check_arity(P.nvars(), d.size(), "ideal_member_direct");
        if (!apply_operator(P, delta(d)).is_zero()) return false;
    }
    return true;
}

bool ideal_member_intersection(const Polynomial& P, const Partition& mu,
                               const Cell& c, int k) {
    const int n = mu.size() - k;
    check_arity(P.nvars(), n, "ideal_member_intersection");
    const int N = mu.size();
    const Polynomial big = delta(partition_cells(mu));
    const Polynomial Pb = P.embed(N);
    for (const auto& sub : shadow_subsets(mu, c, k)) {
        Monomial op = Monomial::one(N);
        for (int t = 0; t < k; ++t) {
            op.xe[n + t] = sub[t].row;
            op.ye[n + t] = sub[t].col;
        }
        const Polynomial img = apply_operator(Polynomial::monomial(op, 1), big);
        if (!apply_operator(Pb, img).is_zero()) return false;
    }
    return true;
}

bool OrbitPoint::operator<(const OrbitPoint& o) const {
    for (std::size_t i = 0; i < a.size() && i < o.a.size(); ++i) {
        const int c = cmp(a[i], o.a[i]);
        if (c != 0) return c < 0;
    }
    if (a.size() != o.a.size()) return a.size() < o.a.size();
    for (std::size_t i = 0; i < b.size() && i < o.b.size(); ++i) {
        const int c = cmp(b[i], o.b[i]);
        if (c != 0) return c < 0;
    }
    return b.size() < o.b.size();
}

namespace {

void check_orbit_families(const Partition& mu, const std::vector<Rational>& alpha,
                          const std::vector<Rational>& beta) {
    const int nrows = mu.rows();
    const int ncols = mu.rows() ? mu.parts()[0] : 0;
    if (static_cast<int>(alpha.size()) < nrows ||
        static_cast<int>(beta.size()) < ncols)
        throw std::invalid_argument("alpha/beta too short for the shape");
    auto distinct = [](const std::vector<Rational>& v) {
        std::set<Rational> s(v.begin(), v.end());
        return s.size() == v.size();
    };
    if (!distinct(alpha) || !distinct(beta))
        throw std::invalid_argument("alpha and beta entries must be distinct");
}

}  // namespace

std::vector<OrbitPoint> orbit_points(const Partition& mu, const Cell& c, int k,
                                     const std::vector<Rational>& alpha,
                                     const std::vector<Rational>& beta) {
    check_orbit_families(mu, alpha, beta);
    const int n = mu.size() - k;
    std::set<OrbitPoint> points;
    for (const auto& whites : shadow_subsets(mu, c, k)) {
        const std::set<Cell> wset(whites.begin(), whites.end());
        const LatticeDiagram full = partition_cells(mu);
        std::vector<Cell> filled;
        for (const Cell& cell : full.cells())
            if (!wset.contains(cell)) filled.push_back(cell);
        std::sort(filled.begin(), filled.end());
        std::vector<int> entry(n);
        std::iota(entry.begin(), entry.end(), 0);
        do {
            OrbitPoint p;
            p.a.resize(n);
            p.b.resize(n);
            for (int t = 0; t < n; ++t) {
                p.a[entry[t]] = alpha[filled[t].row];
                p.b[entry[t]] = beta[filled[t].col];
            }
            points.insert(std::move(p));
        } while (std::next_permutation(entry.begin(), entry.end()));
    }
    return {points.begin(), points.end()};
}

bool orbit_vanishing_transfer(const Polynomial& P, const Partition& mu,
                              const Cell& c, int k,
                              const std::vector<Rational>& alpha,
                              const std::vector<Rational>& beta) {
    check_orbit_families(mu, alpha, beta);
    const int n = mu.size() - k;
    check_arity(P.nvars(), n, "orbit_vanishing_transfer");
    for (const OrbitPoint& pt : orbit_points(mu, c, k, alpha, beta))
        if (!is_zero(P.evaluate(pt.a, pt.b)))
            throw std::invalid_argument(
                "orbit_vanishing_transfer: P does not vanish on the holed orbit");
    const int N = mu.size();
    // Full orbit of mu: every injective filling with entries 1..N.
    std::vector<Cell> cells = partition_cells(mu).cells();
    std::sort(cells.begin(), cells.end());
    std::vector<int> entry(N);
    std::iota(entry.begin(), entry.end(), 0);
    do {
        std::vector<Rational> a(N), b(N);
        for (int t = 0; t < N; ++t) {
            a[entry[t]] = alpha[cells[t].row];
            b[entry[t]] = beta[cells[t].col];
        }
        Rational v = P.evaluate({a.begin(), a.begin() + n}, {b.begin(), b.begin() + n});
        for (int r = 0; r < k && !is_zero(v); ++r) {
            for (int t = 0; t < c.row; ++t) v *= (a[n + r] - alpha[t]);
            for (int t = 0; t < c.col; ++t) v *= (b[n + r] - beta[t]);
        }
        if (!is_zero(v)) return false;
    } while (std::next_permutation(entry.begin(), entry.end()));
    return true;
}

std::vector<Polynomial> vanishing_ideal_basis(const std::vector<OrbitPoint>& points,
                                              int nvars, int degree_cap) {
    // Monomials of total degree <= cap, canonical order.
    std::vector<Monomial> monos;
    std::vector<std::int32_t> exps(2 * nvars, 0);
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == 2 * nvars) {
            Monomial m(std::vector<std::int32_t>(exps.begin(), exps.begin() + nvars),
                       std::vector<std::int32_t>(exps.begin() + nvars, exps.end()));
            monos.push_back(std::move(m));
            return;
        }
        for (int e = 0; e <= left; ++e) {
            exps[var] = e;
            self(self, var + 1, left - e);
            exps[var] = 0;
        }
    };
    rec(rec, 0, degree_cap);
    std::sort(monos.begin(), monos.end(), monomial_less);

    const std::size_t R = points.size(), C = monos.size();
    std::vector<std::vector<Rational>> m(R, std::vector<Rational>(C));
    for (std::size_t r = 0; r < R; ++r)
        for (std::size_t c = 0; c < C; ++c)
            m[r][c] = Polynomial::monomial(monos[c], 1).evaluate(points[r].a,
                                                                 points[r].b);
    // Row reduce; free columns index the nullspace basis.
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < C && rank < R; ++c) {
        std::size_t sel = rank;
        while (sel < R && is_zero(m[sel][c])) ++sel;
        if (sel == R) continue;
        std::swap(m[sel], m[rank]);
        const Rational inv = Rational(1) / m[rank][c];
        for (std::size_t t = c; t < C; ++t) m[rank][t] *= inv;
        for (std::size_t r = 0; r < R; ++r) {
            if (r == rank || is_zero(m[r][c])) continue;
            const Rational f = m[r][c];
            for (std::size_t t = c; t < C; ++t) m[r][t] -= f * m[rank][t];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(C, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    std::vector<Polynomial> basis;
    for (std::size_t c = 0; c < C; ++c) {
        if (is_pivot[c]) continue;
        Polynomial p(nvars);
        p.add_term(monos[c], 1);
        for (std::size_t r = 0; r < rank; ++r)
            if (!is_zero(m[r][c])) p.add_term(monos[pivot_col[r]], -m[r][c]);
        basis.push_back(std::move(p));
    }
    return basis;
}

}  // namespace latpoly
