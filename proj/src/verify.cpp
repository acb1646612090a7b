#include "latpoly/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "latpoly/bases.hpp"
#include "latpoly/determinant.hpp"
#include "latpoly/diagram.hpp"
#include "latpoly/shiftops.hpp"
#include "latpoly/spaces.hpp"
#include "latpoly/tableaux.hpp"

namespace latpoly {

using nlohmann::ordered_json;

const std::vector<std::string> kAllChecks = {
    "determinant", "shift-equiv", "two-hole", "nfact",  "one-hole",
    "bound",       "conjecture",  "ideal-eq", "xpart", "depth",
    "orbit"};

bool is_known_check(const std::string& check) {
    return std::find(kAllChecks.begin(), kAllChecks.end(), check) != kAllChecks.end();
}

CheckParams default_params(const std::string& check) {
    CheckParams p;
    if (check == "shift-equiv") {
        p.box = 4;
        p.max_cells = 5;
        p.kmax = 3;
    } else if (check == "nfact" || check == "one-hole" || check == "bound" ||
               check == "conjecture" || check == "orbit") {
        p.max_size = 5;
    } else if (check == "ideal-eq") {
        p.max_size = 4;
        p.trials = 200;
    } else if (check == "xpart") {
        p.max_size = 6;
        p.kmax = 3;
    } else if (check == "depth") {
        p.max_size = 10;
        p.kmax = 4;
    }
    if (check == "orbit") p.trials = 20;
    return p;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

namespace {

std::vector<Cell> all_cells(const Partition& mu) {
    return partition_cells(mu).cells();
}

double fact_d(int n) {
    double f = 1;
    for (int t = 2; t <= n; ++t) f *= t;
    return f;
}

double binom_d(int n, int k) {
    double b = 1;
    for (int t = 0; t < k; ++t) b = b * (n - t) / (t + 1);
    return b;
}

VerificationRecord make_record(const std::string& check, const std::string& id,
                               bool pass, ordered_json values) {
    return {check, id, pass ? "pass" : "fail", std::move(values), 0.0};
}

// ---- determinant ---------------------------------------------------------

std::vector<CaseTask> determinant_cases(const CheckParams&) {
    std::vector<CaseTask> tasks;
    tasks.push_back({"determinant|ground-truth", 1.0, []() {
        ordered_json v;
        bool ok = true;
        const Polynomial d1 = delta(LatticeDiagram({{0, 0}}));
        ok &= d1 == Polynomial::constant(1, 1);
        const Polynomial d2 = delta(LatticeDiagram({{0, 0}, {1, 0}}));
        ok &= to_string(d2) == "x2 - x1";
        const Polynomial d3 = delta(LatticeDiagram({{0, 0}, {1, 0}, {0, 1}}));
        Polynomial expect(3);
        expect = parse_polynomial(3, "x2*y3 - x3*y2 - x1*y3 + x3*y1 + x1*y2 - x2*y1");
        ok &= d3 == expect;
        v["delta_2"] = to_string(d2);
        v["delta_3"] = to_string(d3);
        const Partition mu = parse_partition("4,2,1");
        const auto cells = pseudo_lex_order(partition_cells(mu));
        const std::vector<Cell> want = {{0, 0}, {1, 0}, {2, 0}, {0, 1},
                                        {1, 1}, {0, 2}, {0, 3}};
        ok &= cells == want;
        ok &= partition_cells(mu).size() == 7;
        v["order_421"] = to_string(partition_cells(mu));
        return make_record("determinant", "determinant|ground-truth", ok, v);
    }});
    return tasks;
}

// ---- shift-equiv ----------------------------------------------------------

std::vector<LatticeDiagram> diagrams_in_box(int box, int m) {
    std::vector<Cell> cells;
    for (int r = 0; r < box; ++r)
        for (int c = 0; c < box; ++c) cells.push_back({r, c});
    const int total = static_cast<int>(cells.size());
    std::vector<LatticeDiagram> out;
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    while (true) {
        std::vector<Cell> sub;
        for (int i : idx) sub.push_back(cells[i]);
        out.emplace_back(std::move(sub));
        int t = m - 1;
        while (t >= 0 && idx[t] == total - m + t) --t;
        if (t < 0) break;
        ++idx[t];
        for (int u = t + 1; u < m; ++u) idx[u] = idx[u - 1] + 1;
    }
    return out;
}

std::vector<CaseTask> shift_equiv_cases(const CheckParams& p) {
    std::vector<CaseTask> tasks;
    for (int m = 1; m <= p.max_cells; ++m) {
        for (const std::string op : {"pk", "ek", "hk"}) {
            for (int k = 1; k <= p.kmax; ++k) {
                if (op == "ek" && k > m) continue;
                const std::string id = "shift-equiv|cells=" + std::to_string(m) +
                                       "|op=" + op + "|k=" + std::to_string(k);
                const double cost = binom_d(p.box * p.box, m) * fact_d(m) / 50.0;
                const int box = p.box;
                tasks.push_back({id, cost, [m, op, k, box, id]() {
                    long bad = 0, count = 0;
                    const auto diagrams = diagrams_in_box(box, m);
                    std::string first_bad;
#pragma omp parallel for schedule(dynamic) reduction(+ : bad, count)
                    for (std::size_t t = 0; t < diagrams.size(); ++t) {
                        const LatticeDiagram& L = diagrams[t];
                        SignedDiagramSum sum;
                        Polynomial direct(m);
                        if (op == "pk") {
                            sum = pk_apply(k, L);
                            direct = apply_operator(p_sym(k, m, Alpha::X), delta(L));
                        } else if (op == "ek") {
                            sum = ek_apply(k, L);
                            direct = apply_operator(e_sym(k, m, Alpha::X), delta(L));
                        } else {
                            sum = hk_apply(k, L);
                            direct = apply_operator(h_sym(k, m, Alpha::X), delta(L));
                        }
                        bool ok = expand(sum, m) == direct;
                        if (op != "pk")
                            for (const auto& [c, d] : sum)
                                ok &= sgn(c) > 0 && c.get_den() == 1;
                        if (op == "hk")
                            for (const auto& [c, d] : sum)
                                ok &= is_hole_swap_image(L, d, k);
                        if (!ok) {
                            ++bad;
#pragma omp critical
                            if (first_bad.empty()) first_bad = to_string(L);
                        }
                        ++count;
                    }
                    ordered_json v;
                    v["diagrams"] = count;
                    v["mismatches"] = bad;
                    if (bad) v["first_bad"] = first_bad;
                    return make_record("shift-equiv", id, bad == 0, v);
                }});
            }
        }
    }
    return tasks;
}

// ---- two-hole --------------------------------------------------------------

std::vector<CaseTask> two_hole_cases(const CheckParams&) {
    std::vector<CaseTask> tasks;
    tasks.push_back({"two-hole|counterexample", 10.0, []() {
        const Partition mu = parse_partition("3,2");
        const LatticeDiagram probe =
            HoledDiagram(mu, {{0, 0}, {1, 0}, {0, 2}}).cells();
        const GradedSubspace sum = sum_spaces(
            {derivative_closure(delta(HoledDiagram(mu, {{0, 0}, {1, 0}, {0, 1}}).cells())),
             derivative_closure(delta(HoledDiagram(mu, {{0, 0}, {0, 1}, {0, 2}}).cells()))});
        const bool member = sum.contains(delta(probe));
        ordered_json v;
        v["member"] = member;
        return make_record("two-hole", "two-hole|counterexample", !member, v);
    }});
    tasks.push_back({"two-hole|m2-two-generators", 20.0, []() {
        const Partition mu = parse_partition("3,2");
        const GradedSubspace m2 = build_mkij(mu, {0, 0}, 2);
        const GradedSubspace two = sum_spaces(
            {derivative_closure(delta(HoledDiagram(mu, {{0, 0}, {0, 1}}).cells())),
             derivative_closure(delta(HoledDiagram(mu, {{0, 0}, {1, 0}}).cells()))});
        ordered_json v;
        v["dim_m2"] = m2.dimension();
        v["dim_two_generators"] = two.dimension();
        return make_record("two-hole", "two-hole|m2-two-generators", m2 == two, v);
    }});
    return tasks;
}

// ---- nfact ----------------------------------------------------------------

std::vector<CaseTask> nfact_cases(const CheckParams& p) {
    std::vector<CaseTask> tasks;
    for (int n = 1; n <= p.max_size; ++n) {
        for (const Partition& mu : partitions_of(n)) {
            const std::string id = "nfact|mu=" + to_string(mu);
            tasks.push_back({id, fact_d(n) * fact_d(n) / 1000.0, [mu, id, n]() {
                const auto dim = derivative_closure(delta(partition_cells(mu))).dimension();
                ordered_json v;
                v["dimension"] = dim;
                v["expected"] = to_int64(factorial(n));
                return make_record("nfact", id, dim == to_int64(factorial(n)), v);
            }});
        }
    }
    return tasks;
}

// ---- one-hole -------------------------------------------------------------

std::vector<CaseTask> one_hole_cases(const CheckParams& p) {
    std::vector<CaseTask> tasks;
    for (int n = 2; n <= p.max_size; ++n) {
        for (const Partition& mu : partitions_of(n)) {
            for (const Cell& c : all_cells(mu)) {
                const std::string id =
                    "one-hole|mu=" + to_string(mu) + "|cell=" + to_string(c);
                const int s = shadow_size(mu, c);
                tasks.push_back(
                    {id, s * fact_d(n - 1) * fact_d(n - 1) / 500.0, [mu, c, id, s, n]() {
                        const GradedSubspace m1 = build_mkij(mu, c, 1);
                        const GradedSubspace single =
                            derivative_closure(delta(remove_cell(mu, c)));
                        const std::int64_t expected =
                            s * to_int64(factorial(n - 1));
                        ordered_json v;
                        v["dimension"] = m1.dimension();
                        v["expected"] = expected;
                        v["equals_single_hole_closure"] = m1 == single;
                        const bool ok = m1.dimension() == expected && m1 == single;
                        return make_record("one-hole", id, ok, v);
                    }});
            }
        }
    }
    return tasks;
}

// ---- bound & conjecture ---------------------------------------------------

std::vector<CaseTask> bound_like_cases(const std::string& check,
                                       const CheckParams& p) {
    std::vector<CaseTask> tasks;
    const bool finding = check == "conjecture";
    for (int sz = 1; sz <= p.max_size; ++sz) {
        for (const Partition& mu : partitions_of(sz)) {
            for (const Cell& c : all_cells(mu)) {
                const int s = shadow_size(mu, c);
                for (int k = 0; k <= s && sz - k >= 1; ++k) {
                    if (k == 0 && !(c == Cell{0, 0})) continue;
                    const int n = sz - k;
                    const std::string id = check + "|mu=" + to_string(mu) +
                                           "|cell=" + to_string(c) +
                                           "|k=" + std::to_string(k);
                    const double cost =
                        binom_d(s, k) * fact_d(n) * fact_d(n) / 500.0;
                    tasks.push_back({id, cost, [mu, c, k, id, s, n, finding, check]() {
                        const auto dim = build_mkij(mu, c, k).dimension();
                        const std::int64_t bound =
                            to_int64(binomial(s, k) * factorial(n));
                        ordered_json v;
                        v["dimension"] = dim;
                        v["bound"] = bound;
                        VerificationRecord r =
                            make_record(check, id, dim <= bound, v);
                        if (finding && dim <= bound) {
                            r.status = "finding";
                            r.values["equal"] = dim == bound;
                        }
                        return r;
                    }});
                }
            }
        }
    }
    return tasks;
}

// ---- ideal-eq -------------------------------------------------------------

Polynomial random_bihomogeneous(int n, int dx, int dy, std::mt19937_64& rng) {
    Polynomial p(n);
    std::uniform_int_distribution<int> var(0, n - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> nterms(1, 4);
    const int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        Monomial m = Monomial::one(n);
        for (int e = 0; e < dx; ++e) ++m.xe[var(rng)];
        for (int e = 0; e < dy; ++e) ++m.ye[var(rng)];
        int c = coef(rng);
        if (c == 0) c = 1;
        p.add_term(m, c);
    }
    return p;
}

std::vector<CaseTask> ideal_eq_cases(const CheckParams& p) {
    std::vector<CaseTask> tasks;
    for (int sz = 1; sz <= p.max_size; ++sz) {
        for (const Partition& mu : partitions_of(sz)) {
            for (const Cell& c : all_cells(mu)) {
                const int s = shadow_size(mu, c);
                for (int k = 0; k <= s && sz - k >= 1; ++k) {
                    if (k == 0 && !(c == Cell{0, 0})) continue;
                    const std::string id = "ideal-eq|mu=" + to_string(mu) +
                                           "|cell=" + to_string(c) +
                                           "|k=" + std::to_string(k);
                    const int trials = p.trials;
                    const std::uint64_t seed = p.seed ^ fnv1a(id);
                    tasks.push_back({id, trials * binom_d(s, k) / 5.0,
                                     [mu, c, k, id, trials, seed]() {
                        const int n = mu.size() - k;
                        std::mt19937_64 rng(seed);
                        std::uniform_int_distribution<int> deg(0, 3);
                        long mismatches = 0, members = 0;
                        // Deterministic witnesses first.
                        const Polynomial one = Polynomial::constant(n, 1);
                        bool ok = !ideal_member_direct(one, mu, c, k) &&
                                  !ideal_member_intersection(one, mu, c, k);
                        int maxx = 0;
                        for (const auto& sub : shadow_subsets(mu, c, k)) {
                            const auto d =
                                HoledDiagram(mu, std::set<Cell>(sub.begin(), sub.end()))
                                    .cells();
                            maxx = std::max(maxx, d.xdegree());
                        }
                        const Polynomial high = p_sym(maxx + 1, n, Alpha::X);
                        ok &= ideal_member_direct(high, mu, c, k) &&
                              ideal_member_intersection(high, mu, c, k);
                        for (int t = 0; t < trials; ++t) {
                            const Polynomial P =
                                random_bihomogeneous(n, deg(rng), deg(rng), rng);
                            const bool a = ideal_member_direct(P, mu, c, k);
                            const bool b = ideal_member_intersection(P, mu, c, k);
                            if (a != b) ++mismatches;
                            if (a) ++members;
                        }
                        ordered_json v;
                        v["trials"] = trials;
                        v["mismatches"] = mismatches;
                        v["members_seen"] = members;
                        v["witnesses_ok"] = ok;
                        return make_record("ideal-eq", id, ok && mismatches == 0, v);
                    }});
                }
            }
        }
    }
    return tasks;
}

// ---- xpart ----------------------------------------------------------------

std::vector<CaseTask> xpart_cases(const CheckParams& p) {
    std::vector<CaseTask> tasks;
    for (int sz = 1; sz <= p.max_size; ++sz) {
        for (const Partition& mu : partitions_of(sz)) {
            for (const Cell& c : all_cells(mu)) {
                const int s = shadow_size(mu, c);
                for (int k = 0; k <= std::min(p.kmax, s) && sz - k >= 1; ++k) {
                    if (k == 0 && !(c == Cell{0, 0})) continue;
                    const std::string id = "xpart|mu=" + to_string(mu) +
                                           "|cell=" + to_string(c) +
                                           "|k=" + std::to_string(k);
                    const double cost =
                        binom_d(s, k) * fact_d(sz - k) * fact_d(sz - k) / 200.0;
                    tasks.push_back({id, cost, [mu, c, k, id]() {
                        const BasisVerification v = verify_basis_family(mu, c, k);
                        ordered_json j;
                        j["space_dimension"] = v.space_dimension;
                        j["tableau_count"] = v.tableau_count;
                        j["family_size"] = v.family_size;
                        j["independent"] = v.independent;
                        j["contained"] = v.contained;
                        return make_record("xpart", id, v.ok(), j);
                    }});
                }
            }
        }
    }
    return tasks;
}

// ---- depth ----------------------------------------------------------------

std::vector<CaseTask> depth_cases(const CheckParams& p) {
    std::vector<CaseTask> tasks;
    for (int sz = 1; sz <= p.max_size; ++sz) {
        for (const Partition& mu : partitions_of(sz)) {
            for (int k = 1; k <= p.kmax && k < sz; ++k) {
                const std::string id =
                    "depth|mu=" + to_string(mu) + "|k=" + std::to_string(k);
                tasks.push_back({id, 5.0, [mu, k, id]() {
                    long cases = 0, collisions = 0;
                    for (const Cell& c : all_cells(mu)) {
                        if (k > shadow_size(mu, c)) continue;
                        const auto sels = enum_selections(mu, c, k);
                        std::set<DepthTuple> seen;
                        for (const Selection& sel : sels)
                            seen.insert(depth_tuple(mu_f_holes(sel)));
                        if (seen.size() != sels.size()) ++collisions;
                        ++cases;
                    }
                    ordered_json v;
                    v["anchors"] = cases;
                    v["collisions"] = collisions;
                    return make_record("depth", id, collisions == 0, v);
                }});
            }
        }
    }
    return tasks;
}

// ---- orbit ----------------------------------------------------------------

std::vector<CaseTask> orbit_cases(const CheckParams& p) {
    std::vector<CaseTask> tasks;
    for (int sz = 1; sz <= p.max_size; ++sz) {
        for (const Partition& mu : partitions_of(sz)) {
            for (const Cell& c : all_cells(mu)) {
                const int s = shadow_size(mu, c);
                for (int k = 0; k <= s && sz - k >= 1; ++k) {
                    if (k == 0 && !(c == Cell{0, 0})) continue;
                    const std::string id = "orbit|mu=" + to_string(mu) +
                                           "|cell=" + to_string(c) +
                                           "|k=" + std::to_string(k);
                    const double cost =
                        binom_d(s, k) * fact_d(sz - k) * fact_d(sz) / 2000.0;
                    const int trials = p.trials;
                    const std::uint64_t seed = p.seed ^ fnv1a(id);
                    tasks.push_back({id, cost, [mu, c, k, id, trials, seed]() {
                        const int n = mu.size() - k;
                        std::vector<Rational> alpha, beta;
                        for (int t = 0; t < std::max(mu.rows(), 1); ++t)
                            alpha.push_back(t + 1);
                        for (int t = 0; t < std::max(mu.parts()[0], 1); ++t)
                            beta.push_back(t + 1);
                        const auto points = orbit_points(mu, c, k, alpha, beta);
                        const std::int64_t expected =
                            to_int64(binomial(shadow_size(mu, c), k) * factorial(n));
                        bool ok = static_cast<std::int64_t>(points.size()) == expected;
                        // Randomized transfer trials with generic families.
                        std::mt19937_64 rng(seed);
                        std::vector<Rational> ga, gb;
                        {
                            std::vector<int> pool;
                            for (int t = 1; t <= 40; ++t) pool.push_back(t);
                            std::shuffle(pool.begin(), pool.end(), rng);
                            for (int t = 0; t < mu.rows(); ++t)
                                ga.push_back(pool[t]);
                            for (int t = 0; t < mu.parts()[0]; ++t)
                                gb.push_back(pool[20 + t]);
                        }
                        const auto gpoints = orbit_points(mu, c, k, ga, gb);
                        int cap = 1;
                        std::vector<Polynomial> ann;
                        while (cap <= 8) {
                            ann = vanishing_ideal_basis(gpoints, n, cap);
                            if (!ann.empty()) break;
                            ++cap;
                        }
                        ok &= !ann.empty();
                        long transfer_fail = 0;
                        std::uniform_int_distribution<int> coef(-3, 3);
                        std::uniform_int_distribution<std::size_t> pick(
                            0, ann.empty() ? 0 : ann.size() - 1);
                        for (int t = 0; t < trials && !ann.empty(); ++t) {
                            Polynomial P(n);
                            const int parts = 1 + static_cast<int>(t % 3);
                            for (int u = 0; u < parts; ++u) {
                                int cf = coef(rng);
                                if (cf == 0) cf = 2;
                                P += Rational(cf) * ann[pick(rng)];
                            }
                            if (P.is_zero()) P = ann[pick(rng)];
                            if (!orbit_vanishing_transfer(P, mu, c, k, ga, gb))
                                ++transfer_fail;
                        }
                        ordered_json v;
                        v["points"] = points.size();
                        v["expected"] = expected;
                        v["annihilators"] = ann.size();
                        v["transfer_failures"] = transfer_fail;
                        return make_record("orbit", id, ok && transfer_fail == 0, v);
                    }});
                }
            }
        }
    }
    return tasks;
}

}  // namespace

std::vector<CaseTask> make_check_cases(const std::string& check,
                                       const CheckParams& params) {
    if (check == "determinant") return determinant_cases(params);
    if (check == "shift-equiv") return shift_equiv_cases(params);
    if (check == "two-hole") return two_hole_cases(params);
    if (check == "nfact") return nfact_cases(params);
    if (check == "one-hole") return one_hole_cases(params);
    if (check == "bound") return bound_like_cases("bound", params);
    if (check == "conjecture") return bound_like_cases("conjecture", params);
    if (check == "ideal-eq") return ideal_eq_cases(params);
    if (check == "xpart") return xpart_cases(params);
    if (check == "depth") return depth_cases(params);
    if (check == "orbit") return orbit_cases(params);
    throw std::invalid_argument("unknown check: " + check);
}

ordered_json record_to_json(const VerificationRecord& r) {
    ordered_json j;
    j["check"] = r.check;
    j["case"] = r.case_id;
    j["status"] = r.status;
    j["values"] = r.values;
    return j;
}

SuiteSummary run_suite(const SuiteOptions& opts) {
    std::vector<std::string> checks =
        opts.checks.empty() ? kAllChecks : opts.checks;
    for (const std::string& c : checks)
        if (!is_known_check(c)) throw std::invalid_argument("unknown check: " + c);

    std::vector<CaseTask> tasks;
    for (const std::string& c : checks) {
        CheckParams p = default_params(c);
        if (opts.max_size > 0) p.max_size = opts.max_size;
        if (opts.kmax > 0) p.kmax = opts.kmax;
        if (opts.trials > 0) p.trials = opts.trials;
        p.seed = opts.seed;
        if (c == "shift-equiv" && opts.max_size > 0)
            p.max_cells = std::min(opts.max_size, 6);
        auto cs = make_check_cases(c, p);
        tasks.insert(tasks.end(), std::make_move_iterator(cs.begin()),
                     std::make_move_iterator(cs.end()));
    }

    double total_cost = 0;
    for (const CaseTask& t : tasks) total_cost += t.cost;
    if (total_cost > opts.cost_ceiling)
        throw std::invalid_argument(
            "suite refused: estimated cost " + std::to_string(total_cost) +
            " exceeds the ceiling " + std::to_string(opts.cost_ceiling));

    SuiteSummary summary;
    std::set<std::string> done;
    if (!opts.out_path.empty()) {
        std::ifstream in(opts.out_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const auto j = nlohmann::json::parse(line);
            VerificationRecord r;
            r.check = j.at("check");
            r.case_id = j.at("case");
            r.status = j.at("status");
            r.values = j.at("values");
            done.insert(r.case_id);
            summary.records.push_back(std::move(r));
        }
    }
    summary.skipped_resume = static_cast<std::int64_t>(done.size());

    if (opts.jobs > 0) omp_set_num_threads(opts.jobs);
    std::ofstream out;
    if (!opts.out_path.empty()) out.open(opts.out_path, std::ios::app);

    std::vector<const CaseTask*> todo;
    for (const CaseTask& t : tasks)
        if (!done.contains(t.id)) todo.push_back(&t);

    const std::size_t chunk = std::max<std::size_t>(
        1, 4 * static_cast<std::size_t>(std::max(1, omp_get_max_threads())));
    for (std::size_t base = 0; base < todo.size(); base += chunk) {
        const std::size_t end = std::min(todo.size(), base + chunk);
        std::vector<VerificationRecord> results(end - base);
#pragma omp parallel for schedule(dynamic)
        for (std::size_t t = base; t < end; ++t) {
            const auto start = std::chrono::steady_clock::now();
            VerificationRecord r;
            try {
                r = todo[t]->run();
            } catch (const std::exception& e) {
                r.check = todo[t]->id.substr(0, todo[t]->id.find('|'));
                r.case_id = todo[t]->id;
                r.status = "fail";
                r.values["error"] = e.what();
            }
            r.millis = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
            results[t - base] = std::move(r);
        }
        for (VerificationRecord& r : results) {
            if (out.is_open()) {
                out << record_to_json(r).dump() << "\n";
                out.flush();
            }
            summary.records.push_back(std::move(r));
        }
    }

    for (const VerificationRecord& r : summary.records) {
        if (r.status == "pass")
            ++summary.passed;
        else if (r.status == "finding")
            ++summary.findings;
        else
            ++summary.failed;
    }
    if (!opts.csv_path.empty()) write_csv(opts.csv_path, summary.records);
    return summary;
}

std::string format_table(const SuiteSummary& summary, bool show_all) {
    std::ostringstream os;
    std::map<std::string, std::array<std::int64_t, 3>> agg;
    for (const VerificationRecord& r : summary.records) {
        auto& a = agg[r.check];
        if (r.status == "pass")
            ++a[0];
        else if (r.status == "finding")
            ++a[1];
        else
            ++a[2];
    }
    os << "check          pass  finding  fail\n";
    for (const auto& [check, a] : agg) {
        os << check;
        for (std::size_t t = check.size(); t < 15; ++t) os << ' ';
        os << a[0] << "     " << a[1] << "        " << a[2] << "\n";
    }
    for (const VerificationRecord& r : summary.records) {
        if (show_all || r.status == "fail")
            os << r.status << "  " << r.case_id << "  " << r.values.dump()
               << "  (" << r.millis << " ms)\n";
    }
    os << "total: " << summary.passed << " passed, " << summary.findings
       << " findings, " << summary.failed << " failed";
    if (summary.skipped_resume)
        os << " (" << summary.skipped_resume << " resumed)";
    os << "\n";
    return os.str();
}

void write_csv(const std::string& path,
               const std::vector<VerificationRecord>& records) {
    std::ofstream out(path);
    out << "check,case,status,values\n";
    for (const VerificationRecord& r : records) {
        std::string v = r.values.dump();
        std::string esc;
        for (char c : v) {
            if (c == '"') esc += "\"\"";
            else esc += c;
        }
        out << r.check << "," << r.case_id << "," << r.status << ",\"" << esc
            << "\"\n";
    }
}

}  // namespace latpoly
