#include "latpoly/bases.hpp"

#include <algorithm>
#include <map>

#include "latpoly/shiftops.hpp"

namespace latpoly {

namespace {

// x-monomial exponent vectors of total degree d in n variables, canonical
// (lexicographic) order.
std::vector<std::vector<std::int32_t>> xmonomials(int n, int d) {
    std::vector<std::vector<std::int32_t>> out;
    std::vector<std::int32_t> cur(n, 0);
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == n - 1) {
            cur[var] = left;
            out.push_back(cur);
            cur[var] = 0;
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[var] = e;
            self(self, var + 1, left - e);
            cur[var] = 0;
        }
    };
    rec(rec, 0, d);
    return out;
}

struct LayerList {
    std::vector<std::pair<std::vector<std::int32_t>, Polynomial>> layers;
    int max_xdeg = 0;
};

LayerList layers_of(const LatticeDiagram& d) {
    LayerList out;
    for (auto& [beta, c] : y_layers(delta(d))) {
        out.max_xdeg = std::max(out.max_xdeg, c.leading_monomial().xdeg());
        out.layers.emplace_back(beta, c);
    }
    return out;
}

// Walk (xmon degree, layer, xmon) and keep values independent of acc. quota
// < 0 means exhaust the space; reference, when given, bounds block dimensions
// so saturated blocks are skipped without arithmetic.
std::vector<MonomialIndex> greedy_walk(const LatticeDiagram& d, long quota,
                                       const GradedSubspace* reference,
                                       GradedSubspace& acc,
                                       std::vector<Polynomial>* values_out) {
    const int n = d.size();
    const LayerList ls = layers_of(d);
    std::vector<MonomialIndex> indices;
    for (int deg = 0; deg <= ls.max_xdeg; ++deg) {
        const auto xms = xmonomials(n, deg);
        for (const auto& [beta, cbeta] : ls.layers) {
            const int vdeg = cbeta.leading_monomial().xdeg() - deg;
            if (vdeg < 0) continue;
            if (reference != nullptr &&
                acc.block_dimension({vdeg, 0}) ==
                    reference->block_dimension({vdeg, 0}))
                continue;
            for (const auto& xm : xms) {
                if (reference != nullptr &&
                    acc.block_dimension({vdeg, 0}) ==
                        reference->block_dimension({vdeg, 0}))
                    break;
                const Monomial op(xm, std::vector<std::int32_t>(n, 0));
                const Polynomial value =
                    apply_operator(Polynomial::monomial(op, 1), cbeta);
                if (value.is_zero()) continue;
                if (!acc.insert(value)) continue;
                indices.push_back({beta, xm});
                if (values_out != nullptr) values_out->push_back(value);
                if (quota >= 0 && static_cast<long>(indices.size()) == quota)
                    return indices;
            }
        }
    }
    return indices;
}

}  // namespace

std::vector<MonomialIndex> greedy_monomial_basis(const LatticeDiagram& d) {
    const GradedSubspace ref = x_space(d);
    GradedSubspace kept(d.size());
    auto indices = greedy_walk(d, -1, &ref, kept, nullptr);
    if (kept.dimension() != ref.dimension())
        throw theorem_error("greedy basis misses the x-space dimension");
    return indices;
}

BasisFamily build_basis_family(const Partition& mu, const Cell& c, int k) {
    const int n = mu.size() - k;
    // Shallow depth tuples first: their low-degree material must be claimed
    // before a deeper selection's richer space swallows it. This mirrors the
    // filtration that kills shallow terms last.
    struct Item {
        Selection sel;
        HoledDiagram hd;
        DepthTuple depths;
    };
    std::vector<Item> items;
    for (const Selection& sel : enum_selections(mu, c, k)) {
        HoledDiagram hd = mu_f_holes(sel);
        DepthTuple dt = depth_tuple(hd);
        items.push_back({sel, std::move(hd), std::move(dt)});
    }
    std::stable_sort(items.begin(), items.end(),
                     [](const Item& a, const Item& b) { return a.depths < b.depths; });
    BasisFamily family;
    GradedSubspace all(n);
    for (const Item& item : items) {
        Integer quota_z = factorial(n);
        const Partition mf = mu_f(item.sel);
        for (int p : mf.parts()) quota_z /= factorial(p);
        const long quota = static_cast<long>(to_int64(quota_z));
        std::vector<Polynomial> values;
        auto indices = greedy_walk(item.hd.cells(), quota, nullptr, all, &values);
        if (static_cast<long>(indices.size()) != quota)
            throw theorem_error("selection over " + to_string(item.hd.shape()) +
                                " yields fewer than n!/mu_F! independent values");
        for (std::size_t t = 0; t < indices.size(); ++t)
            family.entries.push_back({item.sel, indices[t], values[t]});
    }
    return family;
}

BasisVerification verify_basis_family(const Partition& mu, const Cell& c, int k) {
    BasisVerification v;
    const GradedSubspace space = build_mkij(mu, c, k, /*x_only=*/true);
    v.space_dimension = space.dimension();
    v.tableau_count = count_tableaux(mu, c, k);
    BasisFamily family;
    try {
        family = build_basis_family(mu, c, k);
        v.independent = true;
    } catch (const theorem_error&) {
        v.independent = false;
        return v;
    }
    v.family_size = static_cast<std::int64_t>(family.size());
    v.contained = true;
    for (const BasisEntry& e : family.entries)
        if (!space.contains(e.value)) v.contained = false;
    v.spans = v.contained && v.family_size == v.space_dimension;
    return v;
}

bool KillReport::all_ok() const {
    if (entries.empty()) return false;
    return std::all_of(entries.begin(), entries.end(),
                       [](const Entry& e) { return e.ok; });
}

KillReport depth_filtration_kill(const Partition& mu, const Cell& c, int k,
                                 KillStrategy strategy) {
    if (k < 1) throw std::invalid_argument("depth_filtration_kill needs k >= 1");
    const int n = mu.size() - k;
    KillReport report;
    std::vector<std::pair<DepthTuple, const Selection*>> tagged;
    const auto selections = enum_selections(mu, c, k);
    std::vector<HoledDiagram> diagrams;
    diagrams.reserve(selections.size());
    for (const Selection& sel : selections) diagrams.push_back(mu_f_holes(sel));
    DepthTuple target;
    for (std::size_t t = 0; t < selections.size(); ++t) {
        DepthTuple d = depth_tuple(diagrams[t]);
        if (t == 0 || target < d) target = d;
        tagged.emplace_back(std::move(d), &selections[t]);
    }
    // Product of h_m(dX)^{d_m - d_{m-1}} with subscripts by strategy.
    Polynomial op = Polynomial::constant(n, 1);
    int prev = 0;
    for (int m = 1; m <= k; ++m) {
        const int exp = target[m - 1] - prev;
        prev = target[m - 1];
        if (exp == 0) continue;
        const int sub = strategy == KillStrategy::descending ? k - m + 1 : m;
        op = op * h_sym(sub, n, Alpha::X).pow(exp);
    }
    for (std::size_t t = 0; t < selections.size(); ++t) {
        KillReport::Entry e;
        e.selection = selections[t];
        e.depths = tagged[t].first;
        e.is_target = tagged[t].first == target;
        const Polynomial image = apply_operator(op, delta(diagrams[t].cells()));
        e.image_zero = image.is_zero();
        e.ok = e.is_target ? !e.image_zero
                           : (tagged[t].first < target ? e.image_zero : true);
        report.entries.push_back(std::move(e));
    }
    return report;
}

}  // namespace latpoly
