#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "latpoly/bases.hpp"
#include "latpoly/determinant.hpp"
#include "latpoly/shiftops.hpp"
#include "latpoly/spaces.hpp"
#include "latpoly/tableaux.hpp"
#include "latpoly/verify.hpp"

using nlohmann::ordered_json;
using namespace latpoly;

namespace {

ordered_json cells_json(const std::vector<Cell>& cells) {
    ordered_json a = ordered_json::array();
    for (const Cell& c : cells) a.push_back({c.row, c.col});
    return a;
}

ordered_json polynomial_json(const Polynomial& p) {
    ordered_json a = ordered_json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        ordered_json t;
        t["coef"] = to_string(it->second);
        t["x"] = it->first.xe;
        t["y"] = it->first.ye;
        a.push_back(std::move(t));
    }
    return a;
}

ordered_json hilbert_json(const GradedSubspace& s) {
    ordered_json a = ordered_json::array();
    for (const HilbertEntry& e : s.hilbert_series())
        a.push_back({e.dx, e.dy, e.dim});
    return a;
}

// Default output directory for report files, from the environment.
std::string resolve_out(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    const char* dir = std::getenv("LATPOLY_OUT_DIR");
    if (dir == nullptr || *dir == '\0') return path;
    return std::string(dir) + "/" + path;
}

void emit(const ordered_json& j, bool json_mode, const std::string& out,
          const std::string& text) {
    const std::string payload = json_mode ? j.dump(2) : text;
    if (!out.empty()) {
        std::ofstream f(resolve_out(out));
        f << payload << "\n";
    } else {
        std::cout << payload << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice diagram determinant calculator"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json_mode = false;
    std::string out_file;
    int jobs = 0;
    std::uint64_t seed = 20260809;
    app.add_flag("--json", json_mode, "machine readable output");
    app.add_option("--out", out_file, "write the result to a file");
    app.add_option("--jobs", jobs, "worker threads (0 = hardware default)");
    app.add_option("--seed", seed, "seed for randomized checks");

    std::string cells_arg, mu_arg, cell_arg, op_arg = "pk";
    int k_arg = 1;
    bool x_only = false, hilbert = false, count_only = false, verify_basis = false;

    auto* cmd_delta = app.add_subcommand("delta", "expand a lattice determinant");
    cmd_delta->add_option("--cells", cells_arg, "cells, e.g. \"(0,0);(1,0)\"")
        ->required();

    std::string alphabet = "x";
    auto* cmd_shift = app.add_subcommand("shift", "apply a shift operator");
    cmd_shift->add_option("--op", op_arg, "pk, ek or hk")->required();
    cmd_shift->add_option("--k", k_arg, "operator index")->required();
    cmd_shift->add_option("--cells", cells_arg, "cells of the diagram")->required();
    cmd_shift->add_option("--alphabet", alphabet, "x or y (default x)");

    auto* cmd_mkij = app.add_subcommand("mkij", "build the k-hole sum space");
    cmd_mkij->add_option("--mu", mu_arg, "partition, e.g. 3,2")->required();
    cmd_mkij->add_option("--cell", cell_arg, "anchor cell, e.g. 0,0")->required();
    cmd_mkij->add_option("--k", k_arg, "number of holes")->required();
    cmd_mkij->add_flag("--x-only", x_only, "restrict to zero y-degree");
    cmd_mkij->add_flag("--hilbert", hilbert, "include the Hilbert series");

    auto* cmd_tab = app.add_subcommand("tableaux", "enumerate white-cell tableaux");
    cmd_tab->add_option("--mu", mu_arg)->required();
    cmd_tab->add_option("--cell", cell_arg)->required();
    cmd_tab->add_option("--k", k_arg)->required();
    cmd_tab->add_flag("--count-only", count_only);

    auto* cmd_sel = app.add_subcommand("selections", "enumerate circled selections");
    cmd_sel->add_option("--mu", mu_arg)->required();
    cmd_sel->add_option("--cell", cell_arg)->required();
    cmd_sel->add_option("--k", k_arg)->required();

    auto* cmd_basis = app.add_subcommand("basis", "build the explicit x-part basis");
    cmd_basis->add_option("--mu", mu_arg)->required();
    cmd_basis->add_option("--cell", cell_arg)->required();
    cmd_basis->add_option("--k", k_arg)->required();
    cmd_basis->add_flag("--verify", verify_basis, "run the full verification");

    std::vector<std::string> checks;
    int max_size = -1, kmax = -1, trials = -1;
    double cost_ceiling = 1e9;
    std::string csv_file;
    auto* cmd_verify = app.add_subcommand("verify", "run the verification harness");
    cmd_verify->add_option("checknames", checks, "checks to run (default: all)");
    cmd_verify->add_option("--checks", checks, "subset of checks to run")
        ->delimiter(',');
    cmd_verify->add_option("--max-size", max_size, "partition size budget");
    cmd_verify->add_option("--kmax", kmax, "hole budget");
    cmd_verify->add_option("--trials", trials, "randomized trials per case");
    cmd_verify->add_option("--csv", csv_file, "also export CSV");
    cmd_verify->add_option("--cost-ceiling", cost_ceiling,
                           "refuse suites estimated above this cost");

    CLI11_PARSE(app, argc, argv);

    auto parse_anchor = [&]() { return parse_cell("(" + cell_arg + ")"); };

    try {
        if (cmd_delta->parsed()) {
            const LatticeDiagram d(parse_cells(cells_arg));
            const Polynomial p = delta(d);
            emit(polynomial_json(p), json_mode, out_file, to_string(p));
        } else if (cmd_shift->parsed()) {
            const LatticeDiagram d(parse_cells(cells_arg));
            if (alphabet != "x" && alphabet != "y")
                throw std::invalid_argument("alphabet must be x or y");
            const Alpha al = alphabet == "x" ? Alpha::X : Alpha::Y;
            SignedDiagramSum s;
            if (op_arg == "pk")
                s = pk_apply(k_arg, d, al);
            else if (op_arg == "ek")
                s = ek_apply(k_arg, d, al);
            else if (op_arg == "hk")
                s = hk_apply(k_arg, d, al);
            else
                throw std::invalid_argument("unknown operator: " + op_arg);
            ordered_json a = ordered_json::array();
            std::string text;
            for (const auto& [c, diag] : s) {
                a.push_back({to_string(c), cells_json(diag.cells())});
                text += to_string(c) + " * [" + to_string(diag) + "]\n";
            }
            if (text.empty()) text = "0";
            emit(a, true, out_file, text);  // always JSON per interface
        } else if (cmd_mkij->parsed()) {
            if (jobs > 0) omp_set_num_threads(jobs);
            const Partition mu = parse_partition(mu_arg);
            const Cell c = parse_anchor();
            const GradedSubspace s = build_mkij(mu, c, k_arg, x_only);
            const int n = mu.size() - k_arg;
            ordered_json j;
            j["dimension"] = s.dimension();
            j["bound"] = to_int64(binomial(shadow_size(mu, c), k_arg) * factorial(n));
            if (x_only) j["tableaux"] = count_tableaux(mu, c, k_arg);
            if (hilbert) j["hilbert"] = hilbert_json(s);
            emit(j, true, out_file, j.dump(2));
        } else if (cmd_tab->parsed()) {
            const Partition mu = parse_partition(mu_arg);
            const Cell c = parse_anchor();
            ordered_json j;
            j["count"] = count_tableaux(mu, c, k_arg);
            if (!count_only) {
                ordered_json list = ordered_json::array();
                for (const Tableau& t : enum_tableaux(mu, c, k_arg)) {
                    ordered_json tj;
                    tj["white"] = cells_json({t.white.begin(), t.white.end()});
                    ordered_json es = ordered_json::array();
                    for (const auto& [cell, e] : t.entries)
                        es.push_back({cell.row, cell.col, e});
                    tj["entries"] = es;
                    list.push_back(std::move(tj));
                }
                j["tableaux"] = list;
            }
            emit(j, true, out_file, j.dump(2));
        } else if (cmd_sel->parsed()) {
            const Partition mu = parse_partition(mu_arg);
            const Cell c = parse_anchor();
            ordered_json list = ordered_json::array();
            for (const Selection& sel : enum_selections(mu, c, k_arg)) {
                const HoledDiagram hd = mu_f_holes(sel);
                ordered_json sj;
                sj["circled"] = cells_json(sel.circled());
                sj["mu_f"] = mu_f(sel).parts();
                sj["holes"] = cells_json({hd.holes().begin(), hd.holes().end()});
                sj["depths"] = depth_tuple(hd);
                list.push_back(std::move(sj));
            }
            emit(list, true, out_file, list.dump(2));
        } else if (cmd_basis->parsed()) {
            const Partition mu = parse_partition(mu_arg);
            const Cell c = parse_anchor();
            ordered_json j;
            const BasisFamily fam = build_basis_family(mu, c, k_arg);
            ordered_json list = ordered_json::array();
            for (const BasisEntry& e : fam.entries) {
                ordered_json ej;
                ej["circled"] = cells_json(e.selection.circled());
                ej["layer"] = e.index.layer;
                ej["xmon"] = e.index.xmon;
                ej["value"] = to_string(e.value);
                list.push_back(std::move(ej));
            }
            j["size"] = fam.size();
            j["entries"] = list;
            if (verify_basis) {
                const BasisVerification v = verify_basis_family(mu, c, k_arg);
                j["space_dimension"] = v.space_dimension;
                j["tableau_count"] = v.tableau_count;
                j["independent"] = v.independent;
                j["contained"] = v.contained;
                j["ok"] = v.ok();
            }
            emit(j, true, out_file, j.dump(2));
        } else if (cmd_verify->parsed()) {
            SuiteOptions opts;
            opts.checks = checks;
            opts.max_size = max_size;
            opts.kmax = kmax;
            opts.trials = trials;
            opts.seed = seed;
            opts.jobs = jobs;
            opts.cost_ceiling = cost_ceiling;
            opts.out_path = resolve_out(out_file);
            opts.csv_path = resolve_out(csv_file);
            const SuiteSummary summary = run_suite(opts);
            if (json_mode) {
                ordered_json a = ordered_json::array();
                for (const VerificationRecord& r : summary.records)
                    a.push_back(record_to_json(r));
                std::cout << a.dump(2) << "\n";
            } else {
                std::cout << format_table(summary);
            }
            return summary.failed > 0 ? 1 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
