// Acceptance suite: one test case per criterion, each driving the
// verification harness at its pinned budget and printing a pass/fail line.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <chrono>
#include <cstdio>

#include "doctest.h"
#include "latpoly/verify.hpp"

using namespace latpoly;

namespace {

struct Outcome {
    SuiteSummary summary;
    double seconds = 0;
    std::int64_t fails() const { return summary.failed; }
};

Outcome run(const std::vector<std::string>& checks, int max_size = -1,
            int kmax = -1, int trials = -1) {
    SuiteOptions opts;
    opts.checks = checks;
    opts.max_size = max_size;
    opts.kmax = kmax;
    opts.trials = trials;
    opts.seed = 20260809;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    o.summary = run_suite(opts);
    o.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return o;
}

void report(int criterion, const char* name, bool pass, const Outcome& o) {
    std::printf("[%s] criterion-%02d %-28s  cases=%zu fails=%lld  (%.1f s)\n",
                pass ? "PASS" : "FAIL", criterion, name, o.summary.records.size(),
                static_cast<long long>(o.fails()), o.seconds);
    std::fflush(stdout);
    if (!pass)
        for (const VerificationRecord& r : o.summary.records)
            if (r.status == "fail")
                std::printf("    fail: %s  %s\n", r.case_id.c_str(),
                            r.values.dump().c_str());
}

}  // namespace

TEST_CASE("criterion 1: determinant ground truth") {
    const Outcome o = run({"determinant"});
    const bool pass = o.fails() == 0 && o.seconds < 1.0;
    report(1, "determinant-ground-truth", pass, o);
    CHECK(o.fails() == 0);
    CHECK(o.seconds < 1.0);
}

TEST_CASE("criterion 2: shift operator equivalence") {
    const Outcome o = run({"shift-equiv"});  // 4x4 box, <= 5 cells, k in 1..3
    report(2, "shift-operator-equivalence", o.fails() == 0, o);
    CHECK(o.fails() == 0);
}

TEST_CASE("criterion 3: three-hole counterexample and the two-hole space") {
    const Outcome o = run({"two-hole"});
    report(3, "two-hole-space-structure", o.fails() == 0, o);
    CHECK(o.fails() == 0);
}

TEST_CASE("criterion 4: n! dimensions up to size 5") {
    const Outcome o = run({"nfact"}, 5);
    report(4, "nfact-small-cases", o.fails() == 0, o);
    CHECK(o.fails() == 0);
}

TEST_CASE("criterion 5: one-hole spaces up to size 5") {
    const Outcome o = run({"one-hole"}, 5);
    report(5, "one-hole-spaces", o.fails() == 0, o);
    CHECK(o.fails() == 0);
}

TEST_CASE("criterion 6: dimension bound, conjectured equality as findings") {
    const Outcome bound = run({"bound"}, 5);
    report(6, "upper-bound", bound.fails() == 0, bound);
    CHECK(bound.fails() == 0);

    const Outcome conj = run({"conjecture"}, 5);
    std::int64_t equal = 0, open = 0;
    for (const VerificationRecord& r : conj.summary.records) {
        if (r.status != "finding") continue;
        (r.values.at("equal").get<bool>() ? equal : open) += 1;
    }
    std::printf("    conjectured equality holds on %lld/%lld cases%s\n",
                static_cast<long long>(equal), static_cast<long long>(equal + open),
                open ? "  (open cases reported, not failed)" : "");
    CHECK(conj.fails() == 0);
}

TEST_CASE("criterion 7: annihilator ideal equality") {
    const Outcome o = run({"ideal-eq"}, 4, -1, 200);
    report(7, "ideal-equality", o.fails() == 0, o);
    CHECK(o.fails() == 0);
}

TEST_CASE("criterion 8: x-part dimensions, counts and the explicit basis") {
    const Outcome o = run({"xpart"}, 6, 3);
    report(8, "x-part-basis", o.fails() == 0, o);
    CHECK(o.fails() == 0);
}

TEST_CASE("criterion 9: depth tuples are distinct") {
    const Outcome o = run({"depth"}, 10, 4);
    report(9, "depth-tuples", o.fails() == 0, o);
    CHECK(o.fails() == 0);
}

TEST_CASE("criterion 10: orbit cardinality and vanishing transfer") {
    const Outcome o = run({"orbit"}, 5, -1, 20);
    report(10, "orbit-layer", o.fails() == 0, o);
    CHECK(o.fails() == 0);
}
