// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <string>

#include "chromatic/cli.hpp"
#include "chromatic/verify.hpp"

namespace {

int failures = 0;

void report(int index, const std::string& title, bool pass, double seconds, double budget,
            const std::string& detail) {
    const bool in_budget = seconds < budget;
    const bool ok = pass && in_budget;
    if (!ok) ++failures;
    std::printf("%s  criterion %2d: %s (%.2fs of %.0fs budget) — %s%s\n", ok ? "PASS" : "FAIL",
                index, title.c_str(), seconds, budget, detail.c_str(),
                !in_budget ? " [over budget]" : "");
    std::fflush(stdout);
}

void run_check(int index, const std::string& title, double budget,
               chromatic::verify::CheckResult (*fn)()) {
    const auto res = fn();
    report(index, title, res.pass, res.seconds, budget, res.detail);
}

}  // namespace

int main() {
    using namespace chromatic;

    {
        const auto res = verify::check_x0_law(200, 20);
        report(1, "root law across both p regimes", res.pass, res.seconds, 5.0, res.detail);
    }
    {
        const auto res = verify::check_lemma_sweeps(10000, 0.1, 0.1);
        report(2, "explicit lemma constants sweep", res.pass, res.seconds, 10.0, res.detail);
    }
    run_check(3, "first moment vs all-graphs brute force", 60.0, verify::check_first_moment_bruteforce);
    {
        const auto res = verify::check_first_moment_montecarlo(100000, 1);
        report(4, "first moment Monte Carlo at (12,4,1/2)", res.pass, res.seconds, 120.0,
               res.detail);
    }
    {
        const auto res = verify::check_relation_pm();
        report(5, "pair counts reconstructed from overlap matrices", res.pass, res.seconds, 120.0,
               res.detail);
    }
    run_check(6, "second moment computed two ways", 300.0, verify::check_second_moment_dual);
    run_check(7, "contingency counting and asymptotic estimate", 300.0, verify::check_contingency);
    {
        const auto res = verify::check_solver_oracles(7);
        report(8, "solver oracle equivalence", res.pass, res.seconds, 120.0, res.detail);
    }
    {
        const auto res = verify::check_concentration(50, 20260101);
        report(9, "independence-number concentration window", res.pass, res.seconds, 600.0,
               res.detail);
    }
    run_check(10, "precolouring expectation exact rationals", 1.0, verify::check_precolouring_exact);

    {
        const auto t0 = std::chrono::steady_clock::now();
        cli::RunConfig cfg;
        cfg.command = "simulate";
        cfg.n = 40;
        cfg.p = 0.5;
        cfg.samples = 8;
        cfg.seed = 3330;
        const auto a = cli::run(cfg);
        const auto b = cli::run(cfg);
        const bool pass = a.exit_code == cli::kExitOk && b.exit_code == cli::kExitOk &&
                          a.envelope.at("payload").dump() == b.envelope.at("payload").dump();
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report(11, "identical simulate configs give byte-identical payloads", pass, secs, 10.0,
               pass ? "payloads identical" : "payloads differ");
    }

    if (failures > 0) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all 11 criteria passed\n");
    return failures == 0 ? 0 : 1;
}
