#ifndef CHROMATIC_VERIFY_HPP
#define CHROMATIC_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace chromatic::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
    nlohmann::json data;
};

// Root law across both p regimes: x0 = 0 exactly below the threshold;
// 0 <= x0 <= 1 - 2/log b (+1e-12) above it, with residual and minimality
// certificates.
CheckResult check_x0_law(long long p_points_per_regime = 200, long long n_points = 20);

// 0 violations across the four explicit-constant sweeps.
CheckResult check_lemma_sweeps(long long grid = 10000, double eps = 0.1, double eps_prime = 0.1);

// All-graphs brute force at n in {4,5,6}, every k: sum_G Z_k = P * 2^(C(n,2)-f).
CheckResult check_first_moment_bruteforce();

// Sample mean of Z_k over seeded G(12, 1/2) within 4 standard errors of mu_k.
CheckResult check_first_moment_montecarlo(int samples = 100000, std::uint64_t seed = 1);

// Precolouring expectation as exact rationals at (4,2,2) and (6,2,2), p = 1/2,
// against a from-scratch family enumeration.
CheckResult check_precolouring_exact();

// Pair enumeration vs matrix reconstruction at the given shapes, plus
// sum_r P_r = P^2.
CheckResult check_relation_pm(
    const std::vector<std::pair<long long, long long>>& shapes = {{4, 2}, {5, 2}, {6, 2}, {6, 3}});

// Dual second-moment computation at (6,3,1/2) to 12 significant digits and
// exact agreement with the all-graphs brute force at (5,2,1/2).
CheckResult check_second_moment_dual();

// Contingency DP vs exhaustive tally on grids up to 4x4 margins <= 3,
// permutation-count identity up to 8, and the shrinking log-ratio of the
// asymptotic estimate along k x k margins-3, k in {10,20,40,80}.
CheckResult check_contingency();

// Exact chi vs exhaustive colour search (n <= 9) and exact alpha vs subset
// scan (n <= 16), 200 seeded instances each.
CheckResult check_solver_oracles(std::uint64_t seed = 7);

// alpha concentration window at n = 200, p = 1/2 over seeded samples.
CheckResult check_concentration(int samples = 50, std::uint64_t seed = 20260101);

struct SuiteOptions {
    long long grid = 10000;
    std::optional<long long> n;
    std::optional<long long> k;
    int samples = 0;  // 0 = suite default
    std::uint64_t seed = 0;
    bool seed_set = false;
};

struct SuiteResult {
    std::string suite;
    bool pass = false;
    std::vector<CheckResult> checks;
    double seconds = 0.0;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});
std::vector<SuiteResult> run_all_suites(const SuiteOptions& opt = {});

}  // namespace chromatic::verify

#endif
