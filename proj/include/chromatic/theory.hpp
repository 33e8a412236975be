#ifndef CHROMATIC_THEORY_HPP
#define CHROMATIC_THEORY_HPP

#include <string>
#include <vector>

#include "chromatic/bigint.hpp"
#include "chromatic/model.hpp"

namespace chromatic {

// Location of the smallest nonnegative root x0 of phi(x) <= 0 on [0, Delta]:
// at 0, strictly inside, or at Delta itself.
enum class RootCase { ZeroRoot, InteriorRoot, FullDelta };

const char* to_string(RootCase c);

// gamma = 2 log_b n - 2 log_b log_b n - 2 log_b 2, the average-class-size
// scale of an optimal colouring.
double gamma_value(const ModelParams& mp);

// phi(x) = (1-D+x) log_b(1-D+x) + (1-D)(D-x)/2, convex on [0,D].
// Domain error when 1-D+x <= 0.
double phi(double x, double delta, double log_b);
double phi(double x, double delta, const ModelParams& mp);
double phi_prime(double x, double delta, double log_b);
double phi_prime(double x, double delta, const ModelParams& mp);

struct Root {
    double x0 = 0.0;
    RootCase kind = RootCase::ZeroRoot;
};

// Smallest nonnegative x with phi(x) <= 0. Case split first (phi(0) <= 0 gives
// 0; 1-D >= 2/log b gives D), otherwise bisection to 1e-12 keeping
// phi(lo) > 0 >= phi(hi), so the returned x0 never undershoots the crossing.
Root solve_x0(double delta, double log_b);
Root solve_x0(const ModelParams& mp);

struct TheoryReport {
    ModelParams params;
    double eps = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
    double x0 = 0.0;
    RootCase kind = RootCase::ZeroRoot;
    double alpha0 = 0.0;    // gamma + 2/log b + 1
    long long a = 0;        // floor(gamma) + 1
    double rate_lo = 0.0;   // gamma - x0 - eps
    double rate_hi = 0.0;   // gamma - x0 + eps
    double chi_lo = 0.0;    // n / rate_hi
    double chi_hi = 0.0;    // n / rate_lo (inf when rate_lo <= 0)
    // Simpler two-sided endpoints: [gamma, gamma] below the p-threshold,
    // [gamma - 1 + 2/log b, gamma] above it.
    double corollary_rate_lo = 0.0;
    double corollary_rate_hi = 0.0;
    bool dense_case = false;
};

TheoryReport theory_report(const ModelParams& mp, double eps);

// Explicit constants behind the four technical lemmas about phi, for a given
// (eps, eps', b). All strictly positive; c2 in (0,1) requires eps in (0,1).
struct LemmaConstants {
    double eps = 0.0;
    double eps_prime = 0.0;
    double log_b = 0.0;
    double c1 = 0.0;  // eps'^2 / (2 log b)
    double c2 = 0.0;  // -(1-eps) ln(1-eps) / eps
    double c3 = 0.0;  // min(eps^2, eps'^2) / (4 log b)
    double c4 = 0.0;  // min(c3, eps/2)

    LemmaConstants(double eps_, double eps_prime_, double log_b_);
};

struct LemmaViolation {
    std::string lemma;
    double delta = 0.0;
    double b = 0.0;
    double y = 0.0;  // NaN where the lemma has no y parameter
    double value = 0.0;
    double bound = 0.0;
};

struct LemmaSweepEntry {
    std::string lemma;
    long long checked = 0;
    long long skipped = 0;  // grid points where the hypotheses fail
};

struct LemmaSweepReport {
    long long checked = 0;
    long long skipped = 0;
    std::vector<LemmaSweepEntry> entries;
    std::vector<LemmaViolation> violations;
    bool clean() const { return violations.empty(); }
};

// Sweeps Delta over [0,1), b geometrically over (1, 1e6], and y over each
// lemma's admissible range; asserts the conclusion with the explicit
// constants wherever the hypotheses hold. Requires grid_size >= 100.
LemmaSweepReport verify_lemma_constants(double eps, double eps_prime, long long grid_size);

// >= 30-decimal-digit evaluation of the same closed forms; the oracle used to
// freeze expected values in tests.
namespace highprec {
big::Float50 gamma_value(long long n, const big::Float50& p);
big::Float50 phi(const big::Float50& x, const big::Float50& delta, const big::Float50& log_b);
}  // namespace highprec

}  // namespace chromatic

#endif
