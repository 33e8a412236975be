#ifndef CHROMATIC_MOMENTS_HPP
#define CHROMATIC_MOMENTS_HPP

#include <string>

#include "chromatic/bigint.hpp"
#include "chromatic/logvalue.hpp"
#include "chromatic/model.hpp"

namespace chromatic {

// Shape bookkeeping of an ordered k-equipartition of n labelled vertices:
// k1 = n mod k parts of size ceil(n/k) come first, k2 parts of size
// floor(n/k) follow, and f counts the within-part vertex pairs.
struct EquipartitionShape {
    long long n = 0;
    long long k = 0;
    long long ceil_size = 0;
    long long floor_size = 0;
    long long k1 = 0;
    long long k2 = 0;
    long long forbidden_edges = 0;  // f = k1*C(ceil,2) + k2*C(floor,2)

    static EquipartitionShape make(long long n, long long k);

    // delta = n/k - floor(n/k) as an exact rational k1/k
    long long delta_num() const { return k1; }
    long long delta_den() const { return k; }
    double delta() const { return static_cast<double>(k1) / static_cast<double>(k); }
};

// Exact value of the form count * q^q_power; the shape every expectation in
// this module takes before any floating point enters.
struct ScaledCount {
    big::Int count;
    long long q_power = 0;

    LogValue to_log(const ModelParams& mp) const {
        return LogValue::from_log(big::log_of(count) +
                                  static_cast<double>(q_power) * std::log1p(-mp.p));
    }
};

// P = n! / (ceil! ^ k1 * floor! ^ k2), the number of ordered k-equipartitions.
big::Int equipartition_count(const EquipartitionShape& shape);
double log_equipartition_count(const EquipartitionShape& shape);

// mu_k = P q^f, the expected number of proper ordered k-equipartitions.
ScaledCount first_moment_scaled(const EquipartitionShape& shape);
LogValue first_moment(const EquipartitionShape& shape, const ModelParams& mp);

struct ThresholdResult {
    long long k_star = 0;     // smallest k with mu_k >= 1
    LogValue mu_below;        // mu at k_star - 1 (zero when k_star == 1)
    LogValue mu_at;           // mu at k_star
};

// Scans k upward from ceil(n/(gamma+1)) (downward when already above 1) and
// returns the crossing with both neighbours as certificate.
ThresholdResult first_moment_threshold(const ModelParams& mp);

// E[# independent s-sets] = C(n,s) q^C(s,2)
ScaledCount expected_independent_sets_scaled(const ModelParams& mp, long long s);
LogValue expected_independent_sets(const ModelParams& mp, long long s);

// E[# unordered families of s disjoint independent a-sets]
//   = n! q^{s C(a,2)} / (s! a!^s (n-as)!)
ScaledCount expected_precolourings_scaled(const ModelParams& mp, long long a, long long s);
LogValue expected_precolourings(const ModelParams& mp, long long a, long long s);

// s = ceil((Delta - x0 + eps/2) n / (2 log_b n)); requires the dense regime
// and eps <= x0.
long long lower_bound_s(const ModelParams& mp, double eps);

struct LowerBoundReport {
    bool applicable = false;
    std::string reason;  // set when not applicable
    long long a = 0;
    long long s = 0;
    LogValue expected_precolourings;
    LogValue expected_independent_a_sets;
};

// Full pipeline behind the refined lower bound; never throws on regime
// mismatch, reports it instead so callers can fall back to the plain
// first-moment bound.
LowerBoundReport lower_bound_report(const ModelParams& mp, double eps);

// Shape with k = ceil(n / (gamma - x0 - theta)).
EquipartitionShape shape_for_theta(const ModelParams& mp, double theta);

// (log mu_k - log k1! - log k2!)/n - (theta/2) log b; its trend over an
// n-grid must be bounded below by a vanishing sequence.
double key_fact_J_margin(const EquipartitionShape& shape, const ModelParams& mp, double theta);

}  // namespace chromatic

#endif
