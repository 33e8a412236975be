#include "chromatic/moments.hpp"

#include <cmath>
#include <stdexcept>

#include "chromatic/theory.hpp"

namespace chromatic {

EquipartitionShape EquipartitionShape::make(long long n, long long k) {
    if (n < 1 || k < 1 || k > n) throw std::domain_error("EquipartitionShape: need 1 <= k <= n");
    EquipartitionShape s;
    s.n = n;
    s.k = k;
    s.floor_size = n / k;
    s.k1 = n % k;
    s.ceil_size = s.k1 == 0 ? s.floor_size : s.floor_size + 1;
    s.k2 = k - s.k1;
    s.forbidden_edges = s.k1 * big::choose2(s.ceil_size) + s.k2 * big::choose2(s.floor_size);
    return s;
}

big::Int equipartition_count(const EquipartitionShape& shape) {
    big::Int p = big::factorial(shape.n);
    const big::Int cf = big::factorial(shape.ceil_size);
    const big::Int ff = big::factorial(shape.floor_size);
    for (long long i = 0; i < shape.k1; ++i) p /= cf;
    for (long long i = 0; i < shape.k2; ++i) p /= ff;
    return p;
}

double log_equipartition_count(const EquipartitionShape& shape) {
    return big::log_factorial(shape.n) -
           static_cast<double>(shape.k1) * big::log_factorial(shape.ceil_size) -
           static_cast<double>(shape.k2) * big::log_factorial(shape.floor_size);
}

ScaledCount first_moment_scaled(const EquipartitionShape& shape) {
    return {equipartition_count(shape), shape.forbidden_edges};
}

LogValue first_moment(const EquipartitionShape& shape, const ModelParams& mp) {
    return LogValue::from_log(log_equipartition_count(shape) +
                              static_cast<double>(shape.forbidden_edges) * std::log1p(-mp.p));
}

ThresholdResult first_moment_threshold(const ModelParams& mp) {
    const double g = gamma_value(mp);
    long long k = std::max<long long>(1, static_cast<long long>(std::ceil(
                                             static_cast<double>(mp.n) / (g + 1.0))));
    auto mu = [&](long long kk) { return first_moment(EquipartitionShape::make(mp.n, kk), mp); };

    ThresholdResult res;
    if (mu(k).log() < 0.0) {
        while (k < mp.n && mu(k).log() < 0.0) ++k;
        if (mu(k).log() < 0.0)
            throw std::runtime_error("first_moment_threshold: no crossing up to k = n");
    } else {
        while (k > 1 && mu(k - 1).log() >= 0.0) --k;
    }
    res.k_star = k;
    res.mu_at = mu(k);
    res.mu_below = k > 1 ? mu(k - 1) : LogValue::zero();
    return res;
}

ScaledCount expected_independent_sets_scaled(const ModelParams& mp, long long s) {
    if (s < 1 || s > mp.n) throw std::domain_error("expected_independent_sets: need 1 <= s <= n");
    return {big::binomial(mp.n, s), big::choose2(s)};
}

LogValue expected_independent_sets(const ModelParams& mp, long long s) {
    if (s < 1 || s > mp.n) throw std::domain_error("expected_independent_sets: need 1 <= s <= n");
    const double lg = big::log_factorial(mp.n) - big::log_factorial(s) -
                      big::log_factorial(mp.n - s);
    const long long e = big::choose2(s);
    return LogValue::from_log(lg + static_cast<double>(e) * std::log1p(-mp.p));
}

ScaledCount expected_precolourings_scaled(const ModelParams& mp, long long a, long long s) {
    if (a < 2 || s < 1 || a * s > mp.n)
        throw std::domain_error("expected_precolourings: need a >= 2, s >= 1, a*s <= n");
    big::Int c = big::factorial(mp.n);
    c /= big::factorial(s);
    const big::Int af = big::factorial(a);
    for (long long i = 0; i < s; ++i) c /= af;
    c /= big::factorial(mp.n - a * s);
    return {c, s * big::choose2(a)};
}

LogValue expected_precolourings(const ModelParams& mp, long long a, long long s) {
    if (a < 2 || s < 1 || a * s > mp.n)
        throw std::domain_error("expected_precolourings: need a >= 2, s >= 1, a*s <= n");
    // term grouping matches expected_independent_sets so the s = 1 case is
    // bit-identical to it
    const double lg = big::log_factorial(mp.n) - big::log_factorial(s) -
                      static_cast<double>(s) * big::log_factorial(a) -
                      big::log_factorial(mp.n - a * s);
    const long long e = s * big::choose2(a);
    return LogValue::from_log(lg + static_cast<double>(e) * std::log1p(-mp.p));
}

long long lower_bound_s(const ModelParams& mp, double eps) {
    if (!dense_regime(mp))
        throw std::domain_error("lower_bound_s: requires p above the 1 - 1/e^2 threshold");
    const double g = gamma_value(mp);
    const double delta = g - std::floor(g);
    const double x0 = solve_x0(delta, mp.log_b).x0;
    if (!(eps > 0.0 && eps <= x0))
        throw std::domain_error("lower_bound_s: requires 0 < eps <= x0");
    const double logb_n = std::log(static_cast<double>(mp.n)) / mp.log_b;
    return static_cast<long long>(
        std::ceil((delta - x0 + eps / 2.0) * static_cast<double>(mp.n) / (2.0 * logb_n)));
}

LowerBoundReport lower_bound_report(const ModelParams& mp, double eps) {
    LowerBoundReport rep;
    if (!dense_regime(mp)) {
        rep.reason = "p below the 1 - 1/e^2 threshold: plain first-moment bound applies";
        return rep;
    }
    const double g = gamma_value(mp);
    const double delta = g - std::floor(g);
    const double x0 = solve_x0(delta, mp.log_b).x0;
    if (!(eps > 0.0 && eps <= x0)) {
        rep.reason = "eps exceeds x0: plain first-moment bound applies";
        return rep;
    }
    rep.a = static_cast<long long>(std::floor(g)) + 1;
    rep.s = lower_bound_s(mp, eps);
    if (rep.s < 1) {
        rep.reason = "derived s < 1: precolouring family is empty at this scale";
        return rep;
    }
    if (rep.a * rep.s > mp.n) {
        rep.reason = "a*s exceeds n: disjoint-packing capacity violated at this n";
        return rep;
    }
    rep.applicable = true;
    rep.expected_precolourings = expected_precolourings(mp, rep.a, rep.s);
    rep.expected_independent_a_sets = expected_independent_sets(mp, rep.a);
    return rep;
}

EquipartitionShape shape_for_theta(const ModelParams& mp, double theta) {
    if (theta < 0.0) throw std::domain_error("shape_for_theta: theta must be nonnegative");
    const double g = gamma_value(mp);
    const double delta = g - std::floor(g);
    const double x0 = solve_x0(delta, mp.log_b).x0;
    const double denom = g - x0 - theta;
    if (!(denom > 0.0))
        throw std::domain_error("shape_for_theta: gamma - x0 - theta must be positive");
    const long long k =
        static_cast<long long>(std::ceil(static_cast<double>(mp.n) / denom));
    return EquipartitionShape::make(mp.n, std::min(k, mp.n));
}

double key_fact_J_margin(const EquipartitionShape& shape, const ModelParams& mp, double theta) {
    if (theta < 0.0) throw std::domain_error("key_fact_J_margin: theta must be nonnegative");
    const double log_mu = first_moment(shape, mp).log();
    const double num = log_mu - big::log_factorial(shape.k1) - big::log_factorial(shape.k2);
    return num / static_cast<double>(shape.n) - theta / 2.0 * mp.log_b;
}

}  // namespace chromatic
