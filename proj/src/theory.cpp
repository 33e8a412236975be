#include "chromatic/theory.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace chromatic {

namespace {

constexpr double kRootTolerance = 1e-12;
constexpr int kMaxBisectionIters = 200;
// Floating-point slack when asserting strict lemma inequalities on a grid.
constexpr double kSweepSlack = 1e-9;

}  // namespace

const char* to_string(RootCase c) {
    switch (c) {
        case RootCase::ZeroRoot: return "ZeroRoot";
        case RootCase::InteriorRoot: return "InteriorRoot";
        case RootCase::FullDelta: return "FullDelta";
    }
    return "?";
}

double gamma_value(const ModelParams& mp) {
    const double logb_n = std::log(static_cast<double>(mp.n)) / mp.log_b;
    if (!(logb_n > 1.0)) throw std::domain_error("gamma_value: need log_b(n) > 1");
    return 2.0 * logb_n - 2.0 * std::log(logb_n) / mp.log_b - 2.0 * std::log(2.0) / mp.log_b;
}

double phi(double x, double delta, double log_b) {
    const double y = 1.0 - delta + x;
    if (!(y > 0.0)) throw std::domain_error("phi: 1 - delta + x must be positive");
    // log1p(x - delta) = ln(1 - delta + x), accurate near y = 1
    return y * std::log1p(x - delta) / log_b + (1.0 - delta) * (delta - x) / 2.0;
}

double phi(double x, double delta, const ModelParams& mp) { return phi(x, delta, mp.log_b); }

double phi_prime(double x, double delta, double log_b) {
    const double y = 1.0 - delta + x;
    if (!(y > 0.0)) throw std::domain_error("phi_prime: 1 - delta + x must be positive");
    return std::log1p(x - delta) / log_b + 1.0 / log_b - (1.0 - delta) / 2.0;
}

double phi_prime(double x, double delta, const ModelParams& mp) {
    return phi_prime(x, delta, mp.log_b);
}

Root solve_x0(double delta, double log_b) {
    if (!(delta >= 0.0 && delta < 1.0)) throw std::domain_error("solve_x0: delta must lie in [0,1)");
    if (!(log_b > 0.0)) throw std::domain_error("solve_x0: log_b must be positive");

    if (phi(0.0, delta, log_b) <= 0.0) return {0.0, RootCase::ZeroRoot};
    // phi'(Delta) <= 0 <=> 1 - Delta >= 2/log b: phi stays positive until Delta
    if (1.0 - delta >= 2.0 / log_b - kRootTolerance) return {delta, RootCase::FullDelta};

    double lo = 0.0;   // phi(lo) > 0
    double hi = delta;  // phi(hi) <= 0 (phi(Delta) = 0)
    for (int i = 0; i < kMaxBisectionIters && hi - lo > kRootTolerance; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (phi(mid, delta, log_b) <= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return {hi, RootCase::InteriorRoot};
}

Root solve_x0(const ModelParams& mp) {
    const double g = gamma_value(mp);
    const double delta = g - std::floor(g);
    return solve_x0(delta, mp.log_b);
}

TheoryReport theory_report(const ModelParams& mp, double eps) {
    if (!(eps > 0.0)) throw std::domain_error("theory_report: eps must be positive");
    TheoryReport r{mp};
    r.eps = eps;
    r.gamma = gamma_value(mp);
    r.delta = r.gamma - std::floor(r.gamma);
    const Root root = solve_x0(r.delta, mp.log_b);
    r.x0 = root.x0;
    r.kind = root.kind;
    r.alpha0 = r.gamma + 2.0 / mp.log_b + 1.0;
    r.a = static_cast<long long>(std::floor(r.gamma)) + 1;
    r.rate_lo = r.gamma - r.x0 - eps;
    r.rate_hi = r.gamma - r.x0 + eps;
    r.chi_lo = static_cast<double>(mp.n) / r.rate_hi;
    r.chi_hi = r.rate_lo > 0.0 ? static_cast<double>(mp.n) / r.rate_lo
                               : std::numeric_limits<double>::infinity();
    r.dense_case = dense_regime(mp);
    r.corollary_rate_hi = r.gamma;
    r.corollary_rate_lo = r.dense_case ? r.gamma - 1.0 + 2.0 / mp.log_b : r.gamma;
    return r;
}

LemmaConstants::LemmaConstants(double eps_, double eps_prime_, double log_b_)
    : eps(eps_), eps_prime(eps_prime_), log_b(log_b_) {
    if (!(eps > 0.0 && eps < 1.0))
        throw std::domain_error("LemmaConstants: eps must lie in (0,1)");
    if (!(eps_prime > 0.0)) throw std::domain_error("LemmaConstants: eps' must be positive");
    if (!(log_b > 0.0)) throw std::domain_error("LemmaConstants: log_b must be positive");
    c1 = eps_prime * eps_prime / (2.0 * log_b);
    c2 = -(1.0 - eps) * std::log1p(-eps) / eps;
    c3 = std::min(eps * eps, eps_prime * eps_prime) / (4.0 * log_b);
    c4 = std::min(c3, eps / 2.0);
}

namespace {

// (1-y) log_b(1-y) + (D/2)(1-y) - (x0+eps)/2, continued by 0*log 0 = 0 at y=1.
double tail_entropy_term(double y, double delta, double x0, double eps, double log_b) {
    const double one_minus_y = 1.0 - y;
    const double lead = one_minus_y <= 0.0 ? 0.0 : one_minus_y * std::log1p(-y) / log_b;
    return lead + delta / 2.0 * one_minus_y - (x0 + eps) / 2.0;
}

}  // namespace

LemmaSweepReport verify_lemma_constants(double eps, double eps_prime, long long grid_size) {
    if (grid_size < 100) throw std::domain_error("verify_lemma_constants: grid_size must be >= 100");

    LemmaSweepReport report;
    const double log_b_max = std::log(1e6);

    const long long side2 =
        static_cast<long long>(std::ceil(std::sqrt(static_cast<double>(grid_size))));
    const long long side3 =
        static_cast<long long>(std::ceil(std::cbrt(static_cast<double>(grid_size))));

    auto delta_at = [](long long i, long long nd) {
        return static_cast<double>(i) / static_cast<double>(nd);
    };
    auto log_b_at = [&](long long j, long long nb) {
        return log_b_max * static_cast<double>(j + 1) / static_cast<double>(nb);
    };

    auto record = [&](const char* lemma, double delta, double log_b, double y, double value,
                      double bound) {
        if (report.violations.size() < 32)
            report.violations.push_back({lemma, delta, std::exp(log_b), y, value, bound});
    };

    // Root floor: if ln b > 2 and x0 > eps', then phi(x0 - eps') >= c1.
    {
        LemmaSweepEntry entry;
        entry.lemma = "phi_floor_left_of_root";
        for (long long i = 0; i < side2; ++i) {
            const double delta = delta_at(i, side2);
            for (long long j = 0; j < side2; ++j) {
                const double log_b = log_b_at(j, side2);
                if (!(log_b > 2.0)) {
                    ++entry.skipped;
                    continue;
                }
                const double x0 = solve_x0(delta, log_b).x0;
                if (!(x0 > eps_prime)) {
                    ++entry.skipped;
                    continue;
                }
                const LemmaConstants c(eps, eps_prime, log_b);
                const double v = phi(x0 - eps_prime, delta, log_b);
                ++entry.checked;
                if (v < c.c1 - kSweepSlack)
                    record("phi_floor_left_of_root", delta, log_b, NAN, v, c.c1);
            }
        }
        report.entries.push_back(entry);
    }

    // Near-one Delta: if x0 <= Delta - eps then 1 - Delta <= 2 c2 / log b.
    {
        LemmaSweepEntry entry;
        entry.lemma = "delta_near_one";
        for (long long i = 0; i < side2; ++i) {
            const double delta = delta_at(i, side2);
            for (long long j = 0; j < side2; ++j) {
                const double log_b = log_b_at(j, side2);
                const double x0 = solve_x0(delta, log_b).x0;
                if (!(x0 <= delta - eps)) {
                    ++entry.skipped;
                    continue;
                }
                const LemmaConstants c(eps, eps_prime, log_b);
                const double v = 1.0 - delta;
                const double bound = 2.0 * c.c2 / log_b;
                ++entry.checked;
                if (v > bound + kSweepSlack) record("delta_near_one", delta, log_b, NAN, v, bound);
            }
        }
        report.entries.push_back(entry);
    }

    // Mid-range ceiling: phi(Delta - y) <= -c3 for eps' <= y <= Delta - x0 - eps.
    {
        LemmaSweepEntry entry;
        entry.lemma = "phi_ceiling_mid_range";
        for (long long i = 0; i < side3; ++i) {
            const double delta = delta_at(i, side3);
            for (long long j = 0; j < side3; ++j) {
                const double log_b = log_b_at(j, side3);
                const double x0 = solve_x0(delta, log_b).x0;
                const double y_lo = eps_prime;
                const double y_hi = delta - x0 - eps;
                if (!(y_lo <= y_hi)) {
                    entry.skipped += side3;
                    continue;
                }
                const LemmaConstants c(eps, eps_prime, log_b);
                for (long long t = 0; t < side3; ++t) {
                    const double y = side3 == 1 ? y_lo
                                                : y_lo + (y_hi - y_lo) * static_cast<double>(t) /
                                                             static_cast<double>(side3 - 1);
                    const double v = phi(delta - y, delta, log_b);
                    ++entry.checked;
                    if (v > -c.c3 + kSweepSlack)
                        record("phi_ceiling_mid_range", delta, log_b, y, v, -c.c3);
                }
            }
        }
        report.entries.push_back(entry);
    }

    // Tail-entropy ceiling: (1-y) log_b(1-y) + (D/2)(1-y) - (x0+eps)/2 <= -c4
    // for eps' <= Delta - x0 - eps <= y <= 1.
    {
        LemmaSweepEntry entry;
        entry.lemma = "tail_entropy_ceiling";
        for (long long i = 0; i < side3; ++i) {
            const double delta = delta_at(i, side3);
            for (long long j = 0; j < side3; ++j) {
                const double log_b = log_b_at(j, side3);
                const double x0 = solve_x0(delta, log_b).x0;
                const double y_lo = delta - x0 - eps;
                if (!(y_lo >= eps_prime)) {
                    entry.skipped += side3;
                    continue;
                }
                const LemmaConstants c(eps, eps_prime, log_b);
                for (long long t = 0; t < side3; ++t) {
                    const double y = side3 == 1 ? y_lo
                                                : y_lo + (1.0 - y_lo) * static_cast<double>(t) /
                                                             static_cast<double>(side3 - 1);
                    const double v = tail_entropy_term(y, delta, x0, eps, log_b);
                    ++entry.checked;
                    if (v > -c.c4 + kSweepSlack)
                        record("tail_entropy_ceiling", delta, log_b, y, v, -c.c4);
                }
            }
        }
        report.entries.push_back(entry);
    }

    for (const auto& e : report.entries) {
        report.checked += e.checked;
        report.skipped += e.skipped;
    }
    return report;
}

namespace highprec {

big::Float50 gamma_value(long long n, const big::Float50& p) {
    using big::Float50;
    const Float50 q = Float50(1) - p;
    const Float50 log_b = -log(q);
    const Float50 logb_n = log(Float50(n)) / log_b;
    return 2 * logb_n - 2 * log(logb_n) / log_b - 2 * log(Float50(2)) / log_b;
}

big::Float50 phi(const big::Float50& x, const big::Float50& delta, const big::Float50& log_b) {
    using big::Float50;
    const Float50 y = Float50(1) - delta + x;
    return y * log(y) / log_b + (Float50(1) - delta) * (delta - x) / 2;
}

}  // namespace highprec

}  // namespace chromatic
