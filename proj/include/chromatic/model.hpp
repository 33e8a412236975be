#ifndef CHROMATIC_MODEL_HPP
#define CHROMATIC_MODEL_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace chromatic {

// The (n, p) model of a dense random graph, with the derived quantities every
// computation starts from: q = 1-p, b = 1/q, and ln b cached.
//
// Construction requires log_b(n) > 1 so that log_b log_b n is defined.
struct ModelParams {
    long long n = 0;
    double p = 0.0;
    double q = 0.0;
    double b = 0.0;
    double log_b = 0.0;  // natural log of b

    ModelParams(long long n_, double p_) : n(n_), p(p_) {
        if (!(p > 0.0 && p < 1.0)) throw std::domain_error("ModelParams: p must lie in (0,1)");
        if (n < 1) throw std::domain_error("ModelParams: n must be positive");
        q = 1.0 - p;
        b = 1.0 / q;
        log_b = -std::log1p(-p);  // ln(1/(1-p)) without cancellation
        if (!(std::log(static_cast<double>(n)) > log_b))
            throw std::domain_error("ModelParams: need log_b(n) > 1");
    }

    double log_base_b(double x) const { return std::log(x) / log_b; }
};

// Threshold separating the two regimes of the simpler two-sided bounds:
// p <= 1 - 1/e^2 iff ln b <= 2.
inline double p_threshold() { return 1.0 - std::exp(-2.0); }
inline bool dense_regime(const ModelParams& mp) { return mp.log_b > 2.0; }

}  // namespace chromatic

#endif
