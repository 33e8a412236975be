#ifndef CHROMATIC_EXPERIMENT_HPP
#define CHROMATIC_EXPERIMENT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chromatic/model.hpp"
#include "chromatic/solvers.hpp"

namespace chromatic {

struct ExperimentConfig {
    long long n = 0;
    double p = 0.5;
    int samples = 0;
    std::uint64_t seed = 0;
    double eps = 0.05;
    SolverLimits limits;
    bool want_chi = true;  // skipped anyway when n exceeds the chromatic limit
};

struct SampleRecord {
    std::uint64_t seed = 0;
    long long edges = 0;
    int alpha = -1;  // -1 = refused
    int chi = -1;    // -1 = refused or skipped
    std::string refusal;
};

// Empirical confrontation of the closed forms: per-sample alpha (and chi when
// the solver limit allows), histograms, and the calibrated checks — the
// fraction of samples with alpha in {floor(alpha0)-1, floor(alpha0),
// floor(alpha0)+1} and the fraction of colouring rates n/chi inside
// [gamma-x0-eps, gamma-x0+eps].
struct ExperimentRecord {
    long long n = 0;
    double p = 0.0;
    int samples = 0;
    std::uint64_t seed = 0;
    double eps = 0.0;

    double gamma = 0.0;
    double x0 = 0.0;
    double alpha0 = 0.0;
    long long floor_alpha0 = 0;
    double rate_lo = 0.0;
    double rate_hi = 0.0;

    std::vector<SampleRecord> records;
    std::map<int, int> alpha_histogram;
    std::map<int, int> chi_histogram;

    int alpha_solved = 0;
    int chi_solved = 0;
    double alpha_mean = 0.0;
    double alpha_sd = 0.0;
    double chi_mean = 0.0;
    double chi_sd = 0.0;
    double alpha_window_fraction = 0.0;  // alpha within the 3-value window
    double rate_in_band_fraction = 0.0;  // n/chi inside [rate_lo, rate_hi]
};

// Deterministic for a fixed config: per-sample seeds are seed + index, and
// samples may be solved concurrently but are aggregated in index order.
ExperimentRecord concentration_experiment(const ExperimentConfig& cfg);

}  // namespace chromatic

#endif
