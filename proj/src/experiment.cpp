#include "chromatic/experiment.hpp"

#include <cmath>

#include "chromatic/graph.hpp"
#include "chromatic/parallel.hpp"
#include "chromatic/theory.hpp"

namespace chromatic {

namespace {

struct MeanSd {
    double mean = 0.0;
    double sd = 0.0;
};

MeanSd mean_sd(const std::vector<double>& xs) {
    MeanSd out;
    if (xs.empty()) return out;
    double s = 0.0;
    for (double x : xs) s += x;
    out.mean = s / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - out.mean) * (x - out.mean);
        out.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return out;
}

}  // namespace

ExperimentRecord concentration_experiment(const ExperimentConfig& cfg) {
    if (cfg.samples < 1) throw std::domain_error("concentration_experiment: samples must be >= 1");
    const ModelParams mp(cfg.n, cfg.p);
    const TheoryReport theory = theory_report(mp, cfg.eps);

    ExperimentRecord rec;
    rec.n = cfg.n;
    rec.p = cfg.p;
    rec.samples = cfg.samples;
    rec.seed = cfg.seed;
    rec.eps = cfg.eps;
    rec.gamma = theory.gamma;
    rec.x0 = theory.x0;
    rec.alpha0 = theory.alpha0;
    rec.floor_alpha0 = static_cast<long long>(std::floor(theory.alpha0));
    rec.rate_lo = theory.rate_lo;
    rec.rate_hi = theory.rate_hi;

    const bool solve_chi = cfg.want_chi && cfg.n <= cfg.limits.max_n_chromatic;

    auto solve_one = [&](int idx) {
        SampleRecord s;
        s.seed = cfg.seed + static_cast<std::uint64_t>(idx);
        const Graph g = sample_gnp(static_cast<int>(cfg.n), cfg.p, s.seed);
        s.edges = g.edge_count();
        try {
            s.alpha = independence_number(g, cfg.limits);
        } catch (const SolverRefusal& e) {
            s.refusal = e.what();
        }
        if (solve_chi) {
            try {
                s.chi = chromatic_number(g, cfg.limits);
            } catch (const SolverRefusal& e) {
                s.refusal = e.what();
            }
        }
        return s;
    };

    rec.records = parallel_map<SampleRecord>(cfg.samples, solve_one);

    std::vector<double> alphas, chis;
    int in_window = 0, rate_in_band = 0;
    for (const auto& s : rec.records) {
        if (s.alpha >= 0) {
            alphas.push_back(s.alpha);
            ++rec.alpha_histogram[s.alpha];
            if (std::llabs(s.alpha - rec.floor_alpha0) <= 1) ++in_window;
        }
        if (s.chi > 0) {
            chis.push_back(s.chi);
            ++rec.chi_histogram[s.chi];
            const double rate = static_cast<double>(cfg.n) / s.chi;
            if (rate >= rec.rate_lo && rate <= rec.rate_hi) ++rate_in_band;
        }
    }
    rec.alpha_solved = static_cast<int>(alphas.size());
    rec.chi_solved = static_cast<int>(chis.size());
    const auto am = mean_sd(alphas);
    rec.alpha_mean = am.mean;
    rec.alpha_sd = am.sd;
    const auto cm = mean_sd(chis);
    rec.chi_mean = cm.mean;
    rec.chi_sd = cm.sd;
    if (rec.alpha_solved > 0)
        rec.alpha_window_fraction = static_cast<double>(in_window) / rec.alpha_solved;
    if (rec.chi_solved > 0)
        rec.rate_in_band_fraction = static_cast<double>(rate_in_band) / rec.chi_solved;
    return rec;
}

}  // namespace chromatic
