#include "chromatic/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "chromatic/experiment.hpp"
#include "chromatic/json_io.hpp"
#include "chromatic/moments.hpp"
#include "chromatic/overlap.hpp"
#include "chromatic/solvers.hpp"
#include "chromatic/theory.hpp"
#include "chromatic/verify.hpp"

namespace chromatic::cli {

using nlohmann::json;

namespace {

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long long need_n(const RunConfig& cfg) {
    if (!cfg.n) throw UsageError("missing required --n");
    return *cfg.n;
}

double need_p(const RunConfig& cfg) {
    if (!cfg.p) throw UsageError("missing required --p");
    return *cfg.p;
}

long long need_k(const RunConfig& cfg) {
    if (!cfg.k) throw UsageError("missing required --k");
    return *cfg.k;
}

json decimal_string(const big::Int& v) { return v.str(); }

json command_theory(const RunConfig& cfg) {
    const ModelParams mp(need_n(cfg), need_p(cfg));
    const double eps = cfg.eps.value_or(0.05);
    const TheoryReport rep = theory_report(mp, eps);
    json corollary{{"rate_lo", rep.corollary_rate_lo},
                   {"rate_hi", rep.corollary_rate_hi},
                   {"case", rep.dense_case ? "b" : "a"}};
    return json{{"report", theory_report_json(rep)},
                {"corollary", std::move(corollary)},
                {"eps", eps},
                {"label", "asymptotic prediction"}};
}

json command_moments(const RunConfig& cfg) {
    const ModelParams mp(need_n(cfg), need_p(cfg));
    const long long k = need_k(cfg);
    const auto shape = EquipartitionShape::make(mp.n, k);
    json out{{"n", shape.n},
             {"k", shape.k},
             {"ceil_size", shape.ceil_size},
             {"floor_size", shape.floor_size},
             {"k1", shape.k1},
             {"k2", shape.k2},
             {"delta_num", shape.delta_num()},
             {"delta_den", shape.delta_den()},
             {"forbidden_edges", shape.forbidden_edges},
             {"log_P", log_equipartition_count(shape)},
             {"log_mu", first_moment(shape, mp).log()}};
    if (mp.n <= 500) out["P"] = decimal_string(equipartition_count(shape));
    const double mu_log = out["log_mu"].get<double>();
    if (std::abs(mu_log) < 700.0) out["mu"] = std::exp(mu_log);
    if (cfg.eps) out["lower_bound"] = lower_bound_json(lower_bound_report(mp, *cfg.eps));
    if (cfg.theta) {
        const auto tshape = shape_for_theta(mp, *cfg.theta);
        out["j_margin"] = json{{"theta", *cfg.theta},
                               {"k", tshape.k},
                               {"margin", key_fact_J_margin(tshape, mp, *cfg.theta)}};
    }
    return out;
}

json command_threshold(const RunConfig& cfg) {
    const ModelParams mp(need_n(cfg), need_p(cfg));
    const auto res = first_moment_threshold(mp);
    return json{{"n", mp.n},
                {"p", mp.p},
                {"k_star", res.k_star},
                {"log_mu_below", res.mu_below.is_zero() ? json(nullptr) : json(res.mu_below.log())},
                {"log_mu_at", res.mu_at.log()},
                {"n_over_k_star", static_cast<double>(mp.n) / static_cast<double>(res.k_star)},
                {"gamma", gamma_value(mp)}};
}

json command_simulate(const RunConfig& cfg) {
    ExperimentConfig ec;
    ec.n = need_n(cfg);
    ec.p = need_p(cfg);
    ec.samples = static_cast<int>(cfg.samples.value_or(10));
    ec.seed = cfg.seed;
    ec.eps = cfg.eps.value_or(0.05);
    ec.limits = SolverLimits::from_env();
    return experiment_json(concentration_experiment(ec));
}

json command_count_matrices(const RunConfig& cfg) {
    if (cfg.rows.empty() || cfg.cols.empty())
        throw UsageError("count-matrices requires --rows and --cols margin lists");
    const big::Int exact = count_01_matrices(cfg.rows, cfg.cols);
    json out = mckay_json(mckay_estimate(cfg.rows, cfg.cols));
    out["rows"] = cfg.rows;
    out["cols"] = cfg.cols;
    out["exact"] = decimal_string(exact);
    out["log_exact"] = big::log_of(exact);
    return out;
}

json command_second_moment(const RunConfig& cfg) {
    const ModelParams mp(need_n(cfg), need_p(cfg));
    json out = second_moment_json(second_moment_exact(mp.n, need_k(cfg), mp));
    out["n"] = mp.n;
    out["k"] = need_k(cfg);
    out["p"] = mp.p;
    return out;
}

json command_verify(const RunConfig& cfg, bool& failed) {
    verify::SuiteOptions opt;
    opt.grid = cfg.grid;
    opt.n = cfg.n;
    opt.k = cfg.k;
    if (cfg.samples) opt.samples = static_cast<int>(*cfg.samples);
    opt.seed = cfg.seed;
    opt.seed_set = cfg.seed != 0;

    std::vector<verify::SuiteResult> results;
    if (cfg.suite.empty()) {
        results = verify::run_all_suites(opt);
    } else {
        results.push_back(verify::run_suite(cfg.suite, opt));
    }
    bool all = true;
    json suites = json::array();
    for (const auto& s : results) {
        all = all && s.pass;
        suites.push_back(suite_json(s));
    }
    failed = !all;
    return json{{"all_pass", all}, {"suites", std::move(suites)}};
}

}  // namespace

json config_json(const RunConfig& cfg) {
    json out{{"command", cfg.command},
             {"seed", cfg.seed},
             {"grid", cfg.grid},
             {"format", cfg.format},
             {"output", cfg.output_path}};
    if (cfg.n) out["n"] = *cfg.n;
    if (cfg.k) out["k"] = *cfg.k;
    if (cfg.p) out["p"] = *cfg.p;
    if (cfg.eps) out["eps"] = *cfg.eps;
    if (cfg.theta) out["theta"] = *cfg.theta;
    if (cfg.samples) out["samples"] = *cfg.samples;
    if (!cfg.suite.empty()) out["suite"] = cfg.suite;
    if (!cfg.rows.empty()) out["rows"] = cfg.rows;
    if (!cfg.cols.empty()) out["cols"] = cfg.cols;
    return out;
}

void apply_config_file(RunConfig& cfg, const std::string& path,
                       const std::vector<std::string>& cli_set_keys) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    auto was_set = [&](const std::string& key) {
        return std::find(cli_set_keys.begin(), cli_set_keys.end(), key) != cli_set_keys.end();
    };
    auto parse_list = [](const std::string& text) {
        std::vector<long long> out;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
        return out;
    };
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::runtime_error("config file: expected key = value");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (was_set(key)) continue;  // flags win
        if (key == "n") cfg.n = std::stoll(value);
        else if (key == "k") cfg.k = std::stoll(value);
        else if (key == "p") cfg.p = std::stod(value);
        else if (key == "eps") cfg.eps = std::stod(value);
        else if (key == "theta") cfg.theta = std::stod(value);
        else if (key == "samples") cfg.samples = std::stoll(value);
        else if (key == "seed") cfg.seed = std::stoull(value);
        else if (key == "suite") cfg.suite = value;
        else if (key == "grid") cfg.grid = std::stoll(value);
        else if (key == "rows") cfg.rows = parse_list(value);
        else if (key == "cols") cfg.cols = parse_list(value);
        else if (key == "output") cfg.output_path = value;
        else if (key == "format") cfg.format = value;
        else throw std::runtime_error("config file: unknown key '" + key + "'");
    }
}

RunResult run(const RunConfig& cfg) {
    RunResult result;
    json envelope{{"tool", kToolName},
                  {"version", kToolVersion},
                  {"config", config_json(cfg)},
                  {"timestamp", timestamp_utc()}};

    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (cfg.format != "json" && cfg.format != "csv")
            throw UsageError("format must be json or csv");
        bool verify_failed = false;
        json payload;
        if (cfg.command == "theory") payload = command_theory(cfg);
        else if (cfg.command == "moments") payload = command_moments(cfg);
        else if (cfg.command == "threshold") payload = command_threshold(cfg);
        else if (cfg.command == "simulate") payload = command_simulate(cfg);
        else if (cfg.command == "count-matrices") payload = command_count_matrices(cfg);
        else if (cfg.command == "second-moment") payload = command_second_moment(cfg);
        else if (cfg.command == "verify") {
            if (!cfg.suite.empty() && !verify::is_suite(cfg.suite)) {
                std::string names;
                for (const auto& s : verify::suite_names()) names += s + " ";
                throw UsageError("unknown suite '" + cfg.suite + "'; available: " + names);
            }
            payload = command_verify(cfg, verify_failed);
        } else {
            throw UsageError("unknown command '" + cfg.command + "'");
        }
        envelope["payload"] = std::move(payload);
        if (verify_failed) result.exit_code = kExitVerifyFailed;
    } catch (const UsageError& e) {
        envelope["error"] = e.what();
        result.exit_code = kExitUsage;
    } catch (const SolverRefusal& e) {
        envelope["error"] = json{{"kind", "solver_refusal"},
                                 {"what", e.what()},
                                 {"lower_bound", e.lower_bound},
                                 {"upper_bound", e.upper_bound}};
        result.exit_code = kExitDomainError;
    } catch (const std::exception& e) {
        envelope["error"] = json{{"kind", "domain_error"}, {"what", e.what()}};
        result.exit_code = kExitDomainError;
    }
    envelope["duration_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    result.envelope = std::move(envelope);
    return result;
}

int run_and_print(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const RunResult result = run(cfg);
    std::string rendered;
    if (cfg.format == "csv" && result.envelope.contains("payload")) {
        rendered = flatten_csv(result.envelope.at("payload"));
    } else {
        rendered = result.envelope.dump(2);
        rendered += '\n';
    }
    if (result.exit_code == kExitUsage) {
        err << result.envelope.value("error", std::string("usage error")) << '\n';
        return result.exit_code;
    }
    if (cfg.output_path.empty()) {
        out << rendered;
    } else {
        std::ofstream f(cfg.output_path);
        if (!f) {
            err << "cannot write output file: " << cfg.output_path << '\n';
            return kExitDomainError;
        }
        f << rendered;
    }
    return result.exit_code;
}

}  // namespace chromatic::cli
