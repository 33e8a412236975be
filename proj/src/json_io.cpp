#include "chromatic/json_io.hpp"

#include <cmath>
#include <sstream>

namespace chromatic {

using nlohmann::json;

namespace {

json finite_or_null(double x) {
    if (std::isfinite(x)) return x;
    return nullptr;
}

}  // namespace

json theory_report_json(const TheoryReport& r) {
    return json{{"n", r.params.n},
                {"p", r.params.p},
                {"q", r.params.q},
                {"b", r.params.b},
                {"gamma", r.gamma},
                {"delta", r.delta},
                {"x0", r.x0},
                {"case", to_string(r.kind)},
                {"alpha0", r.alpha0},
                {"a", r.a},
                {"rate_lo", r.rate_lo},
                {"rate_hi", r.rate_hi},
                {"chi_lo", finite_or_null(r.chi_lo)},
                {"chi_hi", finite_or_null(r.chi_hi)}};
}

json experiment_json(const ExperimentRecord& r) {
    json samples = json::array();
    for (const auto& s : r.records) {
        json one{{"seed", s.seed}, {"edges", s.edges}};
        if (s.alpha >= 0) one["alpha"] = s.alpha;
        if (s.chi > 0) one["chi"] = s.chi;
        if (!s.refusal.empty()) one["refusal"] = s.refusal;
        samples.push_back(std::move(one));
    }
    json alpha_hist = json::object();
    for (const auto& [v, c] : r.alpha_histogram) alpha_hist[std::to_string(v)] = c;
    json chi_hist = json::object();
    for (const auto& [v, c] : r.chi_histogram) chi_hist[std::to_string(v)] = c;

    json out{{"n", r.n},
             {"p", r.p},
             {"samples", r.samples},
             {"seed", r.seed},
             {"eps", r.eps},
             {"gamma", r.gamma},
             {"x0", r.x0},
             {"alpha0", r.alpha0},
             {"floor_alpha0", r.floor_alpha0},
             {"rate_lo", r.rate_lo},
             {"rate_hi", r.rate_hi},
             {"alpha_solved", r.alpha_solved},
             {"alpha_mean", r.alpha_mean},
             {"alpha_sd", r.alpha_sd},
             {"alpha_window_fraction", r.alpha_window_fraction},
             {"alpha_histogram", std::move(alpha_hist)},
             {"per_sample", std::move(samples)},
             {"label", "asymptotic prediction confronted at finite n"}};
    if (r.chi_solved > 0) {
        out["chi_solved"] = r.chi_solved;
        out["chi_mean"] = r.chi_mean;
        out["chi_sd"] = r.chi_sd;
        out["chi_histogram"] = std::move(chi_hist);
        out["rate_in_band_fraction"] = r.rate_in_band_fraction;
    }
    return out;
}

json second_moment_json(const SecondMomentReport& r) {
    json groups = json::array();
    for (const auto& g : r.groups) {
        json rr = json::array();
        for (long long c : g.r.raw()) rr.push_back(c);
        groups.push_back(json{{"r", std::move(rr)}, {"P_r", g.p_r.str()}, {"d", g.d}});
    }
    return json{{"log_mu", r.mu.log()},
                {"log_direct", r.direct.log()},
                {"log_grouped", r.grouped.log()},
                {"log_ratio", r.log_ratio},
                {"ratio", finite_or_null(std::exp(r.log_ratio))},
                {"groups", std::move(groups)}};
}

json mckay_json(const McKayEstimate& e) {
    return json{{"mckay_log", e.estimate.log()},
                {"main_log", e.main_log},
                {"correction", e.correction},
                {"formal", e.formal},
                {"error_bound", e.error_bound}};
}

json lower_bound_json(const LowerBoundReport& r) {
    json out{{"applicable", r.applicable}};
    if (!r.applicable) {
        out["reason"] = r.reason;
        return out;
    }
    out["a"] = r.a;
    out["s"] = r.s;
    out["log_expected_precolourings"] = r.expected_precolourings.log();
    out["log_expected_independent_a_sets"] = r.expected_independent_a_sets.log();
    return out;
}

json suite_json(const verify::SuiteResult& s) {
    json checks = json::array();
    for (const auto& c : s.checks)
        checks.push_back(json{{"name", c.name},
                              {"pass", c.pass},
                              {"detail", c.detail},
                              {"seconds", c.seconds},
                              {"data", c.data}});
    return json{{"suite", s.suite}, {"pass", s.pass}, {"seconds", s.seconds}, {"checks", checks}};
}

namespace {

void flatten_into(const json& node, const std::string& prefix, std::ostringstream& out) {
    if (node.is_object()) {
        for (const auto& [key, value] : node.items())
            flatten_into(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (node.is_array()) {
        std::size_t i = 0;
        for (const auto& value : node) flatten_into(value, prefix + "." + std::to_string(i++), out);
    } else {
        std::string text = node.dump();
        if (text.find(',') != std::string::npos) {
            std::string quoted = "\"";
            for (char ch : text) {
                if (ch == '"') quoted += "\"\"";
                else quoted += ch;
            }
            quoted += "\"";
            text = quoted;
        }
        out << prefix << ',' << text << '\n';
    }
}

}  // namespace

std::string flatten_csv(const json& payload) {
    std::ostringstream out;
    out << "key,value\n";
    flatten_into(payload, "", out);
    return out.str();
}

}  // namespace chromatic
