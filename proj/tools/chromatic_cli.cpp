// Command-line front-end: one binary, one subcommand per pipeline.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chromatic/cli.hpp"

namespace {

// splits "1,2,3" into a margin list
std::vector<long long> parse_margins(const std::string& text) {
    std::vector<long long> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    using chromatic::cli::RunConfig;

    CLI::App app{"calculator and verification driver for the colouring bounds of dense random graphs"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_file;
    std::string rows_text, cols_text;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_file, "key=value config file (flags take precedence)");
        cmd->add_option("--output,-o", cfg.output_path, "write the result to this path instead of stdout");
        cmd->add_option("--format", cfg.format, "output format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--seed", cfg.seed, "base RNG seed (default 0)");
    };

    auto* theory = app.add_subcommand("theory", "closed-form report: gamma, x0, intervals");
    theory->add_option("--n", cfg.n, "number of vertices")->required();
    theory->add_option("--p", cfg.p, "edge probability")->required();
    theory->add_option("--eps", cfg.eps, "interval half-width (default 0.05)");
    add_common(theory);

    auto* moments = app.add_subcommand("moments", "equipartition shape, P, mu_k, lower-bound pipeline");
    moments->add_option("--n", cfg.n)->required();
    moments->add_option("--p", cfg.p)->required();
    moments->add_option("--k", cfg.k, "number of parts")->required();
    moments->add_option("--eps", cfg.eps, "enables the precolouring lower-bound block");
    moments->add_option("--theta", cfg.theta, "enables the per-part expectation margin block");
    add_common(moments);

    auto* threshold = app.add_subcommand("threshold", "first-moment threshold scan");
    threshold->add_option("--n", cfg.n)->required();
    threshold->add_option("--p", cfg.p)->required();
    add_common(threshold);

    auto* simulate = app.add_subcommand("simulate", "seeded sampling with exact solvers");
    simulate->add_option("--n", cfg.n)->required();
    simulate->add_option("--p", cfg.p)->required();
    simulate->add_option("--samples", cfg.samples, "number of seeded samples (default 10)");
    simulate->add_option("--eps", cfg.eps, "rate-band half-width (default 0.05)");
    add_common(simulate);

    auto* matrices = app.add_subcommand("count-matrices", "0-1 matrices with prescribed margins");
    matrices->add_option("--rows", rows_text, "comma-separated row sums")->required();
    matrices->add_option("--cols", cols_text, "comma-separated column sums")->required();
    add_common(matrices);

    auto* second = app.add_subcommand("second-moment", "exact dual E[Z_k^2] at desk scale");
    second->add_option("--n", cfg.n)->required();
    second->add_option("--p", cfg.p)->required();
    second->add_option("--k", cfg.k)->required();
    add_common(second);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", cfg.suite, "one suite name (default: all)");
    verify->add_option("--grid", cfg.grid, "sweep grid size (default 10000)");
    verify->add_option("--n", cfg.n, "suite-specific shape override");
    verify->add_option("--k", cfg.k, "suite-specific shape override");
    verify->add_option("--samples", cfg.samples, "suite-specific sample override");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return chromatic::cli::kExitUsage;
    }

    CLI::App* active = app.get_subcommands().front();
    cfg.command = active->get_name();
    if (!rows_text.empty()) cfg.rows = parse_margins(rows_text);
    if (!cols_text.empty()) cfg.cols = parse_margins(cols_text);

    if (!config_file.empty()) {
        // record which keys came from flags so the file cannot override them
        std::vector<std::string> set_keys;
        auto mark = [&](const char* key, const char* flag) {
            if (active->get_option_no_throw(flag) && active->count(flag) > 0)
                set_keys.push_back(key);
        };
        mark("n", "--n");
        mark("k", "--k");
        mark("p", "--p");
        mark("eps", "--eps");
        mark("theta", "--theta");
        mark("samples", "--samples");
        mark("seed", "--seed");
        mark("suite", "--suite");
        mark("grid", "--grid");
        mark("rows", "--rows");
        mark("cols", "--cols");
        mark("output", "--output");
        mark("format", "--format");
        try {
            chromatic::cli::apply_config_file(cfg, config_file, set_keys);
        } catch (const std::exception& e) {
            std::cerr << e.what() << '\n';
            return chromatic::cli::kExitUsage;
        }
    }

    return chromatic::cli::run_and_print(cfg, std::cout, std::cerr);
}
