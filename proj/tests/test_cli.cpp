#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "chromatic/cli.hpp"
#include "chromatic/json_io.hpp"
#include "chromatic/theory.hpp"

using namespace chromatic;
using nlohmann::json;

namespace {

cli::RunConfig base_config(const std::string& command) {
    cli::RunConfig cfg;
    cfg.command = command;
    return cfg;
}

// walks a flattened "a.b.0.c" key through a JSON tree
json lookup(const json& root, const std::string& key) {
    const json* node = &root;
    std::stringstream ss(key);
    std::string piece;
    while (std::getline(ss, piece, '.')) {
        if (node->is_array())
            node = &(*node)[std::stoul(piece)];
        else
            node = &node->at(piece);
    }
    return *node;
}

}  // namespace

TEST_CASE("theory payload pins the 14-field report object") {
    auto cfg = base_config("theory");
    cfg.n = 1000000;
    cfg.p = 0.5;
    cfg.eps = 0.05;
    const auto result = cli::run(cfg);
    CHECK(result.exit_code == cli::kExitOk);
    const json& report = result.envelope.at("payload").at("report");
    const std::set<std::string> want = {"n",  "p",     "q",      "b",       "gamma",
                                        "delta", "x0", "case",   "alpha0",  "a",
                                        "rate_lo", "rate_hi", "chi_lo", "chi_hi"};
    std::set<std::string> got;
    for (const auto& [key, value] : report.items()) got.insert(key);
    CHECK(got == want);
    CHECK(report.at("case") == "ZeroRoot");
    CHECK(report.at("x0") == 0.0);
    CHECK(result.envelope.at("payload").at("corollary").at("case") == "a");
    // envelope metadata
    for (const char* key : {"tool", "version", "config", "timestamp", "duration_ms", "payload"})
        CHECK(result.envelope.contains(key));
}

TEST_CASE("theory serialization round-trips the model quantities") {
    const ModelParams mp(4096, 0.3);
    const auto rep = theory_report(mp, 0.1);
    const json j = theory_report_json(rep);
    CHECK(j.at("gamma").get<double>() == rep.gamma);
    CHECK(j.at("alpha0").get<double>() == rep.alpha0);
    CHECK(j.at("n").get<long long>() == mp.n);
    CHECK(j.at("rate_lo").get<double>() == rep.rate_lo);
}

TEST_CASE("usage and domain errors map to the exit-code contract") {
    SUBCASE("missing required input") {
        auto cfg = base_config("theory");
        cfg.p = 0.5;  // no n
        CHECK(cli::run(cfg).exit_code == cli::kExitUsage);
    }
    SUBCASE("unknown command") {
        CHECK(cli::run(base_config("nonsense")).exit_code == cli::kExitUsage);
    }
    SUBCASE("unknown suite lists the available ones") {
        auto cfg = base_config("verify");
        cfg.suite = "bogus";
        const auto result = cli::run(cfg);
        CHECK(result.exit_code == cli::kExitUsage);
        const std::string msg = result.envelope.at("error").get<std::string>();
        CHECK(msg.find("relationpm") != std::string::npos);
    }
    SUBCASE("domain error surfaces as exit 1 with a structured payload") {
        auto cfg = base_config("theory");
        cfg.n = 2;
        cfg.p = 0.5;  // log_2 2 = 1 violates the model precondition
        const auto result = cli::run(cfg);
        CHECK(result.exit_code == cli::kExitDomainError);
        CHECK(result.envelope.at("error").at("kind") == "domain_error");
    }
    SUBCASE("scale guard surfaces as exit 1") {
        auto cfg = base_config("second-moment");
        cfg.n = 14;
        cfg.k = 2;
        cfg.p = 0.5;
        CHECK(cli::run(cfg).exit_code == cli::kExitDomainError);
    }
    SUBCASE("bad format") {
        auto cfg = base_config("theory");
        cfg.n = 1000;
        cfg.p = 0.5;
        cfg.format = "xml";
        CHECK(cli::run(cfg).exit_code == cli::kExitUsage);
    }
}

TEST_CASE("count-matrices payload") {
    auto cfg = base_config("count-matrices");
    cfg.rows = {1, 1, 1};
    cfg.cols = {1, 1, 1};
    const auto result = cli::run(cfg);
    CHECK(result.exit_code == cli::kExitOk);
    const json& payload = result.envelope.at("payload");
    CHECK(payload.at("exact") == "6");
    // S = 3 fails the max^2 < S/6 hypothesis, so the estimate is formal even
    // though it happens to be exact here
    CHECK(payload.at("formal") == true);
    CHECK(payload.at("mckay_log").get<double>() == doctest::Approx(std::log(6.0)).epsilon(1e-12));
}

TEST_CASE("moments payload carries the optional pipeline blocks") {
    auto cfg = base_config("moments");
    cfg.n = 10000;
    cfg.p = 0.5;
    cfg.k = 588;
    cfg.theta = 0.1;
    cfg.eps = 0.05;
    const auto result = cli::run(cfg);
    CHECK(result.exit_code == cli::kExitOk);
    const json& payload = result.envelope.at("payload");
    CHECK(payload.at("j_margin").at("margin").get<double>() ==
          doctest::Approx(0.3429777568005831).epsilon(1e-9));
    CHECK(payload.at("lower_bound").at("applicable") == false);
    CHECK(payload.contains("log_P"));
    CHECK(payload.contains("log_mu"));
}

TEST_CASE("simulate runs are reproducible byte for byte") {
    auto cfg = base_config("simulate");
    cfg.n = 30;
    cfg.p = 0.5;
    cfg.samples = 6;
    cfg.seed = 11;
    const auto a = cli::run(cfg);
    const auto b = cli::run(cfg);
    CHECK(a.exit_code == cli::kExitOk);
    CHECK(a.envelope.at("payload").dump() == b.envelope.at("payload").dump());
}

TEST_CASE("csv projection carries identical numeric values") {
    auto cfg = base_config("theory");
    cfg.n = 50000;
    cfg.p = 0.7;
    const auto result = cli::run(cfg);
    const json& payload = result.envelope.at("payload");
    const std::string csv = flatten_csv(payload);

    std::stringstream ss(csv);
    std::string line;
    std::getline(ss, line);
    CHECK(line == "key,value");
    int rows = 0;
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        const std::string key = line.substr(0, comma);
        const std::string value = line.substr(comma + 1);
        CHECK(lookup(payload, key).dump() == value);
        ++rows;
    }
    CHECK(rows >= 14);
}

TEST_CASE("verify subcommand: single desk-scale suite") {
    auto cfg = base_config("verify");
    cfg.suite = "relationpm";
    cfg.n = 6;
    cfg.k = 3;
    const auto result = cli::run(cfg);
    CHECK(result.exit_code == cli::kExitOk);
    const json& payload = result.envelope.at("payload");
    CHECK(payload.at("all_pass") == true);
    CHECK(payload.at("suites").size() == 1);
    CHECK(payload.at("suites").at(0).at("suite") == "relationpm");
}

TEST_CASE("config file fills unset keys but flags win") {
    const std::string path = "/tmp/chromatic_test_config.txt";
    {
        std::ofstream f(path);
        f << "# scenario defaults\n";
        f << "n = 2048\n";
        f << "p = 0.5\n";
        f << "eps = 0.25\n";
    }
    auto cfg = base_config("theory");
    cfg.p = 0.9;  // set on the command line
    cli::apply_config_file(cfg, path, {"p"});
    CHECK(cfg.n == 2048);
    CHECK(cfg.p == 0.9);
    CHECK(cfg.eps == 0.25);
    std::remove(path.c_str());

    CHECK_THROWS(cli::apply_config_file(cfg, "/nonexistent/path", {}));
}

TEST_CASE("output path writes the rendered envelope") {
    const std::string path = "/tmp/chromatic_test_output.json";
    auto cfg = base_config("theory");
    cfg.n = 4096;
    cfg.p = 0.5;
    cfg.output_path = path;
    std::ostringstream out, err;
    CHECK(cli::run_and_print(cfg, out, err) == cli::kExitOk);
    CHECK(out.str().empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    json parsed;
    f >> parsed;
    CHECK(parsed.at("payload").at("report").at("n") == 4096);
    std::remove(path.c_str());
}
