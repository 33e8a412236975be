#ifndef CHROMATIC_CLI_HPP
#define CHROMATIC_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace chromatic::cli {

inline constexpr const char* kToolName = "chromatic";
inline constexpr const char* kToolVersion = "0.1.0";

// exit-code contract
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitVerifyFailed = 2;
inline constexpr int kExitUsage = 64;

struct RunConfig {
    std::string command;  // theory | moments | threshold | simulate | count-matrices |
                          // second-moment | verify
    std::optional<long long> n;
    std::optional<long long> k;
    std::optional<double> p;
    std::optional<double> eps;
    std::optional<double> theta;
    std::optional<long long> samples;
    std::uint64_t seed = 0;  // documented default
    std::string suite;       // verify: empty = all suites
    long long grid = 10000;
    std::vector<long long> rows;
    std::vector<long long> cols;
    std::string output_path;       // empty = stdout
    std::string format = "json";   // json | csv
};

nlohmann::json config_json(const RunConfig& cfg);

// Key-value config file ("key = value" lines, '#' comments); keys mirror the
// RunConfig field names. CLI flags take precedence over file values.
void apply_config_file(RunConfig& cfg, const std::string& path,
                       const std::vector<std::string>& cli_set_keys);

struct RunResult {
    int exit_code = kExitOk;
    nlohmann::json envelope;
};

// Dispatches the command, wraps the payload in the result envelope, and
// renders it to `out` in the configured format. Validation problems return
// kExitUsage before any work happens.
RunResult run(const RunConfig& cfg);
int run_and_print(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace chromatic::cli

#endif
