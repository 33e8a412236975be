#ifndef CHROMATIC_JSON_IO_HPP
#define CHROMATIC_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "chromatic/experiment.hpp"
#include "chromatic/moments.hpp"
#include "chromatic/overlap.hpp"
#include "chromatic/theory.hpp"
#include "chromatic/verify.hpp"

namespace chromatic {

// The pinned 14-field object: n, p, q, b, gamma, delta, x0, case, alpha0, a,
// rate_lo, rate_hi, chi_lo, chi_hi. Non-finite bounds serialize as null.
nlohmann::json theory_report_json(const TheoryReport& r);

nlohmann::json experiment_json(const ExperimentRecord& r);
nlohmann::json second_moment_json(const SecondMomentReport& r);
nlohmann::json mckay_json(const McKayEstimate& e);
nlohmann::json lower_bound_json(const LowerBoundReport& r);
nlohmann::json suite_json(const verify::SuiteResult& s);

// Flat key,value projection of a JSON payload. Nested keys join with '.',
// array elements with their index; scalars keep their JSON text, so the CSV
// and JSON carry identical numeric values.
std::string flatten_csv(const nlohmann::json& payload);

}  // namespace chromatic

#endif
