#ifndef CHROMATIC_SOLVERS_HPP
#define CHROMATIC_SOLVERS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "chromatic/bigint.hpp"
#include "chromatic/graph.hpp"

namespace chromatic {

// Hard ceilings for the exact solvers. Exceeding one is an explicit refusal,
// never a silent fallback to a heuristic.
struct SolverLimits {
    int max_n_independence = 250;
    int max_n_chromatic = 80;
    int max_n_equipartition_count = 16;
    std::uint64_t node_budget = 400'000'000;

    // Reads CHROMATIC_MAX_INDEPENDENCE_N, CHROMATIC_MAX_CHROMATIC_N and
    // CHROMATIC_NODE_BUDGET on top of the defaults.
    static SolverLimits from_env();
};

class SolverRefusal : public std::runtime_error {
  public:
    SolverRefusal(std::string what, int lower, int upper)
        : std::runtime_error(std::move(what)), lower_bound(lower), upper_bound(upper) {}
    int lower_bound;  // best bounds found before refusing; -1 when unknown
    int upper_bound;
};

// Exact independence number: branch and bound on the complement-clique
// formulation with a greedy-colouring upper bound.
int independence_number(const Graph& g, const SolverLimits& limits = {});

// Exact chromatic number: iterative k-feasibility with DSATUR-ordered
// backtracking, exact clique lower bound, and colour-class symmetry breaking
// (a vertex may only open one colour beyond those already in use).
int chromatic_number(const Graph& g, const SolverLimits& limits = {});

// Largest clique, exact. Exposed because it doubles as the colouring lower
// bound and as chi >= clique checks in tests.
int max_clique(const Graph& g, const SolverLimits& limits = {});

// DSATUR one-pass colouring; upper bound only.
int greedy_colouring_upper_bound(const Graph& g);

// Exact realization of Z_k: the number of ordered k-equipartitions of the
// vertex set all of whose parts are independent.
big::Int count_proper_equipartitions(const Graph& g, int k, const SolverLimits& limits = {});

}  // namespace chromatic

#endif
