#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "assortflow/catalog.hpp"

namespace assortflow::verify {

// One verified property; margin >= 0 means the requirement held, and the
// margin is the worst-case slack observed across the sweep.
struct CheckLine {
    std::string name;
    double margin = 0.0;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckLine> checks;

    bool pass() const {
        for (const auto& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
};

// Fast solver vs. the fixed-y0 oracle and the reference LP, plus the
// revenue-ordered structure and fluid equivalence, on random instances.
std::vector<CheckLine> check_cdlp(long trials, uint64_t seed);

std::vector<CheckLine> check_separability(long trials, uint64_t seed);

std::vector<CheckLine> check_submodular_order(long trials, uint64_t seed);

std::vector<CheckLine> check_rounding(long trials, uint64_t seed);

// Desk-scale end-to-end DA checks against exhaustive fluid optima.
std::vector<CheckLine> check_da_deterministic(int instances, long reps, uint64_t seed,
                                              int threads);
std::vector<CheckLine> check_da_stochastic(int instances, long reps, uint64_t seed, int threads);

// DAP fluid-stage ratio against exhaustive reference-LP optima.
std::vector<CheckLine> check_dap_cardinality(int instances, uint64_t seed);
std::vector<CheckLine> check_dap_budget(int instances, uint64_t seed);

std::vector<CheckLine> check_policy_sampling(long reps, uint64_t seed, int threads);
std::vector<CheckLine> check_policy_greedy(long reps, uint64_t seed, int threads);

// Planner plus sampling policy, simulated, against the exhaustive multi-type
// LP optimum: the end-to-end personalization pipeline.
std::vector<CheckLine> check_dap_end_to_end(int instances, long reps, uint64_t seed, int threads);

// The two-product cannibalization instance with its closed-form values.
std::vector<CheckLine> check_worked_example(long reps, uint64_t seed, int threads);

std::vector<CheckLine> check_bounds_module(long trials, uint64_t seed);

std::vector<CheckLine> check_fast_solver_scaling(uint64_t seed);

SuiteReport run_suite(const std::string& name, long trials, uint64_t seed, int threads);

}  // namespace assortflow::verify
