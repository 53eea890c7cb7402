#pragma once

#include <cstdint>
#include <vector>

#include "assortflow/catalog.hpp"
#include "assortflow/policies.hpp"

namespace assortflow {

struct SimResult {
    double mean = 0.0;
    double stderr_ = 0.0;
    long reps = 0;
    std::vector<double> mean_consumption;
    uint64_t seed = 0;
};

// Sequential-customer Monte Carlo where every arrival sees all in-stock
// products. One rng stream per replication; results are bit-identical for a
// given seed regardless of thread count.
SimResult simulate_da(const Catalog& catalog, const InventoryVector& c,
                      const DemandDistribution& demand, long reps, uint64_t seed,
                      int threads = 1);

struct PolicySpec {
    enum class Kind { OfferAll, Greedy, Sampling };
    Kind kind = Kind::OfferAll;
    const SamplingPolicy* sampling = nullptr;

    static PolicySpec offer_all() { return {}; }
    static PolicySpec greedy() { return {Kind::Greedy, nullptr}; }
    static PolicySpec sampling_from(const SamplingPolicy& p) { return {Kind::Sampling, &p}; }
};

// Personalized simulation: per arrival, draw the customer type, obtain the
// policy's offer over current availability, draw the MNL choice, decrement.
SimResult simulate_dap(const CustomerTypeSet& types, const InventoryVector& c,
                       const PolicySpec& policy, const DemandDistribution& demand, long reps,
                       uint64_t seed, int threads = 1);

// Exact expected revenue of the DA process by backward recursion over
// (remaining inventory, remaining customers); tiny instances only.
double exact_da_revenue(const Catalog& catalog, const InventoryVector& c, int T);

// Per-product expected consumption, same recursion.
std::vector<double> exact_da_consumption(const Catalog& catalog, const InventoryVector& c, int T);

// pmf-weighted versions over a finite demand distribution.
double exact_da_expected_revenue(const Catalog& catalog, const InventoryVector& c,
                                 const DemandDistribution& demand);
std::vector<double> exact_da_expected_consumption(const Catalog& catalog,
                                                  const InventoryVector& c,
                                                  const DemandDistribution& demand);

}  // namespace assortflow
