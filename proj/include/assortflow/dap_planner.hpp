#pragma once

#include <vector>

#include "assortflow/catalog.hpp"
#include "assortflow/cdlp.hpp"

namespace assortflow {

// Per-type allocation rows; column sums match the integer inventory.
using AllocationRows = std::vector<FractionalInventory>;

struct BenefitResult {
    double gain = 0.0;            // max_{splits of z units} f_hat increase
    FractionalInventory by_type;  // units of product i handed to each type, sums to z
};

// Best fractional split of z units of product i across customer types,
// evaluated against the current allocation. Product i must be priced no
// higher than anything already allocated (descending-price iteration order).
BenefitResult calculate_benefit(const CustomerTypeSet& types, const AllocationRows& rows, int z,
                                int i, double T);

struct GetNumberResult {
    int units = 0;
    FractionalInventory by_type;
};

// Largest z <= cap whose pooled benefit still clears z * tau_unit; valid
// because the per-unit benefit is non-increasing in z.
GetNumberResult get_number(const CustomerTypeSet& types, const AllocationRows& rows,
                           double tau_unit, int cap, int i, double T);

struct ThresholdAddResult {
    InventoryVector inventory;
    std::vector<int> support;                // horizon values with positive mass
    std::vector<double> support_prob;
    std::vector<AllocationRows> allocations;  // one allocation per support point
};

// One threshold pass in descending price order. Cardinality: per-unit
// threshold tau; budget: per-unit threshold b_i * tau within the remaining
// budget. Stochastic demand keeps one allocation per horizon value and
// accepts on the exact pmf-weighted expected benefit.
ThresholdAddResult threshold_add(const CustomerTypeSet& types, const Constraint& constraint,
                                 double tau, const DemandDistribution& demand);

struct DapPlan {
    InventoryVector inventory;
    std::vector<int> support;
    std::vector<double> support_prob;
    std::vector<AllocationRows> allocations;
    double fhat = 0.0;  // E_T[f_hat] (plain f_hat when demand is deterministic)
    double chosen_tau = 0.0;
    int grid_index = -1;
};

// Threshold grid search; best pass by (expected) f_hat. The budget variant
// also tries every affordable singleton.
DapPlan optimize_dap(const CustomerTypeSet& types, const Constraint& constraint,
                     const DemandDistribution& demand, double eps);

// E_T[f_hat] of a plan's allocation family.
double dap_expected_fhat(const CustomerTypeSet& types, const ThresholdAddResult& plan);

}  // namespace assortflow
