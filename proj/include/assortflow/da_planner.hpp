#pragma once

#include <string>

#include "assortflow/catalog.hpp"
#include "assortflow/cdlp.hpp"

namespace assortflow {

struct DaPlan {
    InventoryVector inventory;
    double fluid_objective = 0.0;  // f_LP(inventory, T) (or mu_T)
    double chosen_y0 = 0.0;
    int grid_index = -1;
    std::string rounding = "none";  // "up" | "down" | "none"
    bool fallback_used = false;
};

// One greedy pass of the fixed-y0 surrogate: K unit additions under a
// cardinality constraint, or gain-per-cost plus best-affordable-singleton
// under a budget.
InventoryVector greedy_surrogate_max(const Catalog& catalog, const Constraint& constraint,
                                     double T, double y0bar);

struct DaFluidResult {
    InventoryVector inventory;
    double objective = 0.0;  // f_LP(inventory, T)
    double chosen_y0 = 0.0;
    int grid_index = -1;
};

// Surrogate maximization over the geometric y0 grid eps*(1+eps)^u capped at T.
DaFluidResult optimize_da_fluid(const Catalog& catalog, const Constraint& constraint, double T,
                                double eps);

// Rounds the single fractional entry of the revenue-ordered inventory up or
// down, whichever leaves the higher fluid revenue; keeps the prefix, zeroes
// the suffix. "up" is skipped when it would violate the constraint.
InventoryVector transform_round_bad(const Catalog& catalog, const InventoryVector& c_fluid,
                                    double T, const Constraint* constraint = nullptr,
                                    std::string* direction = nullptr);

// Full pipeline: static fallback for short horizons (T < 4 deterministic,
// mu_T < 5.15 for IFR demand), otherwise fluid optimization plus rounding.
DaPlan solve_da(const Catalog& catalog, const Constraint& constraint,
                const DemandDistribution& demand, double eps);

// Best constrained revenue-ordered static assortment, one unit each.
InventoryVector static_fallback_inventory(const Catalog& catalog, const Constraint& constraint);

}  // namespace assortflow
