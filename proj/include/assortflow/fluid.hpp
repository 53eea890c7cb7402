#pragma once

#include <cstddef>
#include <vector>

#include "assortflow/catalog.hpp"
#include "assortflow/choice.hpp"

namespace assortflow {

struct FluidPhase {
    double duration;       // customer-units of real time
    double revenue_rate;   // R(S_l) for this phase's assortment
    int depleted_before;   // entries of depletion_order gone when the phase starts
};

// Trace of the deterministic consumption process: every stocked product i
// sells at rate phi(i, S(t)) until it depletes or time runs out. Assortments
// are stored compactly; phases are strictly nested and durations sum to the
// horizon. A terminal empty phase appears when everything depletes early.
struct FluidTrace {
    std::vector<int> stocked;          // initially stocked products, ascending
    std::vector<int> depletion_order;  // products that deplete, in stockout order
    std::vector<FluidPhase> phases;
    FractionalInventory consumption;   // Z_i per product
    double outside_consumption = 0.0;  // Z_0
    double revenue = 0.0;
    double horizon = 0.0;

    Assortment phase_assortment(std::size_t l) const;
};

FluidTrace sequence(const Catalog& catalog, const FractionalInventory& x, double T);

double fp_revenue(const Catalog& catalog, const FractionalInventory& x, double T);
FractionalInventory fp_consumption(const Catalog& catalog, const FractionalInventory& x, double T);

// Root of sum_k min(v_k z0, x_k) + (1 + extra_weight) * z0 = T. This is the
// outside-option consumption of the fluid process, with an optional extra
// never-depleting weight in the denominator.
double solve_outside_mass(const Catalog& catalog, const FractionalInventory& x, double T,
                          double extra_weight = 0.0);

struct SeparabilityCheck {
    double alpha;     // extra consumption of product i
    double residual;  // worst absolute mismatch across the decomposition identities
};

// Splits FP(x + delta*e_i, T) into FP(x, T - alpha_i) plus alpha_i units of
// pure product-i sales, and reports how well the identity holds numerically.
SeparabilityCheck separability_decompose(const Catalog& catalog, const FractionalInventory& x,
                                         double delta, int i, double T);

}  // namespace assortflow
