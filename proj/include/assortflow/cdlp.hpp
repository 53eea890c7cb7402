#pragma once

#include <vector>

#include "assortflow/catalog.hpp"
#include "assortflow/fluid.hpp"

namespace assortflow {

struct SblpSolution {
    FractionalInventory sales;  // y_i
    double no_purchase = 0.0;   // y_0
    double objective = 0.0;     // sum r_i y_i
};

// Optimal sub-inventory for the fluid process: full prefix, zero suffix, at
// most one fractional entry at the threshold product.
struct RevenueOrderedInventory {
    int threshold_index = -1;  // -1 when nothing is stocked
    FractionalInventory x;
};

struct SblpFastResult {
    RevenueOrderedInventory ordered;
    SblpSolution solution;
    FluidTrace trace;  // trace of FP(x, T); sales are read off it
};

// O(n log n) revenue-ordered solver for the sales-based CDLP. Caps may be
// fractional; integer InventoryVector callers use the adapter below.
SblpFastResult solve_sblp_fast(const Catalog& catalog, const FractionalInventory& caps, double T);
SblpFastResult solve_sblp_fast(const Catalog& catalog, const InventoryVector& c, double T);

// Fractional knapsack with y_0 pinned: caps min(c_i, y0bar * v_i), total
// sales at most T - y0bar, filled in descending price order.
struct KnapsackResult {
    double value = 0.0;
    FractionalInventory sales;
};
KnapsackResult knapsack_fixed_y0(const Catalog& catalog, const FractionalInventory& caps, double T,
                                 double y0bar);
KnapsackResult knapsack_fixed_y0(const Catalog& catalog, const InventoryVector& c, double T,
                                 double y0bar);

// Golden-section maximization of the fixed-y0 value over y0 in [0, T];
// verification oracle for the fast solver (the value is concave in y0).
double single_type_reference(const Catalog& catalog, const InventoryVector& c, double T);

// f_hat: sum over types of the single-type value on that type's allocation
// row, each over horizon lambda_k * T.
double multi_type_fhat(const CustomerTypeSet& types, const std::vector<FractionalInventory>& rows,
                       double T);

struct MultiTypeLpResult {
    double objective = 0.0;
    std::vector<FractionalInventory> sales;  // y_{ki}, one row per type
    std::vector<double> no_purchase;         // y_{k0}
};

// Exact sales-based multi-type CDLP via the internal simplex; desk scale.
MultiTypeLpResult multi_type_sblp_reference(const CustomerTypeSet& types, const InventoryVector& c,
                                            double T);
MultiTypeLpResult multi_type_sblp_reference(const CustomerTypeSet& types,
                                            const FractionalInventory& c, double T);

}  // namespace assortflow
