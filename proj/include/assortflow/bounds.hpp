#pragma once

#include "assortflow/catalog.hpp"

namespace assortflow {

// Exact E[min(Binomial(T, p), cap)], no sampling.
double single_item_expected_sales(double p, int T, int cap);

// E[min(Bin(T,p), cap)] / min(pT, cap); defined as 1 when the denominator
// vanishes. The ratio stays above 1 - 1/e.
double check_single_item_bound(double p, int T, int cap);

struct GeometricRatio {
    double formula;      // 1 - 1/(2 - p): closed-form no-sale mass
    double exact;        // truncated-pmf evaluation of E_T[(1-p)^T]
    double sales_ratio;  // expected sales over fluid sales; tends to 1/2 as p -> 0
};

// Single unit, purchase probability p, T geometric(p) (so mu_T * p = 1).
// The no-sale mass E_T[P(Bin(T,p) = 0)] has closed form 1 - 1/(2-p); one
// minus it is the sales-to-fluid ratio whose infimum over p is 1/2.
GeometricRatio geometric_ratio(double p);

// (x / (x + 1))^x, decreasing toward 1/e.
double shifted_geometric_objective(double x);

struct InfimumResult {
    double value;
    double argmin;
};
InfimumResult shifted_geometric_infimum(double x_max);

// min over stocked products of E_T[Z_i^DA(x, T)] / Z_i^FP(x, mu_T), both
// sides exact (inventory DP and fluid trace). At least 1/e for IFR demand,
// 1 - 1/e for deterministic T.
double ifr_product_bound_check(const Catalog& catalog, const InventoryVector& x,
                               const DemandDistribution& demand, bool require_ifr = true);

}  // namespace assortflow
