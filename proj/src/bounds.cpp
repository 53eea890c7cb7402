#include "assortflow/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "assortflow/fluid.hpp"
#include "assortflow/simulator.hpp"

namespace assortflow {

namespace {

double binomial_pmf(int T, double p, int j) {
    double lp = std::lgamma(T + 1.0) - std::lgamma(j + 1.0) - std::lgamma(T - j + 1.0) +
                j * std::log(p) + (T - j) * std::log1p(-p);
    return std::exp(lp);
}

}  // namespace

double single_item_expected_sales(double p, int T, int cap) {
    require(p >= 0.0 && p <= 1.0, "p must be in [0,1]");
    require(T >= 0 && cap >= 0, "T and cap must be >= 0");
    if (cap == 0 || T == 0 || p == 0.0) return 0.0;
    if (p == 1.0) return std::min(T, cap);
    // E[min(X, cap)] = sum_{k=1..cap} P(X >= k)
    double total = 0.0;
    double cdf = 0.0;
    for (int k = 1; k <= cap; ++k) {
        cdf += binomial_pmf(T, p, k - 1);
        total += std::max(0.0, 1.0 - cdf);
    }
    return total;
}

double check_single_item_bound(double p, int T, int cap) {
    double fluid = std::min(p * T, static_cast<double>(cap));
    if (fluid <= 0.0) return 1.0;
    return single_item_expected_sales(p, T, cap) / fluid;
}

GeometricRatio geometric_ratio(double p) {
    require(p > 0.0 && p < 1.0, "p must be in (0,1)");
    GeometricRatio r;
    r.formula = 1.0 - 1.0 / (2.0 - p);

    DemandDistribution demand = DemandDistribution::geometric(p);
    double no_sale = 0.0;  // E_T[(1-p)^T]
    for (int t = 0; t <= demand.t_max; ++t) {
        no_sale += demand.pmf[t] * std::pow(1.0 - p, t);
    }
    r.exact = no_sale;
    r.sales_ratio = (1.0 - no_sale) / std::min(demand.mean * p, 1.0);
    return r;
}

double shifted_geometric_objective(double x) {
    require(x >= 1.0, "x must be >= 1");
    return std::pow(x / (x + 1.0), x);
}

InfimumResult shifted_geometric_infimum(double x_max) {
    require(x_max >= 1.0, "x_max must be >= 1");
    InfimumResult best{shifted_geometric_objective(1.0), 1.0};
    for (double x = 1.0; x < x_max; x *= 1.1) {
        double v = shifted_geometric_objective(x);
        if (v < best.value) best = {v, x};
    }
    double v = shifted_geometric_objective(x_max);
    if (v < best.value) best = {v, x_max};
    return best;
}

double ifr_product_bound_check(const Catalog& catalog, const InventoryVector& x,
                               const DemandDistribution& demand, bool require_ifr) {
    if (require_ifr && !demand.is_deterministic()) {
        if (!is_ifr(demand)) throw UnsupportedError("bound check requires IFR demand");
    }
    std::vector<double> stochastic = exact_da_expected_consumption(catalog, x, demand);
    FractionalInventory fx(x.begin(), x.end());
    FractionalInventory fluid = fp_consumption(catalog, fx, demand.mean);

    double worst = 1.0;
    for (int i = 0; i < catalog.n(); ++i) {
        if (fluid[i] <= 1e-12) continue;
        worst = std::min(worst, stochastic[i] / fluid[i]);
    }
    return worst;
}

}  // namespace assortflow
