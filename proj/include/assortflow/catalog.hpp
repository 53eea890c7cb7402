#pragma once

#include <optional>
#include <vector>

#include "assortflow/common.hpp"

namespace assortflow {

using InventoryVector = std::vector<int>;
using FractionalInventory = std::vector<double>;

// Products sorted by non-increasing price (ties keep original order).
// Attraction weights are normalized so the outside option has weight 1.
struct Catalog {
    std::vector<double> prices;
    std::vector<double> weights;

    int n() const { return static_cast<int>(prices.size()); }
};

struct CustomerTypeSet {
    std::vector<Catalog> types;   // shared price vector, per-type weights
    std::vector<double> lambda;   // arrival probabilities, sum to 1

    int m() const { return static_cast<int>(types.size()); }
    int n() const { return types.empty() ? 0 : types.front().n(); }
};

enum class DemandKind { Deterministic, FinitePmf, Geometric, ShiftedGeometric, TruncatedPoisson };

// Always materialized to a finite pmf on {0,...,t_max}; parametric variants
// are truncated where the tail mass drops below 1e-12.
struct DemandDistribution {
    DemandKind kind = DemandKind::Deterministic;
    std::vector<double> pmf;  // index k = P(T = k)
    double mean = 0.0;
    int t_max = 0;

    static DemandDistribution deterministic(int t);
    static DemandDistribution finite_pmf(std::vector<double> pmf);
    static DemandDistribution geometric(double p);              // support {1,2,...}, mean 1/p
    static DemandDistribution shifted_geometric(int shift, double p);
    static DemandDistribution truncated_poisson(double mean);

    bool is_deterministic() const { return kind == DemandKind::Deterministic; }
    int deterministic_value() const;
};

// q_k = P(T=k)/P(T>=k) non-decreasing over the support.
bool is_ifr(const DemandDistribution& demand);

struct Constraint {
    enum class Kind { Cardinality, Budget };
    Kind kind = Kind::Cardinality;
    int K = 0;
    double B = 0.0;
    std::vector<double> b;  // per-product budget weights, internal order

    static Constraint cardinality(int k);
    static Constraint budget(double B, std::vector<double> b);

    bool feasible(const InventoryVector& c, double tol = 1e-9) const;
};

// Raw user input before sorting/normalization.
struct ModelInput {
    std::vector<double> prices;
    std::vector<double> weights;                 // single-type
    double v0 = 1.0;
    std::vector<std::vector<double>> type_weights;  // multi-type (overrides weights)
    std::vector<double> type_lambda;
    std::optional<DemandDistribution> demand;
    std::optional<Constraint> constraint;        // b in user order
};

struct CheckedModel {
    Catalog catalog;                 // type 0 view for single-type use
    CustomerTypeSet types;
    std::optional<DemandDistribution> demand;
    std::optional<Constraint> constraint;
    std::vector<int> perm;           // perm[internal] = user index (0-based)

    int n() const { return catalog.n(); }
    bool multi_type() const { return types.m() > 1; }

    // Maps an internal-order vector back to user order.
    template <typename T>
    std::vector<T> to_user_order(const std::vector<T>& internal) const {
        std::vector<T> out(internal.size());
        for (std::size_t i = 0; i < internal.size(); ++i) out[perm[i]] = internal[i];
        return out;
    }
};

CheckedModel validate(const ModelInput& input);

}  // namespace assortflow
