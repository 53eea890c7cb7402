#include "assortflow/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace assortflow {

namespace {

constexpr double kTailCut = 1e-12;

double pmf_mean(const std::vector<double>& pmf) {
    double mu = 0.0;
    for (std::size_t k = 0; k < pmf.size(); ++k) mu += static_cast<double>(k) * pmf[k];
    return mu;
}

void finalize(DemandDistribution& d) {
    while (d.pmf.size() > 1 && d.pmf.back() == 0.0) d.pmf.pop_back();
    double total = std::accumulate(d.pmf.begin(), d.pmf.end(), 0.0);
    require(total > 0.0, "demand pmf has no mass");
    for (double& p : d.pmf) p /= total;
    d.t_max = static_cast<int>(d.pmf.size()) - 1;
    d.mean = pmf_mean(d.pmf);
}

}  // namespace

DemandDistribution DemandDistribution::deterministic(int t) {
    require(t >= 0, "deterministic demand needs T >= 0");
    DemandDistribution d;
    d.kind = DemandKind::Deterministic;
    d.pmf.assign(t + 1, 0.0);
    d.pmf[t] = 1.0;
    d.t_max = t;
    d.mean = t;
    return d;
}

DemandDistribution DemandDistribution::finite_pmf(std::vector<double> pmf) {
    DemandDistribution d;
    d.kind = DemandKind::FinitePmf;
    for (double p : pmf) require(p >= 0.0, "pmf entries must be non-negative");
    double total = std::accumulate(pmf.begin(), pmf.end(), 0.0);
    require(std::abs(total - 1.0) <= 1e-6, "pmf does not sum to 1");
    d.pmf = std::move(pmf);
    finalize(d);
    return d;
}

DemandDistribution DemandDistribution::geometric(double p) {
    require(p > 0.0 && p <= 1.0, "geometric parameter must be in (0,1]");
    DemandDistribution d;
    d.kind = DemandKind::Geometric;
    d.pmf.push_back(0.0);  // no mass at 0; support starts at 1
    double tail = 1.0;     // P(T > k)
    for (int k = 1; tail >= kTailCut && k < 1000000; ++k) {
        d.pmf.push_back(p * std::pow(1.0 - p, k - 1));
        tail *= (1.0 - p);
    }
    finalize(d);
    return d;
}

DemandDistribution DemandDistribution::shifted_geometric(int shift, double p) {
    require(shift >= 0, "shift must be >= 0");
    DemandDistribution g = geometric(p);
    DemandDistribution d;
    d.kind = DemandKind::ShiftedGeometric;
    d.pmf.assign(shift, 0.0);
    d.pmf.insert(d.pmf.end(), g.pmf.begin(), g.pmf.end());
    finalize(d);
    return d;
}

DemandDistribution DemandDistribution::truncated_poisson(double mean) {
    require(mean > 0.0, "poisson mean must be > 0");
    DemandDistribution d;
    d.kind = DemandKind::TruncatedPoisson;
    double term = std::exp(-mean);  // P(T = 0)
    double cum = term;
    d.pmf.push_back(term);
    for (int k = 1; 1.0 - cum >= kTailCut && k < 1000000; ++k) {
        term *= mean / k;
        cum += term;
        d.pmf.push_back(term);
    }
    finalize(d);
    return d;
}

int DemandDistribution::deterministic_value() const {
    require(kind == DemandKind::Deterministic, "demand is not deterministic");
    return t_max;
}

bool is_ifr(const DemandDistribution& demand) {
    const auto& pmf = demand.pmf;
    double tail = 1.0;  // P(T >= k)
    double prev_q = -1.0;
    for (std::size_t k = 0; k < pmf.size(); ++k) {
        if (tail <= 1e-15) break;
        double q = pmf[k] / tail;
        if (q < prev_q - 1e-12) return false;
        prev_q = q;
        tail -= pmf[k];
    }
    return true;
}

Constraint Constraint::cardinality(int k) {
    require(k >= 0, "cardinality K must be >= 0");
    Constraint c;
    c.kind = Kind::Cardinality;
    c.K = k;
    return c;
}

Constraint Constraint::budget(double B, std::vector<double> b) {
    require(B > 0.0, "budget B must be > 0");
    for (double w : b) require(w > 0.0, "budget weights must be > 0");
    Constraint c;
    c.kind = Kind::Budget;
    c.B = B;
    c.b = std::move(b);
    return c;
}

bool Constraint::feasible(const InventoryVector& c, double tol) const {
    if (kind == Kind::Cardinality) {
        long total = 0;
        for (int ci : c) {
            if (ci < 0) return false;
            total += ci;
        }
        return total <= K;
    }
    double spent = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0) return false;
        spent += b[i] * c[i];
    }
    return spent <= B + tol;
}

CheckedModel validate(const ModelInput& input) {
    const int n = static_cast<int>(input.prices.size());
    require(n > 0, "empty catalog");
    require(input.v0 > 0.0, "outside-option weight must be > 0");

    std::vector<std::vector<double>> weight_rows;
    std::vector<double> lambda;
    if (!input.type_weights.empty()) {
        weight_rows = input.type_weights;
        lambda = input.type_lambda;
        require(lambda.size() == weight_rows.size(), "types and lambdas differ in count");
        double sum = std::accumulate(lambda.begin(), lambda.end(), 0.0);
        require(std::abs(sum - 1.0) <= 1e-9, "type arrival probabilities must sum to 1");
        for (double l : lambda) require(l >= 0.0, "negative arrival probability");
        for (double& l : lambda) l /= sum;
    } else {
        require(!input.weights.empty(), "missing weights");
        weight_rows.push_back(input.weights);
        lambda.push_back(1.0);
    }
    for (const auto& row : weight_rows) {
        require(static_cast<int>(row.size()) == n, "weights length differs from prices");
        for (double v : row) require(v > 0.0, "non-positive weight");
    }

    // Stable sort by descending price; ties keep the user's order.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return input.prices[a] > input.prices[b]; });
    require(input.prices[order.back()] >= 0.0, "negative price");

    CheckedModel model;
    model.perm = order;
    std::vector<double> prices(n);
    for (int i = 0; i < n; ++i) prices[i] = input.prices[order[i]];
    for (const auto& row : weight_rows) {
        Catalog cat;
        cat.prices = prices;
        cat.weights.resize(n);
        for (int i = 0; i < n; ++i) cat.weights[i] = row[order[i]] / input.v0;
        model.types.types.push_back(std::move(cat));
    }
    model.types.lambda = lambda;
    model.catalog = model.types.types.front();
    model.demand = input.demand;
    if (input.constraint) {
        Constraint c = *input.constraint;
        if (c.kind == Constraint::Kind::Budget) {
            require(static_cast<int>(c.b.size()) == n, "budget weights length differs from prices");
            std::vector<double> b(n);
            for (int i = 0; i < n; ++i) b[i] = c.b[order[i]];
            c.b = std::move(b);
        }
        model.constraint = c;
    }
    return model;
}

}  // namespace assortflow
