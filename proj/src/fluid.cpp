#include "assortflow/fluid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace assortflow {

namespace {

constexpr double kSnap = 1e-12;  // simultaneous-stockout merge tolerance

}  // namespace

Assortment FluidTrace::phase_assortment(std::size_t l) const {
    const FluidPhase& ph = phases[l];
    Assortment gone(depletion_order.begin(), depletion_order.begin() + ph.depleted_before);
    std::sort(gone.begin(), gone.end());
    Assortment s;
    std::set_difference(stocked.begin(), stocked.end(), gone.begin(), gone.end(),
                        std::back_inserter(s));
    return s;
}

FluidTrace sequence(const Catalog& catalog, const FractionalInventory& x, double T) {
    const int n = catalog.n();
    require(static_cast<int>(x.size()) == n, "inventory length differs from catalog");
    FluidTrace tr;
    tr.horizon = std::max(0.0, T);
    tr.consumption.assign(n, 0.0);

    double weight_sum = 1.0;   // v0 + stocked weights
    double value_sum = 0.0;    // sum r_i v_i over stocked
    for (int i = 0; i < n; ++i) {
        require(x[i] >= 0.0, "negative fluid inventory");
        if (x[i] > 0.0) {
            tr.stocked.push_back(i);
            weight_sum += catalog.weights[i];
            value_sum += catalog.prices[i] * catalog.weights[i];
        }
    }
    if (tr.horizon <= 0.0) return tr;

    // Depletion order in the outside-consumption clock: product i leaves when
    // Z0 reaches x_i / v_i, independent of which phase it happens in.
    std::vector<int> order = tr.stocked;
    auto clock = [&](int i) { return x[i] / catalog.weights[i]; };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return clock(a) < clock(b); });

    double z0 = 0.0;
    double time_used = 0.0;
    std::size_t next = 0;
    const double drop = 1e-15 * std::max(1.0, tr.horizon);
    while (next < order.size()) {
        double w = clock(order[next]);
        std::size_t group_end = next;
        while (group_end < order.size() &&
               clock(order[group_end]) <= w + kSnap * std::max(1.0, w)) {
            ++group_end;
        }
        double dt = (w - z0) * weight_sum;
        if (time_used + dt > tr.horizon - drop) break;
        if (dt > drop) {
            tr.phases.push_back({dt, value_sum / weight_sum, static_cast<int>(next)});
        }
        time_used += dt;
        z0 = w;
        for (std::size_t g = next; g < group_end; ++g) {
            int i = order[g];
            weight_sum -= catalog.weights[i];
            value_sum -= catalog.prices[i] * catalog.weights[i];
            tr.depletion_order.push_back(i);
        }
        next = group_end;
    }
    double remaining = tr.horizon - time_used;
    if (remaining > drop) {
        tr.phases.push_back({remaining, std::max(0.0, value_sum) / weight_sum,
                             static_cast<int>(tr.depletion_order.size())});
        z0 += remaining / weight_sum;
    }

    tr.outside_consumption = z0;
    for (int i : tr.stocked) {
        tr.consumption[i] = std::min(x[i], catalog.weights[i] * z0);
        tr.revenue += catalog.prices[i] * tr.consumption[i];
    }
    return tr;
}

double fp_revenue(const Catalog& catalog, const FractionalInventory& x, double T) {
    return sequence(catalog, x, T).revenue;
}

FractionalInventory fp_consumption(const Catalog& catalog, const FractionalInventory& x,
                                   double T) {
    return sequence(catalog, x, T).consumption;
}

double solve_outside_mass(const Catalog& catalog, const FractionalInventory& x, double T,
                          double extra_weight) {
    if (T <= 0.0) return 0.0;
    const int n = catalog.n();
    std::vector<int> stocked;
    double active = 1.0 + extra_weight;
    for (int i = 0; i < n; ++i) {
        if (x[i] > 0.0) {
            stocked.push_back(i);
            active += catalog.weights[i];
        }
    }
    std::sort(stocked.begin(), stocked.end(),
              [&](int a, int b) { return x[a] / catalog.weights[a] < x[b] / catalog.weights[b]; });

    double mass = 0.0;  // total consumed at clock z0
    double z0 = 0.0;
    for (int i : stocked) {
        double w = x[i] / catalog.weights[i];
        double seg = (w - z0) * active;
        if (mass + seg >= T) return z0 + (T - mass) / active;
        mass += seg;
        z0 = w;
        active -= catalog.weights[i];
    }
    return z0 + (T - mass) / active;
}

SeparabilityCheck separability_decompose(const Catalog& catalog, const FractionalInventory& x,
                                         double delta, int i, double T) {
    require(i >= 0 && i < catalog.n(), "product index out of range");
    require(delta >= 0.0, "delta must be >= 0");
    FractionalInventory bumped = x;
    bumped[i] += delta;
    FluidTrace grown = sequence(catalog, bumped, T);
    FluidTrace base = sequence(catalog, x, T);
    double alpha = grown.consumption[i] - base.consumption[i];

    FluidTrace truncated = sequence(catalog, x, std::max(0.0, T - alpha));
    double residual =
        std::abs(grown.revenue - (truncated.revenue + alpha * catalog.prices[i]));
    for (int j = 0; j < catalog.n(); ++j) {
        double want = (j == i) ? alpha + truncated.consumption[j] : truncated.consumption[j];
        residual = std::max(residual, std::abs(grown.consumption[j] - want));
    }
    return {alpha, residual};
}

}  // namespace assortflow
