#include "assortflow/da_planner.hpp"

#include <algorithm>
#include <cmath>

namespace assortflow {

namespace {

double surrogate(const Catalog& catalog, const InventoryVector& c, double T, double y0bar) {
    return knapsack_fixed_y0(catalog, c, T, y0bar).value;
}

InventoryVector greedy_cardinality(const Catalog& catalog, int K, double T, double y0bar) {
    const int n = catalog.n();
    InventoryVector c(n, 0);
    double current = 0.0;
    for (int round = 0; round < K; ++round) {
        int best = 0;
        double best_gain = -1.0;
        for (int i = 0; i < n; ++i) {
            ++c[i];
            double gain = surrogate(catalog, c, T, y0bar) - current;
            --c[i];
            if (gain > best_gain + 1e-12) {
                best_gain = gain;
                best = i;
            }
        }
        ++c[best];
        current += best_gain;
    }
    return c;
}

InventoryVector greedy_budget(const Catalog& catalog, const Constraint& cons, double T,
                              double y0bar) {
    const int n = catalog.n();
    InventoryVector c(n, 0);
    double spent = 0.0;
    double current = 0.0;
    for (;;) {
        int best = -1;
        double best_rate = 1e-12;
        double best_gain = 0.0;
        for (int i = 0; i < n; ++i) {
            if (spent + cons.b[i] > cons.B + 1e-9) continue;
            ++c[i];
            double gain = surrogate(catalog, c, T, y0bar) - current;
            --c[i];
            double rate = gain / cons.b[i];
            if (rate > best_rate + 1e-12) {
                best_rate = rate;
                best = i;
                best_gain = gain;
            }
        }
        if (best < 0) break;
        ++c[best];
        spent += cons.b[best];
        current += best_gain;
    }
    // Guard against a single expensive unit beating the whole greedy run.
    int best_single = -1;
    double best_single_val = current;
    for (int i = 0; i < n; ++i) {
        if (cons.b[i] > cons.B + 1e-9) continue;
        InventoryVector e(n, 0);
        e[i] = 1;
        double val = surrogate(catalog, e, T, y0bar);
        if (val > best_single_val + 1e-12) {
            best_single_val = val;
            best_single = i;
        }
    }
    if (best_single >= 0) {
        InventoryVector e(n, 0);
        e[best_single] = 1;
        return e;
    }
    return c;
}

}  // namespace

InventoryVector greedy_surrogate_max(const Catalog& catalog, const Constraint& constraint,
                                     double T, double y0bar) {
    if (constraint.kind == Constraint::Kind::Cardinality) {
        return greedy_cardinality(catalog, constraint.K, T, y0bar);
    }
    return greedy_budget(catalog, constraint, T, y0bar);
}

DaFluidResult optimize_da_fluid(const Catalog& catalog, const Constraint& constraint, double T,
                                double eps) {
    require(eps > 0.0 && eps < 1.0, "epsilon must be in (0,1)");
    require(T > 0.0, "horizon must be > 0");
    int grid_len = 1;
    if (T > eps) {
        grid_len = std::max(1, static_cast<int>(std::ceil(std::log(T / eps) /
                                                          std::log(1.0 + eps))));
    }
    DaFluidResult best;
    double best_g = -1.0;
    double prev_y0 = -1.0;
    for (int u = 0; u < grid_len; ++u) {
        double y0 = std::min(T, eps * std::pow(1.0 + eps, u));
        if (y0 == prev_y0) break;
        prev_y0 = y0;
        InventoryVector c = greedy_surrogate_max(catalog, constraint, T, y0);
        double g = surrogate(catalog, c, T, y0);
        if (g > best_g + 1e-12) {
            best_g = g;
            best.inventory = std::move(c);
            best.chosen_y0 = y0;
            best.grid_index = u;
        }
    }
    best.objective = solve_sblp_fast(catalog, best.inventory, T).solution.objective;
    return best;
}

InventoryVector transform_round_bad(const Catalog& catalog, const InventoryVector& c_fluid,
                                    double T, const Constraint* constraint,
                                    std::string* direction) {
    require(T > 0.0, "horizon must be > 0");
    SblpFastResult fast = solve_sblp_fast(catalog, c_fluid, T);
    const FractionalInventory& x = fast.ordered.x;
    const int n = catalog.n();

    InventoryVector down(n, 0);
    int frac = -1;
    for (int i = 0; i < n; ++i) {
        double fl = std::floor(x[i]);
        down[i] = static_cast<int>(fl);
        if (x[i] - fl > 1e-12 && 1.0 - (x[i] - fl) > 1e-12) frac = i;
    }
    if (frac < 0) {
        for (int i = 0; i < n; ++i) down[i] = static_cast<int>(std::llround(x[i]));
        if (direction) *direction = "none";
        return down;
    }

    InventoryVector up = down;
    up[frac] += 1;
    bool up_ok = (constraint == nullptr) || constraint->feasible(up);
    double rev_down = fp_revenue(catalog, FractionalInventory(down.begin(), down.end()), T);
    double rev_up = up_ok
                        ? fp_revenue(catalog, FractionalInventory(up.begin(), up.end()), T)
                        : -1.0;
    if (up_ok && rev_up >= rev_down) {
        if (direction) *direction = "up";
        return up;
    }
    if (direction) *direction = "down";
    return down;
}

InventoryVector static_fallback_inventory(const Catalog& catalog, const Constraint& constraint) {
    const int n = catalog.n();
    Assortment all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    Assortment chosen;
    if (constraint.kind == Constraint::Kind::Cardinality) {
        chosen = optimal_static_assortment(catalog, all, constraint.K);
    } else {
        // Best revenue-ordered prefix whose unit weights fit the budget;
        // products that can never fit are skipped outright.
        Assortment affordable;
        double spent = 0.0;
        double best = 0.0;
        std::size_t best_len = 0;
        double denom = 1.0, num = 0.0;
        for (int i = 0; i < n; ++i) {
            if (constraint.b[i] > constraint.B + 1e-9) continue;
            if (spent + constraint.b[i] > constraint.B + 1e-9) break;
            spent += constraint.b[i];
            affordable.push_back(i);
            denom += catalog.weights[i];
            num += catalog.prices[i] * catalog.weights[i];
            if (num / denom > best + 1e-12) {
                best = num / denom;
                best_len = affordable.size();
            }
        }
        chosen.assign(affordable.begin(), affordable.begin() + best_len);
    }
    InventoryVector c(n, 0);
    for (int i : chosen) c[i] = 1;
    return c;
}

DaPlan solve_da(const Catalog& catalog, const Constraint& constraint,
                const DemandDistribution& demand, double eps) {
    if (!demand.is_deterministic() && !is_ifr(demand)) {
        throw UnsupportedError("DA requires IFR demand");
    }
    const bool deterministic = demand.is_deterministic();
    const double horizon = deterministic ? demand.deterministic_value() : demand.mean;
    const double threshold = deterministic ? 4.0 : 5.15;

    DaPlan plan;
    if (horizon < threshold) {
        plan.inventory = static_fallback_inventory(catalog, constraint);
        plan.fallback_used = true;
    } else {
        DaFluidResult fluid = optimize_da_fluid(catalog, constraint, horizon, eps);
        plan.inventory =
            transform_round_bad(catalog, fluid.inventory, horizon, &constraint, &plan.rounding);
        plan.chosen_y0 = fluid.chosen_y0;
        plan.grid_index = fluid.grid_index;
    }
    plan.fluid_objective =
        horizon > 0.0 ? solve_sblp_fast(catalog, plan.inventory, horizon).solution.objective : 0.0;
    return plan;
}

}  // namespace assortflow
