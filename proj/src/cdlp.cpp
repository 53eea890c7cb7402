#include "assortflow/cdlp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "assortflow/simplex.hpp"

namespace assortflow {

namespace {

constexpr double kTieTol = 1e-12;

FractionalInventory to_fractional(const InventoryVector& c) {
    FractionalInventory x(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        require(c[i] >= 0, "negative inventory");
        x[i] = c[i];
    }
    return x;
}

double snap_integral(double v) {
    double r = std::round(v);
    return (std::abs(v - r) <= kTieTol) ? r : v;
}

}  // namespace

KnapsackResult knapsack_fixed_y0(const Catalog& catalog, const FractionalInventory& caps,
                                 double T, double y0bar) {
    require(y0bar >= 0.0 && y0bar <= T, "fixed y0 outside [0, T]");
    KnapsackResult res;
    res.sales.assign(catalog.n(), 0.0);
    double budget = T - y0bar;
    for (int i = 0; i < catalog.n() && budget > 0.0; ++i) {
        double cap = std::min(caps[i], y0bar * catalog.weights[i]);
        double take = std::min(cap, budget);
        if (take <= 0.0) continue;
        res.sales[i] = take;
        res.value += catalog.prices[i] * take;
        budget -= take;
    }
    return res;
}

KnapsackResult knapsack_fixed_y0(const Catalog& catalog, const InventoryVector& c, double T,
                                 double y0bar) {
    return knapsack_fixed_y0(catalog, to_fractional(c), T, y0bar);
}

SblpFastResult solve_sblp_fast(const Catalog& catalog, const FractionalInventory& caps,
                               double T) {
    const int n = catalog.n();
    require(static_cast<int>(caps.size()) == n, "inventory length differs from catalog");

    SblpFastResult res;
    res.ordered.x.assign(n, 0.0);
    if (T <= 0.0 || n == 0) {
        res.trace = sequence(catalog, res.ordered.x, std::max(0.0, T));
        res.solution.sales = res.trace.consumption;
        return res;
    }

    // Stocked products in depletion-clock order; the order is shared by every
    // prefix, so each probe below is a single linear walk.
    std::vector<int> order;
    for (int i = 0; i < n; ++i) {
        require(caps[i] >= 0.0, "negative inventory");
        if (caps[i] > 0.0) order.push_back(i);
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return caps[a] / catalog.weights[a] < caps[b] / catalog.weights[b];
    });
    if (order.empty()) {
        res.trace = sequence(catalog, res.ordered.x, T);
        res.solution.sales = res.trace.consumption;
        res.solution.no_purchase = res.trace.outside_consumption;
        return res;
    }

    std::vector<double> pref_w(n + 1, 0.0), pref_rv(n + 1, 0.0);
    for (int i = 0; i < n; ++i) {
        double w = (caps[i] > 0.0) ? catalog.weights[i] : 0.0;
        pref_w[i + 1] = pref_w[i] + w;
        pref_rv[i + 1] = pref_rv[i] + catalog.prices[i] * w;
    }

    // Walks the fluid process of the prefix inventory (caps_0..caps_{k-1},0,..)
    // and feeds each phase (duration, revenue rate) to the callback. Returns
    // the final outside consumption.
    auto walk_prefix = [&](int k, const std::function<void(double, double)>& on_phase) {
        double active = 1.0 + pref_w[k];
        double value = pref_rv[k];
        double z0 = 0.0, used = 0.0;
        for (int idx : order) {
            if (idx >= k) continue;
            double w = caps[idx] / catalog.weights[idx];
            double seg = (w - z0) * active;
            if (used + seg >= T) {
                double dz = (T - used) / active;
                on_phase(T - used, value / active);
                return z0 + dz;
            }
            if (seg > 0.0) on_phase(seg, value / active);
            used += seg;
            z0 = w;
            active -= catalog.weights[idx];
            value -= catalog.prices[idx] * catalog.weights[idx];
        }
        if (T - used > 0.0) on_phase(T - used, 0.0);
        return z0 + (T - used);
    };

    auto terminal_revenue = [&](int k) {
        double rev = 0.0;
        walk_prefix(k, [&](double, double r) { rev = r; });
        return rev;
    };

    // Largest index whose price still clears the terminal revenue of the
    // process stocked with everything priced above it; ties count as include.
    int lo = 1, hi = n;
    while (lo < hi) {
        int mid = lo + (hi - lo + 1) / 2;
        if (catalog.prices[mid - 1] >= terminal_revenue(mid - 1) - kTieTol) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    const int d = lo - 1;  // 0-based threshold product

    // Replaceable tail time of the process without product d: phases whose
    // revenue rate is strictly below r_d.
    double tail = 0.0;
    walk_prefix(d, [&](double dur, double r) {
        if (catalog.prices[d] - r > kTieTol) tail += dur;
    });
    double z0_with_d = walk_prefix(d + 1, [](double, double) {});
    double consumable = std::min(caps[d], catalog.weights[d] * z0_with_d);
    double xd = snap_integral(std::clamp(std::min(tail, consumable), 0.0, caps[d]));

    res.ordered.threshold_index = d;
    for (int i = 0; i < d; ++i) res.ordered.x[i] = caps[i];
    res.ordered.x[d] = xd;

    res.trace = sequence(catalog, res.ordered.x, T);
    res.solution.sales = res.trace.consumption;
    res.solution.no_purchase = res.trace.outside_consumption;
    res.solution.objective = res.trace.revenue;
    return res;
}

SblpFastResult solve_sblp_fast(const Catalog& catalog, const InventoryVector& c, double T) {
    return solve_sblp_fast(catalog, to_fractional(c), T);
}

double single_type_reference(const Catalog& catalog, const InventoryVector& c, double T) {
    if (T <= 0.0) return 0.0;
    FractionalInventory caps = to_fractional(c);
    auto g = [&](double y0) { return knapsack_fixed_y0(catalog, caps, T, y0).value; };

    double a = 0.0, b = T;
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
    double f1 = g(x1), f2 = g(x2);
    double best = std::max(f1, f2);
    while (b - a > 1e-10) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = g(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = g(x1);
        }
        best = std::max({best, f1, f2});
    }
    return std::max(best, g(0.5 * (a + b)));
}

double multi_type_fhat(const CustomerTypeSet& types, const std::vector<FractionalInventory>& rows,
                       double T) {
    require(static_cast<int>(rows.size()) == types.m(), "allocation rows != type count");
    double total = 0.0;
    for (int k = 0; k < types.m(); ++k) {
        double horizon = types.lambda[k] * T;
        if (horizon <= 0.0) continue;
        total += solve_sblp_fast(types.types[k], rows[k], horizon).solution.objective;
    }
    return total;
}

MultiTypeLpResult multi_type_sblp_reference(const CustomerTypeSet& types,
                                            const FractionalInventory& c, double T) {
    const int m = types.m();
    const int n = types.n();
    require(m * n <= 512, "multi-type reference LP limited to desk scale");
    require(static_cast<int>(c.size()) == n, "inventory length differs from catalog");

    const int vars = m * n + m;  // y_{ki} then y_{k0}
    auto yki = [&](int k, int i) { return k * n + i; };
    auto yk0 = [&](int k) { return m * n + k; };

    std::vector<std::vector<double>> A;
    std::vector<double> b;
    for (int i = 0; i < n; ++i) {
        std::vector<double> row(vars, 0.0);
        for (int k = 0; k < m; ++k) row[yki(k, i)] = 1.0;
        A.push_back(std::move(row));
        b.push_back(std::max(0.0, c[i]));
    }
    for (int k = 0; k < m; ++k) {
        std::vector<double> row(vars, 0.0);
        for (int i = 0; i < n; ++i) row[yki(k, i)] = 1.0;
        row[yk0(k)] = 1.0;
        A.push_back(std::move(row));
        b.push_back(types.lambda[k] * T);
    }
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i < n; ++i) {
            std::vector<double> row(vars, 0.0);
            row[yki(k, i)] = 1.0;
            row[yk0(k)] = -types.types[k].weights[i];
            A.push_back(std::move(row));
            b.push_back(0.0);
        }
    }
    std::vector<double> obj(vars, 0.0);
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < n; ++i) obj[yki(k, i)] = types.types[k].prices[i];

    LpResult lp = simplex_maximize(A, b, obj);

    MultiTypeLpResult res;
    res.objective = lp.objective;
    res.sales.assign(m, FractionalInventory(n, 0.0));
    res.no_purchase.assign(m, 0.0);
    for (int k = 0; k < m; ++k) {
        double used = 0.0;
        for (int i = 0; i < n; ++i) {
            res.sales[k][i] = lp.x[yki(k, i)];
            used += res.sales[k][i];
        }
        // Lift y_{k0} to the slack so the per-type balance holds with equality.
        res.no_purchase[k] = types.lambda[k] * T - used;
    }
    return res;
}

MultiTypeLpResult multi_type_sblp_reference(const CustomerTypeSet& types, const InventoryVector& c,
                                            double T) {
    return multi_type_sblp_reference(types, to_fractional(c), T);
}

}  // namespace assortflow
