#include "assortflow/dap_planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace assortflow {

namespace {

struct Segment {
    double width;
    double rate;
    int type;
};

// Replaceable tail segments of every type's current fluid trace, most
// valuable first. Adding units of product i converts tail time into pure
// product-i sales; the conversion is capped per type by how much extra i the
// type can absorb.
struct BenefitCurve {
    std::vector<Segment> segments;

    double eval(double z) const {
        double gain = 0.0;
        for (const Segment& s : segments) {
            if (z <= 0.0) break;
            double take = std::min(z, s.width);
            gain += take * s.rate;
            z -= take;
        }
        return gain;
    }

    FractionalInventory split(double z, int m) const {
        FractionalInventory by_type(m, 0.0);
        double left = z;
        for (const Segment& s : segments) {
            if (left <= 0.0) break;
            double take = std::min(left, s.width);
            by_type[s.type] += take;
            left -= take;
        }
        // Surplus beyond total absorbable capacity cannot sell; it is parked
        // on the first type so column sums still match the integer inventory.
        if (left > 0.0 && m > 0) by_type[0] += left;
        return by_type;
    }
};

BenefitCurve build_curve(const CustomerTypeSet& types, const AllocationRows& rows, int i,
                         double T) {
    BenefitCurve curve;
    const double ri = types.types.front().prices[i];
    for (int k = 0; k < types.m(); ++k) {
        const Catalog& cat = types.types[k];
        double horizon = types.lambda[k] * T;
        if (horizon <= 0.0) continue;
        SblpFastResult cur = solve_sblp_fast(cat, rows[k], horizon);

        // Absorbable extra units of i: re-solve with the cap on i removed
        // (the horizon itself bounds sales).
        FractionalInventory relaxed = rows[k];
        relaxed[i] = horizon;
        SblpFastResult lim = solve_sblp_fast(cat, relaxed, horizon);
        double beta = std::max(0.0, lim.solution.sales[i] - cur.solution.sales[i]);
        if (beta <= 1e-15) continue;

        const auto& phases = cur.trace.phases;
        double budget = beta;
        for (auto it = phases.rbegin(); it != phases.rend() && budget > 1e-15; ++it) {
            double rate = ri - it->revenue_rate;
            if (rate <= 1e-12) break;
            double width = std::min(it->duration, budget);
            curve.segments.push_back({width, rate, k});
            budget -= width;
        }
    }
    std::stable_sort(curve.segments.begin(), curve.segments.end(),
                     [](const Segment& a, const Segment& b) { return a.rate > b.rate; });
    return curve;
}

int stochastic_get_number(const std::vector<BenefitCurve>& curves,
                          const std::vector<double>& probs, double tau_unit, int cap) {
    auto expected_gain = [&](int z) {
        double g = 0.0;
        for (std::size_t t = 0; t < curves.size(); ++t) g += probs[t] * curves[t].eval(z);
        return g;
    };
    // Units beyond what any horizon can absorb never sell; don't spend the
    // constraint on them even when the pooled benefit still clears z * tau.
    double absorbable = 0.0;
    for (const BenefitCurve& c : curves) {
        double w = 0.0;
        for (const Segment& s : c.segments) w += s.width;
        absorbable = std::max(absorbable, w);
    }
    int hi = std::min<long>(cap, static_cast<long>(std::ceil(absorbable - 1e-12)));
    int lo = 0;
    while (lo < hi) {
        int mid = lo + (hi - lo + 1) / 2;
        if (expected_gain(mid) >= mid * tau_unit - 1e-12) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

}  // namespace

BenefitResult calculate_benefit(const CustomerTypeSet& types, const AllocationRows& rows, int z,
                                int i, double T) {
    require(z >= 1, "z must be >= 1");
    require(i >= 0 && i < types.n(), "product index out of range");
    BenefitCurve curve = build_curve(types, rows, i, T);
    BenefitResult res;
    res.gain = curve.eval(z);
    res.by_type = curve.split(z, types.m());
    return res;
}

GetNumberResult get_number(const CustomerTypeSet& types, const AllocationRows& rows,
                           double tau_unit, int cap, int i, double T) {
    require(tau_unit > 0.0, "threshold must be > 0");
    GetNumberResult res;
    res.by_type.assign(types.m(), 0.0);
    if (cap <= 0) return res;
    BenefitCurve curve = build_curve(types, rows, i, T);
    std::vector<BenefitCurve> one{curve};
    res.units = stochastic_get_number(one, {1.0}, tau_unit, cap);
    if (res.units > 0) res.by_type = curve.split(res.units, types.m());
    return res;
}

ThresholdAddResult threshold_add(const CustomerTypeSet& types, const Constraint& constraint,
                                 double tau, const DemandDistribution& demand) {
    require(tau > 0.0, "threshold must be > 0");
    const int n = types.n();
    const int m = types.m();

    ThresholdAddResult out;
    out.inventory.assign(n, 0);
    for (int t = 0; t <= demand.t_max; ++t) {
        if (demand.pmf[t] <= 0.0) continue;
        out.support.push_back(t);
        out.support_prob.push_back(demand.pmf[t]);
        out.allocations.emplace_back(m, FractionalInventory(n, 0.0));
    }

    long total_units = 0;
    double spent = 0.0;
    for (int i = 0; i < n; ++i) {
        int cap = 0;
        double tau_unit = tau;
        if (constraint.kind == Constraint::Kind::Cardinality) {
            cap = constraint.K - static_cast<int>(total_units);
        } else {
            if (constraint.b[i] > constraint.B + 1e-9) continue;
            cap = static_cast<int>(std::floor((constraint.B - spent) / constraint.b[i] + 1e-9));
            tau_unit = constraint.b[i] * tau;
        }
        if (cap <= 0) continue;

        std::vector<BenefitCurve> curves;
        curves.reserve(out.support.size());
        for (std::size_t t = 0; t < out.support.size(); ++t) {
            if (out.support[t] == 0) {
                curves.emplace_back();
            } else {
                curves.push_back(build_curve(types, out.allocations[t], i, out.support[t]));
            }
        }
        int z = stochastic_get_number(curves, out.support_prob, tau_unit, cap);
        if (z <= 0) continue;

        out.inventory[i] += z;
        total_units += z;
        spent += (constraint.kind == Constraint::Kind::Budget) ? constraint.b[i] * z : 0.0;
        for (std::size_t t = 0; t < out.support.size(); ++t) {
            FractionalInventory inc = curves[t].split(z, m);
            for (int k = 0; k < m; ++k) out.allocations[t][k][i] += inc[k];
        }
    }
    return out;
}

double dap_expected_fhat(const CustomerTypeSet& types, const ThresholdAddResult& plan) {
    double total = 0.0;
    for (std::size_t t = 0; t < plan.support.size(); ++t) {
        if (plan.support[t] == 0) continue;
        total += plan.support_prob[t] *
                 multi_type_fhat(types, plan.allocations[t], plan.support[t]);
    }
    return total;
}

DapPlan optimize_dap(const CustomerTypeSet& types, const Constraint& constraint,
                     const DemandDistribution& demand, double eps) {
    require(eps > 0.0 && eps < 1.0, "epsilon must be in (0,1)");
    const int n = types.n();

    // E_T of the best one-unit value per product; sets the threshold grid.
    std::vector<double> singleton(n, 0.0);
    AllocationRows empty(types.m(), FractionalInventory(n, 0.0));
    for (int i = 0; i < n; ++i) {
        if (constraint.kind == Constraint::Kind::Budget && constraint.b[i] > constraint.B + 1e-9)
            continue;
        for (int t = 0; t <= demand.t_max; ++t) {
            if (demand.pmf[t] <= 0.0 || t == 0) continue;
            singleton[i] += demand.pmf[t] * calculate_benefit(types, empty, 1, i, t).gain;
        }
    }
    double top = *std::max_element(singleton.begin(), singleton.end());

    DapPlan plan;
    plan.inventory.assign(n, 0);
    if (top <= 1e-15) return plan;

    double tau1;
    int grid_len;
    if (constraint.kind == Constraint::Kind::Cardinality) {
        if (constraint.K <= 0) return plan;
        tau1 = top / constraint.K;
        grid_len = std::max(1, static_cast<int>(std::ceil(std::log(constraint.K) /
                                                          std::log(1.0 + eps))));
    } else {
        tau1 = top / constraint.B;
        double min_b = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            if (constraint.b[i] <= constraint.B + 1e-9) min_b = std::min(min_b, constraint.b[i]);
        }
        if (!std::isfinite(min_b)) return plan;
        grid_len = std::max(1, static_cast<int>(std::ceil(
                                   std::log(constraint.B / min_b) / std::log(1.0 + eps))));
    }

    double best = -1.0;
    for (int u = 0; u < grid_len; ++u) {
        double tau = tau1 * std::pow(1.0 + eps, u);
        ThresholdAddResult cand = threshold_add(types, constraint, tau, demand);
        double val = dap_expected_fhat(types, cand);
        if (val > best + 1e-12) {
            best = val;
            plan.inventory = cand.inventory;
            plan.support = cand.support;
            plan.support_prob = cand.support_prob;
            plan.allocations = cand.allocations;
            plan.fhat = val;
            plan.chosen_tau = tau;
            plan.grid_index = u;
        }
    }

    if (constraint.kind == Constraint::Kind::Budget) {
        for (int i = 0; i < n; ++i) {
            if (constraint.b[i] > constraint.B + 1e-9 || singleton[i] <= best + 1e-12) continue;
            ThresholdAddResult cand;
            cand.inventory.assign(n, 0);
            cand.inventory[i] = 1;
            for (int t = 0; t <= demand.t_max; ++t) {
                if (demand.pmf[t] <= 0.0) continue;
                cand.support.push_back(t);
                cand.support_prob.push_back(demand.pmf[t]);
                AllocationRows rows(types.m(), FractionalInventory(n, 0.0));
                if (t > 0) {
                    auto ben = calculate_benefit(types, empty, 1, i, t);
                    for (int k = 0; k < types.m(); ++k) rows[k][i] = ben.by_type[k];
                } else {
                    rows[0][i] = 1.0;
                }
                cand.allocations.push_back(std::move(rows));
            }
            double val = dap_expected_fhat(types, cand);
            if (val > best + 1e-12) {
                best = val;
                plan.inventory = cand.inventory;
                plan.support = cand.support;
                plan.support_prob = cand.support_prob;
                plan.allocations = cand.allocations;
                plan.fhat = val;
                plan.chosen_tau = 0.0;
                plan.grid_index = -1;
            }
        }
    }
    return plan;
}

}  // namespace assortflow
