#include "assortflow/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>

#include "assortflow/bounds.hpp"
#include "assortflow/cdlp.hpp"
#include "assortflow/da_planner.hpp"
#include "assortflow/dap_planner.hpp"
#include "assortflow/fluid.hpp"
#include "assortflow/policies.hpp"
#include "assortflow/simulator.hpp"

namespace assortflow::verify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

double unif(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int unif_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Catalog random_catalog(std::mt19937_64& rng, int n, double price_lo = 0.5,
                       double price_hi = 10.0) {
    std::vector<double> prices(n), weights(n);
    for (int i = 0; i < n; ++i) {
        prices[i] = unif(rng, price_lo, price_hi);
        weights[i] = unif(rng, 0.1, 4.0);
    }
    std::sort(prices.rbegin(), prices.rend());
    return Catalog{prices, weights};
}

CustomerTypeSet random_types(std::mt19937_64& rng, int m, int n) {
    CustomerTypeSet ts;
    std::vector<double> prices(n);
    for (int i = 0; i < n; ++i) prices[i] = unif(rng, 0.5, 10.0);
    std::sort(prices.rbegin(), prices.rend());
    double lsum = 0.0;
    for (int k = 0; k < m; ++k) {
        Catalog cat;
        cat.prices = prices;
        cat.weights.resize(n);
        for (int i = 0; i < n; ++i) cat.weights[i] = unif(rng, 0.1, 4.0);
        ts.types.push_back(std::move(cat));
        double l = unif(rng, 0.2, 1.0);
        ts.lambda.push_back(l);
        lsum += l;
    }
    for (double& l : ts.lambda) l /= lsum;
    return ts;
}

double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

// All integer inventories with ||c||_1 <= K.
void enumerate_inventories(int n, int K, const std::function<void(const InventoryVector&)>& fn) {
    InventoryVector c(n, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n) {
            fn(c);
            return;
        }
        for (int u = 0; u <= left; ++u) {
            c[i] = u;
            rec(i + 1, left - u);
        }
        c[i] = 0;
    };
    rec(0, K);
}

// All integer inventories with sum b_i c_i <= B.
void enumerate_budget_inventories(int n, double B, const std::vector<double>& b,
                                  const std::function<void(const InventoryVector&)>& fn) {
    InventoryVector c(n, 0);
    std::function<void(int, double)> rec = [&](int i, double left) {
        if (i == n) {
            fn(c);
            return;
        }
        int cap = static_cast<int>(std::floor(left / b[i] + 1e-9));
        for (int u = 0; u <= cap; ++u) {
            c[i] = u;
            rec(i + 1, left - b[i] * u);
        }
        c[i] = 0;
    };
    rec(0, B);
}

}  // namespace

std::vector<CheckLine> check_cdlp(long trials, uint64_t seed) {
    auto t0 = Clock::now();
    double worst_ref = 0.0, worst_lp = 0.0, worst_structure = 0.0, worst_equiv = 0.0;
    for (long t = 0; t < trials; ++t) {
        std::mt19937_64 rng = rng_stream(seed, 1000 + t);
        int n = unif_int(rng, 1, 10);
        Catalog cat = random_catalog(rng, n);
        InventoryVector c(n);
        for (int i = 0; i < n; ++i) c[i] = unif_int(rng, 0, 10);
        double T = unif(rng, 0.5, 20.0);

        SblpFastResult fast = solve_sblp_fast(cat, c, T);
        double ref = single_type_reference(cat, c, T);
        worst_ref = std::max(worst_ref, rel_diff(fast.solution.objective, ref));

        CustomerTypeSet one;
        one.types.push_back(cat);
        one.lambda.push_back(1.0);
        MultiTypeLpResult lp = multi_type_sblp_reference(one, c, T);
        worst_lp = std::max(worst_lp, rel_diff(fast.solution.objective, lp.objective));

        // Revenue-ordered shape: full prefix, zero suffix, one fractional slot.
        const auto& x = fast.ordered.x;
        int d = fast.ordered.threshold_index;
        int fractional = 0;
        for (int i = 0; i < n; ++i) {
            double err = 0.0;
            if (d < 0 || i > d) {
                err = std::abs(x[i]);
            } else if (i < d) {
                err = std::abs(x[i] - c[i]);
            } else {
                err = std::max(0.0, x[i] - c[i]);
            }
            worst_structure = std::max(worst_structure, err);
            if (std::abs(x[i] - std::round(x[i])) > 1e-9) ++fractional;
        }
        if (fractional > 1) worst_structure = std::max(worst_structure, 1.0);

        double fp = fp_revenue(cat, x, T);
        worst_equiv = std::max(worst_equiv, rel_diff(fp, lp.objective));
    }
    double elapsed = seconds_since(t0);
    return {
        {"cdlp_fast_vs_fixed_y0_oracle", 1e-8 - worst_ref, worst_ref <= 1e-8},
        {"cdlp_fast_vs_reference_lp", 1e-8 - worst_lp, worst_lp <= 1e-8},
        {"cdlp_revenue_ordered_structure", 1e-9 - worst_structure, worst_structure <= 1e-9},
        {"cdlp_fluid_equivalence", 1e-8 - worst_equiv, worst_equiv <= 1e-8},
        {"cdlp_runtime_seconds", 5.0 - elapsed, elapsed < 5.0},
    };
}

std::vector<CheckLine> check_separability(long trials, uint64_t seed) {
    double worst = 0.0;
    for (long t = 0; t < trials; ++t) {
        std::mt19937_64 rng = rng_stream(seed, 2000 + t);
        int n = unif_int(rng, 1, 6);
        Catalog cat = random_catalog(rng, n);
        FractionalInventory x(n);
        for (int i = 0; i < n; ++i) x[i] = (unif(rng, 0, 1) < 0.2) ? 0.0 : unif(rng, 0.0, 4.0);
        int i = unif_int(rng, 0, n - 1);
        double delta = unif(rng, 0.0, 3.0);
        double T = unif(rng, 0.2, 20.0);
        worst = std::max(worst, separability_decompose(cat, x, delta, i, T).residual);
    }
    return {{"separability_residual", 1e-9 - worst, worst < 1e-9}};
}

std::vector<CheckLine> check_submodular_order(long trials, uint64_t seed) {
    // Descending price is the submodular order: the marginal of a unit of i
    // can only shrink once products priced at or above it are present. The
    // added product therefore sits at or after both j and the stocked set.
    double worst = 0.0;
    for (long t = 0; t < trials; ++t) {
        std::mt19937_64 rng = rng_stream(seed, 3000 + t);
        int n = unif_int(rng, 2, 6);
        Catalog cat = random_catalog(rng, n);
        InventoryVector c(n, 0);
        int support_max = unif_int(rng, 0, n - 1);
        for (int k = 0; k <= support_max; ++k) c[k] = unif_int(rng, 0, 4);
        int i = unif_int(rng, support_max, n - 1);
        int j = unif_int(rng, 0, i);
        double T = unif(rng, 0.5, 15.0);

        auto f = [&](InventoryVector v) { return solve_sblp_fast(cat, v, T).solution.objective; };
        InventoryVector ci = c, cj = c, cij = c;
        ci[i] += 1;
        cj[j] += 1;
        cij[i] += 1;
        cij[j] += 1;
        double viol = (f(cij) - f(cj)) - (f(ci) - f(c));
        worst = std::max(worst, viol);
    }
    return {{"submodular_order_violation", 1e-8 - worst, worst <= 1e-8}};
}

std::vector<CheckLine> check_rounding(long trials, uint64_t seed) {
    double worst_margin = std::numeric_limits<double>::infinity();
    for (long t = 0; t < trials; ++t) {
        std::mt19937_64 rng = rng_stream(seed, 4000 + t);
        int n = unif_int(rng, 1, 8);
        Catalog cat = random_catalog(rng, n);
        InventoryVector c(n);
        for (int i = 0; i < n; ++i) c[i] = unif_int(rng, 0, 6);
        int T = (t % 10 == 0) ? 1 : unif_int(rng, 1, 12);  // keep T=1 in the mix

        double flp = solve_sblp_fast(cat, c, T).solution.objective;
        if (flp <= 1e-12) continue;
        InventoryVector rounded = transform_round_bad(cat, c, T);
        double fp = fp_revenue(cat, FractionalInventory(rounded.begin(), rounded.end()), T);
        double ratio = fp / flp;
        double bound = 1.0 - 1.0 / (T + 1.0);
        worst_margin = std::min(worst_margin, ratio - bound + 1e-9);
    }
    return {{"rounding_ratio_vs_bound", worst_margin, worst_margin >= 0.0}};
}

std::vector<CheckLine> check_da_deterministic(int instances, long reps, uint64_t seed,
                                              int threads) {
    auto t0 = Clock::now();
    double worst = std::numeric_limits<double>::infinity();
    double worst_ub = std::numeric_limits<double>::infinity();
    const double eps = 0.05;
    for (int inst = 0; inst < instances; ++inst) {
        std::mt19937_64 rng = rng_stream(seed, 5000 + inst);
        int n = unif_int(rng, 2, 6);
        int K = unif_int(rng, 1, 8);
        int T = unif_int(rng, 4, 12);
        Catalog cat = random_catalog(rng, n, 1.0, 10.0);
        Constraint cons = Constraint::cardinality(K);

        DaPlan plan = solve_da(cat, cons, DemandDistribution::deterministic(T), eps);
        double opt = 0.0;
        enumerate_inventories(n, K, [&](const InventoryVector& c) {
            opt = std::max(opt, solve_sblp_fast(cat, c, T).solution.objective);
        });
        SimResult sim = simulate_da(cat, plan.inventory, DemandDistribution::deterministic(T),
                                    reps, seed + inst, threads);
        worst = std::min(worst, sim.mean + 3.0 * sim.stderr_ - 0.27 * opt);
        double flp_alg = solve_sblp_fast(cat, plan.inventory, T).solution.objective;
        worst_ub = std::min(worst_ub, flp_alg + 3.0 * sim.stderr_ - sim.mean);
    }
    double elapsed = seconds_since(t0);
    return {
        {"da_deterministic_ratio", worst, worst >= 0.0},
        {"da_deterministic_upper_bound", worst_ub, worst_ub >= 0.0},
        {"da_deterministic_runtime_seconds", 120.0 - elapsed, elapsed < 120.0},
    };
}

std::vector<CheckLine> check_da_stochastic(int instances, long reps, uint64_t seed, int threads) {
    double worst = std::numeric_limits<double>::infinity();
    double worst_ub = std::numeric_limits<double>::infinity();
    const double eps = 0.05;
    for (int inst = 0; inst < instances; ++inst) {
        std::mt19937_64 rng = rng_stream(seed, 6000 + inst);
        int n = unif_int(rng, 2, 6);
        int K = unif_int(rng, 1, 8);
        double mu = unif(rng, 6.0, 12.0);
        Catalog cat = random_catalog(rng, n, 1.0, 10.0);
        DemandDistribution demand = (inst % 2 == 0)
                                        ? DemandDistribution::geometric(1.0 / mu)
                                        : DemandDistribution::truncated_poisson(mu);
        Constraint cons = Constraint::cardinality(K);

        DaPlan plan = solve_da(cat, cons, demand, eps);
        double opt = 0.0;
        enumerate_inventories(n, K, [&](const InventoryVector& c) {
            opt = std::max(opt, solve_sblp_fast(cat, c, demand.mean).solution.objective);
        });
        SimResult sim = simulate_da(cat, plan.inventory, demand, reps, seed + inst, threads);
        worst = std::min(worst, sim.mean + 3.0 * sim.stderr_ - 0.14 * opt);
        double flp_alg = solve_sblp_fast(cat, plan.inventory, demand.mean).solution.objective;
        worst_ub = std::min(worst_ub, flp_alg + 3.0 * sim.stderr_ - sim.mean);
    }
    return {
        {"da_ifr_ratio", worst, worst >= 0.0},
        {"da_ifr_upper_bound", worst_ub, worst_ub >= 0.0},
    };
}

std::vector<CheckLine> check_dap_cardinality(int instances, uint64_t seed) {
    double worst = std::numeric_limits<double>::infinity();
    const double eps = 0.05;
    for (int inst = 0; inst < instances; ++inst) {
        std::mt19937_64 rng = rng_stream(seed, 7000 + inst);
        int m = unif_int(rng, 1, 3);
        int n = unif_int(rng, 2, 5);
        int K = unif_int(rng, 1, 6);
        int T = unif_int(rng, 2, 8);
        CustomerTypeSet types = random_types(rng, m, n);

        DapPlan plan = optimize_dap(types, Constraint::cardinality(K),
                                    DemandDistribution::deterministic(T), eps);
        double opt = 0.0;
        enumerate_inventories(n, K, [&](const InventoryVector& c) {
            opt = std::max(opt, multi_type_sblp_reference(types, c, T).objective);
        });
        worst = std::min(worst, plan.fhat - (0.5 - eps) * opt);
    }
    return {{"dap_cardinality_ratio", worst, worst >= 0.0}};
}

std::vector<CheckLine> check_dap_budget(int instances, uint64_t seed) {
    double worst = std::numeric_limits<double>::infinity();
    const double eps = 0.05;
    for (int inst = 0; inst < instances; ++inst) {
        std::mt19937_64 rng = rng_stream(seed, 8000 + inst);
        int m = unif_int(rng, 1, 3);
        int n = unif_int(rng, 2, 5);
        int T = unif_int(rng, 2, 8);
        CustomerTypeSet types = random_types(rng, m, n);
        std::vector<double> b(n);
        double min_b = 2.0;
        for (int i = 0; i < n; ++i) {
            b[i] = unif(rng, 0.5, 2.0);
            min_b = std::min(min_b, b[i]);
        }
        double B = std::max(unif(rng, 1.0, 5.0), 1.05 * min_b);
        Constraint cons = Constraint::budget(B, b);

        DapPlan plan = optimize_dap(types, cons, DemandDistribution::deterministic(T), eps);
        double opt = 0.0;
        enumerate_budget_inventories(n, B, b, [&](const InventoryVector& c) {
            opt = std::max(opt, multi_type_sblp_reference(types, c, T).objective);
        });
        worst = std::min(worst, plan.fhat - (1.0 / 3.0 - eps) * opt);
    }
    return {{"dap_budget_ratio", worst, worst >= 0.0}};
}

std::vector<CheckLine> check_policy_sampling(long reps, uint64_t seed, int threads) {
    double worst = std::numeric_limits<double>::infinity();
    const double factor = 1.0 - std::exp(-1.0);
    for (int inst = 0; inst < 3; ++inst) {
        std::mt19937_64 rng = rng_stream(seed, 9000 + inst);
        int m = unif_int(rng, 1, 2);
        int n = unif_int(rng, 2, 4);
        int T = 6;
        CustomerTypeSet types = random_types(rng, m, n);
        InventoryVector c(n);
        for (int i = 0; i < n; ++i) c[i] = unif_int(rng, 1, 3);

        double lp = multi_type_sblp_reference(types, c, T).objective;
        SamplingPolicy pol = build_sampling_policy(types, c, T);
        SimResult sim = simulate_dap(types, c, PolicySpec::sampling_from(pol),
                                     DemandDistribution::deterministic(T), reps, seed + inst,
                                     threads);
        worst = std::min(worst, sim.mean + 3.0 * sim.stderr_ - factor * lp);
    }
    return {{"policy_sampling_ratio", worst, worst >= 0.0}};
}

std::vector<CheckLine> check_policy_greedy(long reps, uint64_t seed, int threads) {
    double worst = std::numeric_limits<double>::infinity();
    for (int inst = 0; inst < 3; ++inst) {
        std::mt19937_64 rng = rng_stream(seed, 9500 + inst);
        int m = unif_int(rng, 1, 2);
        int n = unif_int(rng, 2, 4);
        CustomerTypeSet types = random_types(rng, m, n);
        InventoryVector c(n);
        for (int i = 0; i < n; ++i) c[i] = unif_int(rng, 1, 4);

        std::vector<double> pmf(101, 0.0);
        pmf[1] = 0.9;
        pmf[100] = 0.1;
        DemandDistribution demand = DemandDistribution::finite_pmf(pmf);
        double elp = 0.0;
        for (int t : {1, 100}) {
            elp += demand.pmf[t] * multi_type_sblp_reference(types, c, t).objective;
        }
        SimResult sim = simulate_dap(types, c, PolicySpec::greedy(), demand, reps, seed + inst,
                                     threads);
        worst = std::min(worst, sim.mean + 3.0 * sim.stderr_ - 0.5 * elp);
    }
    return {{"policy_greedy_ratio", worst, worst >= 0.0}};
}

std::vector<CheckLine> check_dap_end_to_end(int instances, long reps, uint64_t seed,
                                            int threads) {
    double worst = std::numeric_limits<double>::infinity();
    const double eps = 0.05;
    const double factor = 0.5 * (1.0 - std::exp(-1.0)) - eps;
    for (int inst = 0; inst < instances; ++inst) {
        std::mt19937_64 rng = rng_stream(seed, 9800 + inst);
        int m = unif_int(rng, 1, 3);
        int n = unif_int(rng, 2, 4);
        int K = unif_int(rng, 1, 5);
        int T = unif_int(rng, 3, 8);
        CustomerTypeSet types = random_types(rng, m, n);
        DemandDistribution demand = DemandDistribution::deterministic(T);

        DapPlan plan = optimize_dap(types, Constraint::cardinality(K), demand, eps);
        double opt = 0.0;
        enumerate_inventories(n, K, [&](const InventoryVector& c) {
            opt = std::max(opt, multi_type_sblp_reference(types, c, T).objective);
        });
        SamplingPolicy pol = build_sampling_policy(types, plan.inventory, T);
        SimResult sim = simulate_dap(types, plan.inventory, PolicySpec::sampling_from(pol),
                                     demand, reps, seed + inst, threads);
        worst = std::min(worst, sim.mean + 3.0 * sim.stderr_ - factor * opt);
    }
    return {{"dap_end_to_end_ratio", worst, worst >= 0.0}};
}

std::vector<CheckLine> check_worked_example(long reps, uint64_t seed, int threads) {
    // Two products, prices (M, 1) with weights (1, M): stocking both lets the
    // heavy cheap product cannibalize the expensive one.
    const double M = 10.0;
    Catalog cat{{M, 1.0}, {1.0, M}};
    InventoryVector c{1, 1};

    double flp = solve_sblp_fast(cat, c, 1.0).solution.objective;
    double lp_err = std::abs(flp - M / 2.0);

    SimResult sim =
        simulate_da(cat, c, DemandDistribution::deterministic(1), reps, seed, threads);
    double expected = 2.0 * M / (M + 2.0);
    double sim_margin = 3.0 * sim.stderr_ - std::abs(sim.mean - expected);

    double exact = exact_da_revenue(cat, c, 1);
    double exact_err = std::abs(exact - expected);

    return {
        {"worked_example_flp_exact", 1e-9 - lp_err, lp_err <= 1e-9},
        {"worked_example_sim_within_3sigma", sim_margin, sim_margin >= 0.0},
        {"worked_example_exact_dp", 1e-12 - exact_err, exact_err <= 1e-12},
    };
}

std::vector<CheckLine> check_bounds_module(long trials, uint64_t seed) {
    std::vector<CheckLine> lines;
    const double one_minus_inv_e = 1.0 - std::exp(-1.0);

    double worst = std::numeric_limits<double>::infinity();
    for (int pi = 1; pi <= 99; ++pi) {
        double p = pi / 100.0;
        for (int T = 1; T <= 200; ++T) {
            for (int cap = 1; cap <= 10; ++cap) {
                worst = std::min(worst, check_single_item_bound(p, T, cap));
            }
        }
    }
    lines.push_back({"single_item_bound_grid", worst - one_minus_inv_e + 1e-9,
                     worst >= one_minus_inv_e - 1e-9});

    double worst_geo = 0.0;
    for (int pi = 1; pi <= 50; ++pi) {
        GeometricRatio r = geometric_ratio(pi / 100.0);
        worst_geo = std::max(worst_geo, std::abs(r.formula - r.exact));
    }
    lines.push_back({"geometric_ratio_formula", 1e-9 - worst_geo, worst_geo <= 1e-9});

    double sg = shifted_geometric_objective(1e4);
    double sg_err = std::abs(sg - std::exp(-1.0));
    lines.push_back({"shifted_geometric_near_1_over_e", 1e-4 - sg_err, sg_err <= 1e-4});

    double worst_ifr = std::numeric_limits<double>::infinity();
    double worst_det = std::numeric_limits<double>::infinity();
    long tiny = std::max(10L, trials / 10);
    for (long t = 0; t < tiny; ++t) {
        std::mt19937_64 rng = rng_stream(seed, 11000 + t);
        int n = unif_int(rng, 1, 3);
        Catalog cat = random_catalog(rng, n);
        InventoryVector x(n);
        for (int i = 0; i < n; ++i) x[i] = unif_int(rng, 1, 3);
        int pick = unif_int(rng, 0, 2);
        DemandDistribution demand =
            (pick == 0)   ? DemandDistribution::deterministic(unif_int(rng, 1, 12))
            : (pick == 1) ? DemandDistribution::geometric(unif(rng, 0.35, 0.8))
                          : DemandDistribution::truncated_poisson(unif(rng, 1.0, 6.0));
        double ratio = ifr_product_bound_check(cat, x, demand);
        if (demand.is_deterministic()) {
            worst_det = std::min(worst_det, ratio - one_minus_inv_e + 1e-9);
        } else {
            worst_ifr = std::min(worst_ifr, ratio - std::exp(-1.0) + 1e-9);
        }
    }
    lines.push_back({"ifr_product_bound", worst_ifr, worst_ifr >= 0.0});
    lines.push_back({"deterministic_product_bound", worst_det, worst_det >= 0.0});

    // Two-point counterexample: mass 1-1/M at 0 and 1/M at M is not IFR and
    // the ratio drops below 1/e.
    {
        const int M = 10;
        std::vector<double> pmf(M + 1, 0.0);
        pmf[0] = 1.0 - 1.0 / M;
        pmf[M] = 1.0 / M;
        DemandDistribution demand = DemandDistribution::finite_pmf(pmf);
        Catalog cat{{1.0}, {static_cast<double>(M)}};
        InventoryVector x{1};
        bool not_ifr = !is_ifr(demand);
        double ratio = ifr_product_bound_check(cat, x, demand, false);
        double margin = std::exp(-1.0) - ratio;
        lines.push_back({"non_ifr_demo_below_1_over_e", margin, not_ifr && margin > 0.0});
    }
    return lines;
}

std::vector<CheckLine> check_fast_solver_scaling(uint64_t seed) {
    auto bench = [&](int n) {
        std::mt19937_64 rng = rng_stream(seed, 12000 + n);
        Catalog cat = random_catalog(rng, n);
        InventoryVector c(n);
        for (int i = 0; i < n; ++i) c[i] = unif_int(rng, 0, 10);
        double T = n / 4.0;
        double best = std::numeric_limits<double>::infinity();
        double sink = 0.0;
        for (int rep = 0; rep < 3; ++rep) {
            auto t0 = Clock::now();
            sink += solve_sblp_fast(cat, c, T).solution.objective;
            best = std::min(best, seconds_since(t0));
        }
        return std::pair<double, double>(best, sink);
    };
    double t_small = bench(20000).first;
    double t_large = bench(100000).first;
    double ratio = t_large / std::max(t_small, 1e-9);
    return {
        {"fast_solver_large_under_1s", 1.0 - t_large, t_large < 1.0},
        {"fast_solver_scaling_ratio", 8.0 - ratio, ratio <= 8.0},
    };
}

SuiteReport run_suite(const std::string& name, long trials, uint64_t seed, int threads) {
    SuiteReport report;
    report.suite = name;
    if (name == "so") {
        report.checks = check_submodular_order(trials > 0 ? trials : 500, seed);
    } else if (name == "separability") {
        report.checks = check_separability(trials > 0 ? trials : 1000, seed);
    } else if (name == "cdlp") {
        report.checks = check_cdlp(trials > 0 ? trials : 200, seed);
    } else if (name == "bounds") {
        report.checks = check_bounds_module(trials > 0 ? trials : 500, seed);
        auto rounding = check_rounding(trials > 0 ? trials : 500, seed);
        report.checks.insert(report.checks.end(), rounding.begin(), rounding.end());
    } else if (name == "guarantees") {
        long reps = 100000;
        auto add = [&](std::vector<CheckLine> v) {
            report.checks.insert(report.checks.end(), v.begin(), v.end());
        };
        add(check_da_deterministic(10, reps, seed, threads));
        add(check_da_stochastic(5, reps, seed, threads));
        add(check_dap_cardinality(10, seed));
        add(check_dap_budget(5, seed));
        add(check_policy_sampling(reps, seed, threads));
        add(check_policy_greedy(reps, seed, threads));
        add(check_dap_end_to_end(5, reps, seed, threads));
        add(check_worked_example(reps, seed, threads));
    } else {
        throw ValidationError("unknown verify suite: " + name);
    }
    return report;
}

}  // namespace assortflow::verify
