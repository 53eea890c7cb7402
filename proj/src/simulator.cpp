#include "assortflow/simulator.hpp"

#include <algorithm>
#include <cmath>

#include "assortflow/common.hpp"

namespace assortflow {

namespace {

constexpr long kBlock = 1024;  // fixed block size keeps reductions thread-count independent

struct BlockStats {
    long double rev_sum = 0.0L;
    long double rev_sq = 0.0L;
    std::vector<long> units;
};

std::vector<double> demand_cdf(const DemandDistribution& demand) {
    std::vector<double> cdf(demand.pmf.size());
    double acc = 0.0;
    for (std::size_t k = 0; k < demand.pmf.size(); ++k) {
        acc += demand.pmf[k];
        cdf[k] = acc;
    }
    cdf.back() = 1.0;
    return cdf;
}

int draw_count(const std::vector<double>& cdf, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double u = unif(rng);
    return static_cast<int>(std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
}

template <typename RepFn>
SimResult run_replications(int n, long reps, uint64_t seed, int threads, RepFn&& rep_fn) {
    require(reps >= 1, "reps must be >= 1");
    const long blocks = (reps + kBlock - 1) / kBlock;
    std::vector<BlockStats> stats(blocks);
    parallel_blocks(blocks, threads, [&](std::size_t b) {
        BlockStats& s = stats[b];
        s.units.assign(n, 0);
        long lo = static_cast<long>(b) * kBlock;
        long hi = std::min(reps, lo + kBlock);
        for (long rep = lo; rep < hi; ++rep) {
            std::mt19937_64 rng = rng_stream(seed, static_cast<uint64_t>(rep));
            double rev = rep_fn(rng, s.units);
            s.rev_sum += rev;
            s.rev_sq += static_cast<long double>(rev) * rev;
        }
    });

    long double total = 0.0L, total_sq = 0.0L;
    std::vector<long> units(n, 0);
    for (const BlockStats& s : stats) {
        total += s.rev_sum;
        total_sq += s.rev_sq;
        for (int i = 0; i < n; ++i) units[i] += s.units[i];
    }
    SimResult res;
    res.reps = reps;
    res.seed = seed;
    res.mean = static_cast<double>(total / reps);
    if (reps > 1) {
        long double var = (total_sq - total * total / reps) / (reps - 1);
        res.stderr_ = static_cast<double>(std::sqrt(std::max(0.0L, var) / reps));
    }
    res.mean_consumption.resize(n);
    for (int i = 0; i < n; ++i) {
        res.mean_consumption[i] = static_cast<double>(units[i]) / static_cast<double>(reps);
    }
    return res;
}

}  // namespace

SimResult simulate_da(const Catalog& catalog, const InventoryVector& c,
                      const DemandDistribution& demand, long reps, uint64_t seed, int threads) {
    const int n = catalog.n();
    require(static_cast<int>(c.size()) == n, "inventory length differs from catalog");
    const std::vector<double> cdf = demand_cdf(demand);

    return run_replications(n, reps, seed, threads, [&](std::mt19937_64& rng,
                                                        std::vector<long>& units) {
        InventoryVector stock = c;
        std::vector<int> alive;
        double w_sum = 0.0;
        for (int i = 0; i < n; ++i) {
            if (stock[i] > 0) {
                alive.push_back(i);
                w_sum += catalog.weights[i];
            }
        }
        int T = draw_count(cdf, rng);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        double rev = 0.0;
        for (int t = 0; t < T && !alive.empty(); ++t) {
            double u = unif(rng) * (1.0 + w_sum);
            if (u <= 1.0) continue;  // outside option
            u -= 1.0;
            std::size_t pick = 0;
            for (; pick + 1 < alive.size(); ++pick) {
                u -= catalog.weights[alive[pick]];
                if (u <= 0.0) break;
            }
            int i = alive[pick];
            rev += catalog.prices[i];
            ++units[i];
            if (--stock[i] == 0) {
                w_sum -= catalog.weights[i];
                alive.erase(alive.begin() + pick);
            }
        }
        return rev;
    });
}

SimResult simulate_dap(const CustomerTypeSet& types, const InventoryVector& c,
                       const PolicySpec& policy, const DemandDistribution& demand, long reps,
                       uint64_t seed, int threads) {
    const int n = types.n();
    const int m = types.m();
    require(static_cast<int>(c.size()) == n, "inventory length differs from catalog");
    const std::vector<double> cdf = demand_cdf(demand);
    std::vector<double> lambda_cdf(m);
    double acc = 0.0;
    for (int k = 0; k < m; ++k) {
        acc += types.lambda[k];
        lambda_cdf[k] = acc;
    }
    lambda_cdf.back() = 1.0;

    return run_replications(n, reps, seed, threads, [&](std::mt19937_64& rng,
                                                        std::vector<long>& units) {
        InventoryVector stock = c;
        Assortment available;
        for (int i = 0; i < n; ++i) {
            if (stock[i] > 0) available.push_back(i);
        }
        int T = draw_count(cdf, rng);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        double rev = 0.0;
        for (int t = 0; t < T && !available.empty(); ++t) {
            double uk = unif(rng);
            int k = static_cast<int>(std::lower_bound(lambda_cdf.begin(), lambda_cdf.end(), uk) -
                                     lambda_cdf.begin());
            const Catalog& cat = types.types[k];

            Assortment offered;
            switch (policy.kind) {
                case PolicySpec::Kind::OfferAll:
                    offered = available;
                    break;
                case PolicySpec::Kind::Greedy:
                    offered = greedy_offer(cat, available);
                    break;
                case PolicySpec::Kind::Sampling:
                    offered = sampling_offer(*policy.sampling, k, available, rng);
                    break;
            }
            if (offered.empty()) continue;
            double w_off = 0.0;
            for (int i : offered) w_off += cat.weights[i];
            double u = unif(rng) * (1.0 + w_off);
            if (u <= 1.0) continue;
            u -= 1.0;
            std::size_t pick = 0;
            for (; pick + 1 < offered.size(); ++pick) {
                u -= cat.weights[offered[pick]];
                if (u <= 0.0) break;
            }
            int i = offered[pick];
            rev += cat.prices[i];
            ++units[i];
            if (--stock[i] == 0) {
                available.erase(std::find(available.begin(), available.end(), i));
            }
        }
        return rev;
    });
}

namespace {

struct StateSpace {
    std::vector<long> stride;
    long total = 1;

    StateSpace(const InventoryVector& c, long cap) {
        stride.resize(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            stride[i] = total;
            total *= c[i] + 1;
            require(total <= cap, "exact DP state space over cap");
        }
    }
};

}  // namespace

double exact_da_revenue(const Catalog& catalog, const InventoryVector& c, int T) {
    require(T >= 0 && T <= 50, "exact DP horizon over cap");
    DemandDistribution d = DemandDistribution::deterministic(T);
    return exact_da_expected_revenue(catalog, c, d);
}

std::vector<double> exact_da_consumption(const Catalog& catalog, const InventoryVector& c,
                                         int T) {
    require(T >= 0 && T <= 50, "exact DP horizon over cap");
    DemandDistribution d = DemandDistribution::deterministic(T);
    return exact_da_expected_consumption(catalog, c, d);
}

double exact_da_expected_revenue(const Catalog& catalog, const InventoryVector& c,
                                 const DemandDistribution& demand) {
    const int n = catalog.n();
    StateSpace ss(c, 100000);
    require(demand.t_max <= 400, "exact DP horizon over cap");

    std::vector<double> prev(ss.total, 0.0), cur(ss.total, 0.0);
    long full = 0;
    for (int i = 0; i < n; ++i) full += ss.stride[i] * c[i];

    double expected = demand.pmf[0] * 0.0;
    std::vector<int> digits(n);
    for (int t = 1; t <= demand.t_max; ++t) {
        for (long s = 0; s < ss.total; ++s) {
            long rem = s;
            double w_sum = 1.0;
            for (int i = n - 1; i >= 0; --i) {
                digits[i] = static_cast<int>(rem / ss.stride[i]);
                rem %= ss.stride[i];
                if (digits[i] > 0) w_sum += catalog.weights[i];
            }
            double v = prev[s] / w_sum;  // outside-option branch
            for (int i = 0; i < n; ++i) {
                if (digits[i] == 0) continue;
                v += catalog.weights[i] / w_sum *
                     (catalog.prices[i] + prev[s - ss.stride[i]]);
            }
            cur[s] = v;
        }
        std::swap(prev, cur);
        expected += demand.pmf[t] * prev[full];
    }
    return expected;
}

std::vector<double> exact_da_expected_consumption(const Catalog& catalog,
                                                  const InventoryVector& c,
                                                  const DemandDistribution& demand) {
    const int n = catalog.n();
    StateSpace ss(c, 100000);
    require(demand.t_max <= 400, "exact DP horizon over cap");

    std::vector<double> prev(ss.total * n, 0.0), cur(ss.total * n, 0.0);
    long full = 0;
    for (int i = 0; i < n; ++i) full += ss.stride[i] * c[i];

    std::vector<double> expected(n, 0.0);
    std::vector<int> digits(n);
    for (int t = 1; t <= demand.t_max; ++t) {
        for (long s = 0; s < ss.total; ++s) {
            long rem = s;
            double w_sum = 1.0;
            for (int i = n - 1; i >= 0; --i) {
                digits[i] = static_cast<int>(rem / ss.stride[i]);
                rem %= ss.stride[i];
                if (digits[i] > 0) w_sum += catalog.weights[i];
            }
            for (int q = 0; q < n; ++q) cur[s * n + q] = prev[s * n + q] / w_sum;
            for (int i = 0; i < n; ++i) {
                if (digits[i] == 0) continue;
                double phi = catalog.weights[i] / w_sum;
                long s2 = s - ss.stride[i];
                for (int q = 0; q < n; ++q) cur[s * n + q] += phi * prev[s2 * n + q];
                cur[s * n + i] += phi;
            }
        }
        std::swap(prev, cur);
        for (int q = 0; q < n; ++q) expected[q] += demand.pmf[t] * prev[full * n + q];
    }
    return expected;
}

}  // namespace assortflow
