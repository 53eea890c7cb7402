#include <algorithm>
#include <cmath>

#include "doctest.h"

#include "assortflow/cdlp.hpp"
#include "assortflow/common.hpp"
#include "assortflow/policies.hpp"

using namespace assortflow;

namespace {

CustomerTypeSet single_type(Catalog cat) {
    CustomerTypeSet ts;
    ts.types.push_back(std::move(cat));
    ts.lambda = {1.0};
    return ts;
}

double atom_prob(const SamplingPolicy& pol, int type, const Assortment& s) {
    double p = 0.0;
    for (const auto& atom : pol.atoms(type)) {
        if (atom.assortment == s) p += atom.prob;
    }
    return p;
}

}  // namespace

TEST_CASE("sampling policy reads phase durations off the LP sales trace") {
    CustomerTypeSet one = single_type(Catalog{{2.0, 1.0}, {1.0, 1.0}});
    SamplingPolicy pol = build_sampling_policy(one, {1, 3}, 4.0);

    // LP sales are (1, 1.5): the trace offers {0,1} for 3 of 4 customer
    // units, then {1} for the last unit.
    CHECK(atom_prob(pol, 0, {0, 1}) == doctest::Approx(0.75));
    CHECK(atom_prob(pol, 0, {1}) == doctest::Approx(0.25));

    double total = 0.0;
    for (const auto& atom : pol.atoms(0)) total += atom.prob;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("empty inventory gives the empty-assortment atom") {
    CustomerTypeSet one = single_type(Catalog{{2.0, 1.0}, {1.0, 1.0}});
    SamplingPolicy pol = build_sampling_policy(one, {0, 0}, 4.0);
    CHECK(atom_prob(pol, 0, {}) == doctest::Approx(1.0));
}

TEST_CASE("sampling probabilities sum to one on random instances") {
    for (long trial = 0; trial < 20; ++trial) {
        std::mt19937_64 rng = rng_stream(41, trial);
        std::uniform_int_distribution<int> md(1, 3), nd(1, 4), cd(0, 3);
        std::uniform_real_distribution<double> pd(0.5, 9.0), wd(0.1, 3.0), ld(0.2, 1.0);
        int m = md(rng), n = nd(rng);
        CustomerTypeSet types;
        std::vector<double> prices(n);
        for (int i = 0; i < n; ++i) prices[i] = pd(rng);
        std::sort(prices.rbegin(), prices.rend());
        double lsum = 0.0;
        for (int k = 0; k < m; ++k) {
            Catalog cat;
            cat.prices = prices;
            cat.weights.resize(n);
            for (int i = 0; i < n; ++i) cat.weights[i] = wd(rng);
            types.types.push_back(std::move(cat));
            double l = ld(rng);
            types.lambda.push_back(l);
            lsum += l;
        }
        for (double& l : types.lambda) l /= lsum;
        InventoryVector c(n);
        for (int i = 0; i < n; ++i) c[i] = cd(rng);

        SamplingPolicy pol = build_sampling_policy(types, c, 6.0);
        for (int k = 0; k < m; ++k) {
            double total = 0.0;
            for (const auto& atom : pol.atoms(k)) {
                total += atom.prob;
                CHECK(std::is_sorted(atom.assortment.begin(), atom.assortment.end()));
            }
            CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("phase-weighted choice probabilities reproduce the LP sales") {
    // For every type, sum_S P(S) * phi_k(i, S) * lambda_k * T must equal the
    // LP sales of product i: the distribution is a time decomposition of the
    // fluid consumption.
    for (long trial = 0; trial < 15; ++trial) {
        std::mt19937_64 rng = rng_stream(43, trial);
        std::uniform_int_distribution<int> md(1, 3), nd(1, 4), cd(0, 3);
        std::uniform_real_distribution<double> pd(0.5, 9.0), wd(0.1, 3.0), ld(0.2, 1.0);
        int m = md(rng), n = nd(rng);
        CustomerTypeSet types;
        std::vector<double> prices(n);
        for (int i = 0; i < n; ++i) prices[i] = pd(rng);
        std::sort(prices.rbegin(), prices.rend());
        double lsum = 0.0;
        for (int k = 0; k < m; ++k) {
            Catalog cat;
            cat.prices = prices;
            cat.weights.resize(n);
            for (int i = 0; i < n; ++i) cat.weights[i] = wd(rng);
            types.types.push_back(std::move(cat));
            double l = ld(rng);
            types.lambda.push_back(l);
            lsum += l;
        }
        for (double& l : types.lambda) l /= lsum;
        InventoryVector c(n);
        for (int i = 0; i < n; ++i) c[i] = cd(rng);
        const double T = 7.0;

        MultiTypeLpResult lp = multi_type_sblp_reference(types, c, T);
        SamplingPolicy pol = build_sampling_policy(types, c, T);
        for (int k = 0; k < m; ++k) {
            for (int i = 0; i < n; ++i) {
                double consumed = 0.0;
                for (const auto& atom : pol.atoms(k)) {
                    if (std::binary_search(atom.assortment.begin(), atom.assortment.end(), i)) {
                        consumed += atom.prob * choice_prob(types.types[k], i, atom.assortment);
                    }
                }
                consumed *= types.lambda[k] * T;
                CHECK(consumed == doctest::Approx(lp.sales[k][i]).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("sampling offers intersect with availability and replay under a seed") {
    CustomerTypeSet one = single_type(Catalog{{2.0, 1.0}, {1.0, 1.0}});
    SamplingPolicy pol = build_sampling_policy(one, {1, 3}, 4.0);

    std::mt19937_64 rng = rng_stream(5, 0);
    CHECK(sampling_offer(pol, 0, {}, rng).empty());

    std::mt19937_64 a = rng_stream(5, 1), b = rng_stream(5, 1);
    for (int rep = 0; rep < 50; ++rep) {
        Assortment oa = sampling_offer(pol, 0, {1}, a);
        Assortment ob = sampling_offer(pol, 0, {1}, b);
        CHECK(oa == ob);
        for (int i : oa) CHECK(i == 1);
    }
}

TEST_CASE("greedy offer equals the brute-force argmax") {
    Catalog cat{{10.0, 8.0, 1.0}, {1.0, 1.0, 10.0}};
    CHECK(greedy_offer(cat, {0, 1, 2}) == Assortment{0, 1});
    CHECK(greedy_offer(cat, {}).empty());
    CHECK(greedy_offer(cat, {2}) == Assortment{2});

    for (long trial = 0; trial < 30; ++trial) {
        std::mt19937_64 rng = rng_stream(42, trial);
        std::uniform_int_distribution<int> nd(1, 10);
        std::uniform_real_distribution<double> pd(0.3, 9.0), wd(0.1, 4.0);
        int n = nd(rng);
        std::vector<double> prices(n), weights(n);
        for (int i = 0; i < n; ++i) {
            prices[i] = pd(rng);
            weights[i] = wd(rng);
        }
        std::sort(prices.rbegin(), prices.rend());
        Catalog rc{prices, weights};
        Assortment avail;
        for (int i = 0; i < n; ++i) {
            if (std::uniform_real_distribution<double>(0, 1)(rng) < 0.7) avail.push_back(i);
        }

        double best = 0.0;
        for (int mask = 0; mask < (1 << avail.size()); ++mask) {
            Assortment s;
            for (std::size_t j = 0; j < avail.size(); ++j) {
                if (mask & (1 << j)) s.push_back(avail[j]);
            }
            best = std::max(best, assortment_revenue(rc, s));
        }
        Assortment got = greedy_offer(rc, avail);
        CHECK(assortment_revenue(rc, got) == doctest::Approx(best).epsilon(1e-12));
        CHECK(std::includes(avail.begin(), avail.end(), got.begin(), got.end()));
    }
}
