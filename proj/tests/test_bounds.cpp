#include <cmath>

#include "doctest.h"

#include "assortflow/bounds.hpp"
#include "assortflow/common.hpp"

using namespace assortflow;

TEST_CASE("capped binomial expectation against enumeration") {
    // T=2, p=1/2, cap 1: outcomes 0,1,2 with probs 1/4,1/2,1/4 -> E[min]=3/4.
    CHECK(single_item_expected_sales(0.5, 2, 1) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(single_item_expected_sales(0.7, 0, 5) == 0.0);
    CHECK(single_item_expected_sales(1.0, 3, 2) == 2.0);

    // Exhaustive check against direct pmf summation on a few points.
    for (double p : {0.1, 0.37, 0.8}) {
        for (int T : {1, 5, 17}) {
            for (int cap : {1, 2, 6}) {
                double direct = 0.0;
                for (int j = 0; j <= T; ++j) {
                    double lp = std::lgamma(T + 1.0) - std::lgamma(j + 1.0) -
                                std::lgamma(T - j + 1.0) + j * std::log(p) +
                                (T - j) * std::log1p(-p);
                    direct += std::exp(lp) * std::min(j, cap);
                }
                CHECK(single_item_expected_sales(p, T, cap) ==
                      doctest::Approx(direct).epsilon(1e-11));
            }
        }
    }
}

TEST_CASE("single-item ratio clears 1 - 1/e on a coarse grid") {
    const double bound = 1.0 - std::exp(-1.0);
    CHECK(check_single_item_bound(0.5, 2, 1) == doctest::Approx(0.75));
    CHECK(check_single_item_bound(0.3, 10, 20) == doctest::Approx(1.0));  // cap above T
    CHECK(check_single_item_bound(0.5, 0, 3) == 1.0);

    double worst = 1.0;
    for (int pi = 5; pi <= 95; pi += 5) {
        for (int T : {1, 2, 3, 5, 10, 40, 150}) {
            for (int cap = 1; cap <= 8; ++cap) {
                worst = std::min(worst, check_single_item_bound(pi / 100.0, T, cap));
            }
        }
    }
    CHECK(worst >= bound - 1e-9);
}

TEST_CASE("geometric construction: closed form equals the truncated expectation") {
    GeometricRatio half = geometric_ratio(0.5);
    CHECK(half.formula == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(std::abs(half.formula - half.exact) <= 1e-9);
    CHECK(half.sales_ratio == doctest::Approx(2.0 / 3.0).epsilon(1e-9));

    GeometricRatio small = geometric_ratio(0.01);
    CHECK(small.formula == doctest::Approx(0.49749).epsilon(1e-4));
    CHECK(std::abs(small.formula - small.exact) <= 1e-9);
    // The sales-to-fluid ratio approaches 1/2 from above as p -> 0.
    CHECK(small.sales_ratio >= 0.5);
    CHECK(small.sales_ratio <= 0.51);
}

TEST_CASE("shifted-geometric objective values") {
    CHECK(shifted_geometric_objective(1.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(shifted_geometric_objective(10.0) == doctest::Approx(0.38554).epsilon(1e-4));
    CHECK(std::abs(shifted_geometric_objective(1e4) - std::exp(-1.0)) <= 1e-4);

    InfimumResult inf = shifted_geometric_infimum(1e4);
    CHECK(inf.argmin == doctest::Approx(1e4));
    CHECK(inf.value == doctest::Approx(shifted_geometric_objective(1e4)));
}

TEST_CASE("per-product consumption bounds") {
    SUBCASE("deterministic horizons keep 1 - 1/e") {
        const double bound = 1.0 - std::exp(-1.0);
        for (long trial = 0; trial < 10; ++trial) {
            std::mt19937_64 rng = rng_stream(61, trial);
            std::uniform_int_distribution<int> nd(1, 3), cd(1, 3), td(1, 10);
            std::uniform_real_distribution<double> pd(0.5, 6.0), wd(0.2, 3.0);
            int n = nd(rng);
            std::vector<double> prices(n), weights(n);
            for (int i = 0; i < n; ++i) {
                prices[i] = pd(rng);
                weights[i] = wd(rng);
            }
            std::sort(prices.rbegin(), prices.rend());
            Catalog cat{prices, weights};
            InventoryVector x(n);
            for (int i = 0; i < n; ++i) x[i] = cd(rng);
            double ratio =
                ifr_product_bound_check(cat, x, DemandDistribution::deterministic(td(rng)));
            CHECK(ratio >= bound - 1e-9);
        }
    }
    SUBCASE("geometric single unit has ratio 1/(2-p)") {
        // Weight chosen so the purchase probability equals the geometric p.
        double p = 0.4;
        Catalog cat{{1.0}, {p / (1.0 - p)}};
        double ratio = ifr_product_bound_check(cat, {1}, DemandDistribution::geometric(p));
        CHECK(ratio == doctest::Approx(1.0 / (2.0 - p)).epsilon(1e-9));
        CHECK(ratio >= std::exp(-1.0) - 1e-9);
    }
    SUBCASE("non-IFR two-point demand falls below 1/e") {
        const int M = 10;
        std::vector<double> pmf(M + 1, 0.0);
        pmf[0] = 1.0 - 1.0 / M;
        pmf[M] = 1.0 / M;
        DemandDistribution demand = DemandDistribution::finite_pmf(pmf);
        Catalog cat{{1.0}, {static_cast<double>(M)}};
        CHECK_THROWS_AS(ifr_product_bound_check(cat, {1}, demand), UnsupportedError);
        double ratio = ifr_product_bound_check(cat, {1}, demand, false);
        CHECK(ratio < std::exp(-1.0));
    }
}
