#include <cmath>

#include "doctest.h"

#include "assortflow/choice.hpp"
#include "assortflow/common.hpp"

using namespace assortflow;

namespace {

// Exhaustive subset argmax, the oracle for the prefix rule.
double brute_force_best_revenue(const Catalog& cat, int max_size = -1) {
    const int n = cat.n();
    double best = 0.0;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Assortment s;
        for (int i = 0; i < n; ++i) {
            if (mask & (1 << i)) s.push_back(i);
        }
        if (max_size >= 0 && static_cast<int>(s.size()) > max_size) continue;
        best = std::max(best, assortment_revenue(cat, s));
    }
    return best;
}

}  // namespace

TEST_CASE("choice probabilities match the MNL formula") {
    Catalog cat{{2.0, 1.0}, {1.0, 1.0}};
    CHECK(choice_prob(cat, 0, {0, 1}) == doctest::Approx(1.0 / 3.0));
    CHECK(choice_prob(cat, 1, {0, 1}) == doctest::Approx(1.0 / 3.0));
    CHECK(choice_prob(cat, -1, {}) == 1.0);

    Catalog heavy{{2.0, 1.0}, {10.0, 1.0}};
    CHECK(choice_prob(heavy, 0, {0, 1}) == doctest::Approx(10.0 / 12.0));

    CHECK_THROWS_AS(choice_prob(cat, 0, {1}), ValidationError);
}

TEST_CASE("choice probabilities over an assortment plus outside sum to one") {
    Catalog cat{{5.0, 4.0, 3.0, 2.0}, {0.3, 1.7, 2.2, 0.9}};
    Assortment s{0, 2, 3};
    double total = choice_prob(cat, -1, s);
    for (int i : s) total += choice_prob(cat, i, s);
    CHECK(std::abs(total - 1.0) <= 1e-15);
}

TEST_CASE("assortment revenue examples") {
    Catalog cat{{10.0, 8.0, 1.0}, {1.0, 1.0, 10.0}};
    CHECK(assortment_revenue(cat, {0, 1}) == doctest::Approx(6.0));
    CHECK(assortment_revenue(cat, {}) == 0.0);

    Catalog m10{{10.0, 1.0}, {1.0, 10.0}};
    CHECK(assortment_revenue(m10, {0}) == doctest::Approx(5.0));
}

TEST_CASE("optimal static assortment is the best revenue-ordered prefix") {
    Catalog cat{{10.0, 8.0, 1.0}, {1.0, 1.0, 10.0}};
    CHECK(optimal_static_assortment(cat, {0, 1, 2}) == Assortment{0, 1});
    CHECK(optimal_static_assortment(cat, {}) == Assortment{});

    Catalog m10{{10.0, 1.0}, {1.0, 10.0}};
    CHECK(optimal_static_assortment(m10, {0, 1}) == Assortment{0});
}

TEST_CASE("prefix rule matches exhaustive search") {
    for (long trial = 0; trial < 60; ++trial) {
        std::mt19937_64 rng = rng_stream(99, trial);
        std::uniform_int_distribution<int> nd(1, 10);
        std::uniform_real_distribution<double> pd(0.2, 9.0), wd(0.05, 4.0);
        int n = nd(rng);
        std::vector<double> prices(n), weights(n);
        for (int i = 0; i < n; ++i) {
            prices[i] = pd(rng);
            weights[i] = wd(rng);
        }
        std::sort(prices.rbegin(), prices.rend());
        Catalog cat{prices, weights};
        Assortment all(n);
        for (int i = 0; i < n; ++i) all[i] = i;

        double got = assortment_revenue(cat, optimal_static_assortment(cat, all));
        CHECK(got == doctest::Approx(brute_force_best_revenue(cat)).epsilon(1e-12));

        int cap = 1 + static_cast<int>(trial % n);
        double capped = assortment_revenue(cat, optimal_static_assortment(cat, all, cap));
        CHECK(capped <= brute_force_best_revenue(cat, cap) + 1e-12);
    }
}

TEST_CASE("weak substitutability: adding products lowers existing choice odds") {
    Catalog cat{{4.0, 3.0, 2.0, 1.0}, {1.0, 2.0, 0.5, 1.5}};
    Assortment small{0, 2};
    Assortment large{0, 1, 2, 3};
    for (int i : small) {
        CHECK(choice_prob(cat, i, small) >= choice_prob(cat, i, large));
    }
}
