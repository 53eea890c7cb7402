#include <algorithm>
#include <cmath>

#include "doctest.h"

#include "assortflow/common.hpp"
#include "assortflow/fluid.hpp"

using namespace assortflow;

namespace {

Catalog unit_weights(std::vector<double> prices) {
    std::vector<double> w(prices.size(), 1.0);
    return Catalog{std::move(prices), std::move(w)};
}

Assortment assortment_at(const FluidTrace& tr, double t) {
    double acc = 0.0;
    for (std::size_t l = 0; l < tr.phases.size(); ++l) {
        acc += tr.phases[l].duration;
        if (t < acc) return tr.phase_assortment(l);
    }
    return tr.phases.empty() ? Assortment{} : tr.phase_assortment(tr.phases.size() - 1);
}

FractionalInventory random_inventory(std::mt19937_64& rng, int n, double hi) {
    std::uniform_real_distribution<double> xd(0.0, hi), coin(0.0, 1.0);
    FractionalInventory x(n);
    for (int i = 0; i < n; ++i) x[i] = (coin(rng) < 0.2) ? 0.0 : xd(rng);
    return x;
}

Catalog random_catalog(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> pd(0.2, 8.0), wd(0.1, 4.0);
    std::vector<double> prices(n), weights(n);
    for (int i = 0; i < n; ++i) {
        prices[i] = pd(rng);
        weights[i] = wd(rng);
    }
    std::sort(prices.rbegin(), prices.rend());
    return Catalog{prices, weights};
}

}  // namespace

TEST_CASE("sequence reproduces the three-product trace") {
    Catalog cat = unit_weights({3.0, 2.0, 1.0});
    FluidTrace tr = sequence(cat, {1.0, 0.0, 3.0}, 8.0);

    REQUIRE(tr.phases.size() == 3);
    CHECK(tr.phase_assortment(0) == Assortment{0, 2});
    CHECK(tr.phases[0].duration == doctest::Approx(3.0));
    CHECK(tr.phase_assortment(1) == Assortment{2});
    CHECK(tr.phases[1].duration == doctest::Approx(4.0));
    CHECK(tr.phase_assortment(2) == Assortment{});
    CHECK(tr.phases[2].duration == doctest::Approx(1.0));

    CHECK(tr.consumption[0] == doctest::Approx(1.0));
    CHECK(tr.consumption[1] == doctest::Approx(0.0));
    CHECK(tr.consumption[2] == doctest::Approx(3.0));
    CHECK(tr.revenue == doctest::Approx(6.0));
}

TEST_CASE("sequence with nothing stocked is one empty phase") {
    Catalog cat = unit_weights({3.0, 2.0, 1.0});
    FluidTrace tr = sequence(cat, {0.0, 0.0, 0.0}, 5.0);
    REQUIRE(tr.phases.size() == 1);
    CHECK(tr.phase_assortment(0).empty());
    CHECK(tr.phases[0].duration == doctest::Approx(5.0));
    CHECK(tr.revenue == 0.0);
}

TEST_CASE("sequence leaves half a unit of the slowest product") {
    Catalog cat = unit_weights({3.0, 2.0, 1.0});
    FluidTrace tr = sequence(cat, {1.0, 2.0, 3.0}, 8.0);
    CHECK(tr.consumption[0] == doctest::Approx(1.0));
    CHECK(tr.consumption[1] == doctest::Approx(2.0));
    CHECK(tr.consumption[2] == doctest::Approx(2.5));
}

TEST_CASE("fp_revenue examples") {
    Catalog cat = unit_weights({3.0, 2.0, 1.0});
    CHECK(fp_revenue(cat, {1.0, 0.0, 3.0}, 6.0) == doctest::Approx(5.5));
    CHECK(fp_revenue(cat, {1.0, 0.0, 3.0}, 0.0) == 0.0);

    Catalog single{{2.0}, {1.0}};
    FluidTrace tr = sequence(single, {2.0}, 10.0);
    CHECK(tr.consumption[0] == doctest::Approx(2.0));
    CHECK(tr.revenue == doctest::Approx(4.0));
}

TEST_CASE("separability worked example") {
    Catalog cat = unit_weights({3.0, 2.0, 1.0});
    SeparabilityCheck sc = separability_decompose(cat, {1.0, 0.0, 3.0}, 2.0, 1, 8.0);
    CHECK(sc.alpha == doctest::Approx(2.0));
    CHECK(sc.residual < 1e-9);
    CHECK(fp_revenue(cat, {1.0, 2.0, 3.0}, 8.0) == doctest::Approx(9.5));

    SeparabilityCheck zero = separability_decompose(cat, {1.0, 0.0, 3.0}, 0.0, 1, 8.0);
    CHECK(zero.alpha == doctest::Approx(0.0));
    CHECK(zero.residual < 1e-12);
}

TEST_CASE("separability residual stays tiny on random instances") {
    double worst = 0.0;
    for (long trial = 0; trial < 300; ++trial) {
        std::mt19937_64 rng = rng_stream(7, trial);
        std::uniform_int_distribution<int> nd(1, 6), id(0, 5);
        std::uniform_real_distribution<double> dd(0.0, 3.0), td(0.2, 20.0);
        int n = nd(rng);
        Catalog cat = random_catalog(rng, n);
        FractionalInventory x = random_inventory(rng, n, 4.0);
        int i = id(rng) % n;
        worst = std::max(worst, separability_decompose(cat, x, dd(rng), i, td(rng)).residual);
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("traces are nested, mass balanced, and monotone in the inventory") {
    for (long trial = 0; trial < 200; ++trial) {
        std::mt19937_64 rng = rng_stream(8, trial);
        std::uniform_int_distribution<int> nd(1, 6);
        std::uniform_real_distribution<double> td(0.2, 15.0), bump(0.0, 2.0);
        int n = nd(rng);
        Catalog cat = random_catalog(rng, n);
        FractionalInventory x = random_inventory(rng, n, 4.0);
        double T = td(rng);
        FluidTrace tr = sequence(cat, x, T);

        double dur = 0.0, mass = tr.outside_consumption;
        for (std::size_t l = 0; l < tr.phases.size(); ++l) {
            dur += tr.phases[l].duration;
            if (l > 0) {
                Assortment prev = tr.phase_assortment(l - 1);
                Assortment cur = tr.phase_assortment(l);
                CHECK(cur.size() < prev.size());
                CHECK(std::includes(prev.begin(), prev.end(), cur.begin(), cur.end()));
            }
        }
        CHECK(dur == doctest::Approx(T).epsilon(1e-9));
        for (int i = 0; i < n; ++i) {
            mass += tr.consumption[i];
            CHECK(tr.consumption[i] <= x[i] + 1e-9);
        }
        CHECK(mass == doctest::Approx(T).epsilon(1e-9));

        FractionalInventory larger = x;
        for (int i = 0; i < n; ++i) larger[i] += bump(rng);
        FluidTrace tr2 = sequence(cat, larger, T);
        CHECK(fp_revenue(cat, x, T * 1.3) >= tr.revenue - 1e-9);
        for (double t : {0.1 * T, 0.5 * T, 0.9 * T}) {
            Assortment small = assortment_at(tr, t);
            Assortment big = assortment_at(tr2, t);
            CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
        }
    }
}

TEST_CASE("fluid revenue is not monotone in the inventory") {
    // Stocking the heavy cheap product drags the whole process down; only the
    // relaxation that may sub-stock is monotone.
    Catalog cat{{10.0, 1.0}, {1.0, 10.0}};
    CHECK(fp_revenue(cat, {1.0, 0.0}, 1.0) == doctest::Approx(5.0));
    CHECK(fp_revenue(cat, {1.0, 1.0}, 1.0) == doctest::Approx(20.0 / 12.0));
}

TEST_CASE("outside-mass solver agrees with the trace") {
    for (long trial = 0; trial < 100; ++trial) {
        std::mt19937_64 rng = rng_stream(9, trial);
        std::uniform_int_distribution<int> nd(1, 6);
        std::uniform_real_distribution<double> td(0.2, 15.0);
        int n = nd(rng);
        Catalog cat = random_catalog(rng, n);
        FractionalInventory x = random_inventory(rng, n, 4.0);
        double T = td(rng);
        FluidTrace tr = sequence(cat, x, T);
        CHECK(solve_outside_mass(cat, x, T) ==
              doctest::Approx(tr.outside_consumption).epsilon(1e-10));
    }
}
