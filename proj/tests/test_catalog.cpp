#include "doctest.h"

#include "assortflow/catalog.hpp"

using namespace assortflow;

TEST_CASE("validate sorts by descending price and records the permutation") {
    ModelInput in;
    in.prices = {1.0, 3.0, 2.0};
    in.weights = {0.5, 1.5, 2.5};
    CheckedModel model = validate(in);

    CHECK(model.catalog.prices == std::vector<double>{3.0, 2.0, 1.0});
    CHECK(model.catalog.weights == std::vector<double>{1.5, 2.5, 0.5});
    CHECK(model.perm == std::vector<int>{1, 2, 0});

    std::vector<int> internal = {7, 8, 9};
    std::vector<int> user = model.to_user_order(internal);
    CHECK(user == std::vector<int>{9, 7, 8});
}

TEST_CASE("validate is idempotent and stable on price ties") {
    ModelInput in;
    in.prices = {2.0, 2.0, 1.0};
    in.weights = {1.0, 2.0, 3.0};
    CheckedModel model = validate(in);
    CHECK(model.perm == std::vector<int>{0, 1, 2});
    CHECK(model.catalog.weights == std::vector<double>{1.0, 2.0, 3.0});

    ModelInput again;
    again.prices = model.catalog.prices;
    again.weights = model.catalog.weights;
    CheckedModel twice = validate(again);
    CHECK(twice.perm == std::vector<int>{0, 1, 2});
}

TEST_CASE("validate rejects bad inputs") {
    ModelInput in;
    in.prices = {1.0, 2.0, 3.0};
    in.weights = {1.0, 0.0, 1.0};
    CHECK_THROWS_AS(validate(in), ValidationError);

    ModelInput empty;
    CHECK_THROWS_AS(validate(empty), ValidationError);
}

TEST_CASE("outside option weight is normalized away") {
    ModelInput in;
    in.prices = {2.0, 1.0};
    in.weights = {4.0, 2.0};
    in.v0 = 2.0;
    CheckedModel model = validate(in);
    CHECK(model.catalog.weights[0] == doctest::Approx(2.0));
    CHECK(model.catalog.weights[1] == doctest::Approx(1.0));
}

TEST_CASE("geometric demand materializes with the documented tail") {
    DemandDistribution d = DemandDistribution::geometric(0.5);
    CHECK(d.t_max == 40);
    CHECK(d.mean == doctest::Approx(2.0).epsilon(1e-9));
    double sum = 0.0;
    for (double p : d.pmf) sum += p;
    CHECK(std::abs(sum - 1.0) <= 1e-12);
    CHECK(d.pmf[0] == 0.0);
}

TEST_CASE("parametric demand means match closed forms") {
    CHECK(DemandDistribution::truncated_poisson(4.0).mean == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(DemandDistribution::shifted_geometric(3, 0.5).mean ==
          doctest::Approx(5.0).epsilon(1e-9));
    CHECK(DemandDistribution::deterministic(7).mean == 7.0);
}

TEST_CASE("is_ifr classifies the canonical cases") {
    CHECK(is_ifr(DemandDistribution::geometric(0.5)));
    CHECK(is_ifr(DemandDistribution::deterministic(5)));
    CHECK(is_ifr(DemandDistribution::truncated_poisson(3.0)));

    // Two-point distribution: mass 1-1/M at 0 and 1/M at M.
    const int M = 10;
    std::vector<double> pmf(M + 1, 0.0);
    pmf[0] = 1.0 - 1.0 / M;
    pmf[M] = 1.0 / M;
    CHECK_FALSE(is_ifr(DemandDistribution::finite_pmf(pmf)));
}

TEST_CASE("constraints check feasibility") {
    Constraint card = Constraint::cardinality(3);
    CHECK(card.feasible({1, 2, 0}));
    CHECK_FALSE(card.feasible({2, 2, 0}));

    Constraint bud = Constraint::budget(2.5, {1.0, 2.0});
    CHECK(bud.feasible({0, 1}));
    CHECK_FALSE(bud.feasible({1, 1}));
    CHECK_THROWS_AS(Constraint::budget(1.0, {0.0}), ValidationError);
}

TEST_CASE("multi-type validation shares prices and permutes every weight row") {
    ModelInput in;
    in.prices = {1.0, 5.0};
    in.type_weights = {{1.0, 2.0}, {3.0, 4.0}};
    in.type_lambda = {0.25, 0.75};
    CheckedModel model = validate(in);
    CHECK(model.types.m() == 2);
    CHECK(model.types.types[0].prices == std::vector<double>{5.0, 1.0});
    CHECK(model.types.types[0].weights == std::vector<double>{2.0, 1.0});
    CHECK(model.types.types[1].weights == std::vector<double>{4.0, 3.0});

    in.type_lambda = {0.5, 0.75};
    CHECK_THROWS_AS(validate(in), ValidationError);
}
