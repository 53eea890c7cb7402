#include "doctest.h"

#include "assortflow/io.hpp"

using namespace assortflow;
using json = nlohmann::json;

TEST_CASE("single-type config round trip") {
    json doc = {
        {"prices", {1.0, 3.0, 2.0}},
        {"weights", {0.5, 1.5, 2.5}},
        {"demand", {{"kind", "deterministic"}, {"T", 6}}},
        {"constraint", {{"kind", "cardinality"}, {"K", 4}}},
    };
    CheckedModel model = io::load_model(doc);
    CHECK(model.catalog.prices == std::vector<double>{3.0, 2.0, 1.0});
    CHECK(model.demand->deterministic_value() == 6);
    CHECK(model.constraint->K == 4);

    json plan = {{"inventory", {0, 2, 1}}};  // user order
    InventoryVector c = io::inventory_from_json(model, plan);
    CHECK(c == InventoryVector{2, 1, 0});
}

TEST_CASE("missing fields produce validation errors") {
    json doc = {{"weights", {1.0}}};
    CHECK_THROWS_AS(io::load_model(doc), ValidationError);

    json bad_demand = {
        {"prices", {1.0}}, {"weights", {1.0}}, {"demand", {{"kind", "geometric"}}}};
    CHECK_THROWS_AS(io::load_model(bad_demand), ValidationError);
}

TEST_CASE("multi-type config with budget constraint") {
    json doc = {
        {"prices", {2.0, 5.0}},
        {"types",
         {{{"weights", {1.0, 2.0}}, {"lambda", 0.5}},
          {{"weights", {2.0, 1.0}}, {"lambda", 0.5}}}},
        {"constraint", {{"kind", "budget"}, {"B", 3.0}, {"b_i", {1.0, 2.0}}}},
    };
    CheckedModel model = io::load_model(doc);
    CHECK(model.multi_type());
    CHECK(model.types.types[0].weights == std::vector<double>{2.0, 1.0});
    CHECK(model.constraint->b == std::vector<double>{2.0, 1.0});
}

TEST_CASE("doubles render at nine significant digits") {
    CHECK(io::round9(1.0 / 3.0) == doctest::Approx(0.333333333).epsilon(1e-12));
    CHECK(io::round9(123456789012.0) == 123456789000.0);
}

TEST_CASE("csv export quotes per RFC 4180") {
    verify::SuiteReport report;
    report.suite = "so";
    report.checks.push_back({"has,comma", 0.5, true});
    std::string csv = io::suite_report_to_csv(report);
    CHECK(csv.find("\"has,comma\"") != std::string::npos);
    CHECK(csv.rfind("suite,check,margin,pass\r\n", 0) == 0);
}
