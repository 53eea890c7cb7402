#pragma once

#include <string>

#include "json.hpp"

#include "assortflow/catalog.hpp"
#include "assortflow/da_planner.hpp"
#include "assortflow/dap_planner.hpp"
#include "assortflow/simulator.hpp"
#include "assortflow/verify.hpp"

namespace assortflow::io {

using json = nlohmann::json;

// Parses and validates a model config document; throws ValidationError with
// a field-anchored message on any defect.
CheckedModel load_model(const json& doc);
CheckedModel load_model_file(const std::string& path);

// Doubles in result documents are rounded to 9 significant digits so output
// files diff cleanly.
double round9(double v);

json da_plan_to_json(const CheckedModel& model, const DaPlan& plan);
json dap_plan_to_json(const CheckedModel& model, const DapPlan& plan);
json sim_result_to_json(const CheckedModel& model, const SimResult& sim);
json suite_report_to_json(const verify::SuiteReport& report, long trials, uint64_t seed);

std::string suite_report_to_csv(const verify::SuiteReport& report);
std::string sim_result_to_csv(const CheckedModel& model, const SimResult& sim);

// Reads an inventory (user order) from a plan/result document.
InventoryVector inventory_from_json(const CheckedModel& model, const json& doc);

void write_text(const std::string& path, const std::string& text);

}  // namespace assortflow::io
