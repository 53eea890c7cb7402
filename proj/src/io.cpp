#include "assortflow/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace assortflow::io {

namespace {

std::vector<double> get_double_array(const json& doc, const std::string& key) {
    require(doc.contains(key), "missing field \"" + key + "\"");
    require(doc[key].is_array(), "field \"" + key + "\" must be an array");
    std::vector<double> out;
    for (const auto& v : doc[key]) {
        require(v.is_number(), "field \"" + key + "\" must contain numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

DemandDistribution parse_demand(const json& d) {
    require(d.contains("kind"), "demand: missing field \"kind\"");
    std::string kind = d["kind"].get<std::string>();
    if (kind == "deterministic") {
        require(d.contains("T"), "demand: missing field \"T\"");
        return DemandDistribution::deterministic(d["T"].get<int>());
    }
    if (kind == "geometric") {
        require(d.contains("p"), "demand: missing field \"p\"");
        return DemandDistribution::geometric(d["p"].get<double>());
    }
    if (kind == "shifted_geometric") {
        require(d.contains("p") && d.contains("shift"),
                "demand: shifted_geometric needs \"shift\" and \"p\"");
        return DemandDistribution::shifted_geometric(d["shift"].get<int>(), d["p"].get<double>());
    }
    if (kind == "poisson") {
        require(d.contains("mean"), "demand: missing field \"mean\"");
        return DemandDistribution::truncated_poisson(d["mean"].get<double>());
    }
    if (kind == "pmf") {
        return DemandDistribution::finite_pmf(get_double_array(d, "pmf"));
    }
    throw ValidationError("demand: unknown kind \"" + kind + "\"");
}

Constraint parse_constraint(const json& c) {
    require(c.contains("kind"), "constraint: missing field \"kind\"");
    std::string kind = c["kind"].get<std::string>();
    if (kind == "cardinality") {
        require(c.contains("K"), "constraint: missing field \"K\"");
        return Constraint::cardinality(c["K"].get<int>());
    }
    if (kind == "budget") {
        require(c.contains("B"), "constraint: missing field \"B\"");
        return Constraint::budget(c["B"].get<double>(), get_double_array(c, "b_i"));
    }
    throw ValidationError("constraint: unknown kind \"" + kind + "\"");
}

json fi_to_json(const std::vector<double>& v) {
    json arr = json::array();
    for (double x : v) arr.push_back(round9(x));
    return arr;
}

}  // namespace

double round9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return std::strtod(buf, nullptr);
}

CheckedModel load_model(const json& doc) {
    ModelInput input;
    input.prices = get_double_array(doc, "prices");
    if (doc.contains("v0")) input.v0 = doc["v0"].get<double>();
    if (doc.contains("types")) {
        require(doc["types"].is_array() && !doc["types"].empty(),
                "field \"types\" must be a non-empty array");
        for (const auto& t : doc["types"]) {
            input.type_weights.push_back(get_double_array(t, "weights"));
            require(t.contains("lambda"), "types[]: missing field \"lambda\"");
            input.type_lambda.push_back(t["lambda"].get<double>());
        }
    } else {
        input.weights = get_double_array(doc, "weights");
    }
    if (doc.contains("demand")) input.demand = parse_demand(doc["demand"]);
    if (doc.contains("constraint")) input.constraint = parse_constraint(doc["constraint"]);
    return validate(input);
}

CheckedModel load_model_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open config file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("config parse error: ") + e.what());
    }
    return load_model(doc);
}

json da_plan_to_json(const CheckedModel& model, const DaPlan& plan) {
    json out;
    out["inventory"] = model.to_user_order(plan.inventory);
    out["objective"] = round9(plan.fluid_objective);
    out["telemetry"] = {
        {"y0", round9(plan.chosen_y0)},
        {"grid_index", plan.grid_index},
        {"rounding", plan.rounding},
        {"fallback_used", plan.fallback_used},
    };
    return out;
}

json dap_plan_to_json(const CheckedModel& model, const DapPlan& plan) {
    json out;
    out["inventory"] = model.to_user_order(plan.inventory);
    out["objective"] = round9(plan.fhat);
    json family = json::array();
    for (std::size_t t = 0; t < plan.support.size(); ++t) {
        json rows = json::array();
        for (const auto& row : plan.allocations[t]) {
            rows.push_back(fi_to_json(model.to_user_order(row)));
        }
        family.push_back({{"T", plan.support[t]},
                          {"prob", round9(plan.support_prob[t])},
                          {"allocation", rows}});
    }
    if (family.size() == 1) {
        out["allocation"] = family[0]["allocation"];
    } else {
        out["allocation_family"] = family;
    }
    out["telemetry"] = {{"tau", round9(plan.chosen_tau)}, {"grid_index", plan.grid_index}};
    return out;
}

json sim_result_to_json(const CheckedModel& model, const SimResult& sim) {
    json out;
    out["mean"] = round9(sim.mean);
    out["stderr"] = round9(sim.stderr_);
    out["reps"] = sim.reps;
    out["seed"] = sim.seed;
    out["consumption"] = fi_to_json(model.to_user_order(sim.mean_consumption));
    return out;
}

json suite_report_to_json(const verify::SuiteReport& report, long trials, uint64_t seed) {
    json out;
    out["suite"] = report.suite;
    out["trials"] = trials;
    out["seed"] = seed;
    out["pass"] = report.pass();
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name}, {"margin", round9(c.margin)}, {"pass", c.pass}});
    }
    out["checks"] = checks;
    return out;
}

namespace {

// RFC 4180: quote fields containing commas, quotes, or newlines.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string csv_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

}  // namespace

std::string suite_report_to_csv(const verify::SuiteReport& report) {
    std::ostringstream out;
    out << "suite,check,margin,pass\r\n";
    for (const auto& c : report.checks) {
        out << csv_field(report.suite) << ',' << csv_field(c.name) << ',' << csv_num(c.margin)
            << ',' << (c.pass ? "true" : "false") << "\r\n";
    }
    return out.str();
}

std::string sim_result_to_csv(const CheckedModel& model, const SimResult& sim) {
    std::ostringstream out;
    out << "mean,stderr,reps,seed";
    for (std::size_t i = 0; i < sim.mean_consumption.size(); ++i) out << ",consumption_" << i + 1;
    out << "\r\n";
    out << csv_num(sim.mean) << ',' << csv_num(sim.stderr_) << ',' << sim.reps << ',' << sim.seed;
    for (double v : model.to_user_order(sim.mean_consumption)) out << ',' << csv_num(v);
    out << "\r\n";
    return out.str();
}

InventoryVector inventory_from_json(const CheckedModel& model, const json& doc) {
    require(doc.contains("inventory"), "missing field \"inventory\"");
    std::vector<int> user;
    for (const auto& v : doc["inventory"]) user.push_back(v.get<int>());
    require(static_cast<int>(user.size()) == model.n(), "inventory length differs from catalog");
    InventoryVector internal(model.n());
    for (int i = 0; i < model.n(); ++i) {
        require(user[model.perm[i]] >= 0, "negative inventory entry");
        internal[i] = user[model.perm[i]];
    }
    return internal;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), "cannot open output file: " + path);
    out << text;
}

}  // namespace assortflow::io
