#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "assortflow/io.hpp"

namespace {

using assortflow::CheckedModel;
using assortflow::Constraint;
using assortflow::InventoryVector;
using assortflow::PolicySpec;
using assortflow::SimResult;
using json = nlohmann::json;

int resolve_threads(int threads_flag) {
    if (threads_flag > 0) return threads_flag;
    if (const char* env = std::getenv("ASSORTFLOW_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    return 1;
}

void emit(const std::string& out_path, std::string text) {
    if (text.empty() || text.back() != '\n') text += '\n';
    if (out_path.empty()) {
        std::cout << text;
    } else {
        assortflow::io::write_text(out_path, text);
    }
}

const Constraint& need_constraint(const CheckedModel& model) {
    assortflow::require(model.constraint.has_value(), "config needs a \"constraint\" block");
    return *model.constraint;
}

const assortflow::DemandDistribution& need_demand(const CheckedModel& model) {
    assortflow::require(model.demand.has_value(), "config needs a \"demand\" block");
    return *model.demand;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"assortflow: inventory and assortment planning under MNL demand"};
    app.require_subcommand(1);

    std::string config_path, out_path, format = "json", policy_name = "all", inventory_path,
                suite;
    double epsilon = 0.05;
    long reps = 100000, simulate_reps = 0, trials = 0;
    uint64_t seed = 1;
    int threads_flag = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "output file (stdout when omitted)");
        cmd->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--seed", seed, "rng seed");
        cmd->add_option("--threads", threads_flag,
                        "worker threads (ASSORTFLOW_THREADS as fallback)");
    };

    CLI::App* solve_da = app.add_subcommand("solve-da", "plan a starting inventory (no "
                                                        "personalization)");
    solve_da->add_option("--config", config_path, "model config (JSON)")->required();
    solve_da->add_option("--epsilon", epsilon, "accuracy parameter in (0,1)");
    solve_da->add_option("--simulate", simulate_reps, "append a simulation with this many reps");
    add_common(solve_da);

    CLI::App* solve_dap = app.add_subcommand("solve-dap", "plan inventory with per-type "
                                                          "allocations");
    solve_dap->add_option("--config", config_path, "model config (JSON)")->required();
    solve_dap->add_option("--epsilon", epsilon, "accuracy parameter in (0,1)");
    add_common(solve_dap);

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo revenue of an inventory");
    simulate->add_option("--config", config_path, "model config (JSON)")->required();
    simulate->add_option("--inventory", inventory_path,
                         "plan/result JSON carrying \"inventory\"")
        ->required();
    simulate->add_option("--policy", policy_name, "all|greedy|sampling")
        ->check(CLI::IsMember({"all", "greedy", "sampling"}));
    simulate->add_option("--reps", reps, "replications");
    add_common(simulate);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "so|separability|cdlp|bounds|guarantees")->required();
    verify->add_option("--trials", trials, "sweep size (suite default when 0)");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    int threads = resolve_threads(threads_flag);
    try {
        if (*solve_da) {
            CheckedModel model = assortflow::io::load_model_file(config_path);
            assortflow::DaPlan plan =
                assortflow::solve_da(model.catalog, need_constraint(model), need_demand(model),
                                     epsilon);
            json out = assortflow::io::da_plan_to_json(model, plan);
            if (simulate_reps > 0) {
                SimResult sim = assortflow::simulate_da(model.catalog, plan.inventory,
                                                        need_demand(model), simulate_reps, seed,
                                                        threads);
                out["simulation"] = assortflow::io::sim_result_to_json(model, sim);
            }
            emit(out_path, out.dump(2));
        } else if (*solve_dap) {
            CheckedModel model = assortflow::io::load_model_file(config_path);
            assortflow::DapPlan plan = assortflow::optimize_dap(
                model.types, need_constraint(model), need_demand(model), epsilon);
            emit(out_path, assortflow::io::dap_plan_to_json(model, plan).dump(2));
        } else if (*simulate) {
            CheckedModel model = assortflow::io::load_model_file(config_path);
            std::ifstream in(inventory_path);
            assortflow::require(in.good(), "cannot open inventory file: " + inventory_path);
            json plan_doc;
            in >> plan_doc;
            InventoryVector c = assortflow::io::inventory_from_json(model, plan_doc);
            if (model.constraint) {
                assortflow::require(model.constraint->feasible(c),
                                    "inventory violates the config's constraint");
            }
            SimResult sim;
            assortflow::SamplingPolicy sampling;
            if (policy_name == "sampling") {
                assortflow::require(model.demand && model.demand->is_deterministic(),
                                    "sampling policy needs deterministic demand");
                sampling = assortflow::build_sampling_policy(
                    model.types, c, model.demand->deterministic_value());
                sim = assortflow::simulate_dap(model.types, c,
                                               PolicySpec::sampling_from(sampling),
                                               need_demand(model), reps, seed, threads);
            } else if (policy_name == "greedy") {
                sim = assortflow::simulate_dap(model.types, c, PolicySpec::greedy(),
                                               need_demand(model), reps, seed, threads);
            } else if (model.multi_type()) {
                sim = assortflow::simulate_dap(model.types, c, PolicySpec::offer_all(),
                                               need_demand(model), reps, seed, threads);
            } else {
                sim = assortflow::simulate_da(model.catalog, c, need_demand(model), reps, seed,
                                              threads);
            }
            if (format == "csv") {
                emit(out_path, assortflow::io::sim_result_to_csv(model, sim));
            } else {
                emit(out_path, assortflow::io::sim_result_to_json(model, sim).dump(2));
            }
        } else if (*verify) {
            assortflow::verify::SuiteReport report =
                assortflow::verify::run_suite(suite, trials, seed, threads);
            if (format == "csv") {
                emit(out_path, assortflow::io::suite_report_to_csv(report));
            } else {
                emit(out_path, assortflow::io::suite_report_to_json(report, trials, seed).dump(2));
            }
            for (const auto& c : report.checks) {
                std::cerr << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
                          << " margin=" << c.margin << '\n';
            }
            if (!report.pass()) return 1;
        }
    } catch (const assortflow::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const assortflow::UnsupportedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
