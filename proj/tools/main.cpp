#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "iotdef/cli.hpp"

namespace {

void add_network_source(CLI::App* cmd, iotdef::RunConfig& config) {
    auto* network = cmd->add_option("--network", config.network_path,
                                    "network spec file (JSON)");
    auto* scenario = cmd->add_option(
        "--scenario", config.scenario,
        "builtin scenario: pacs, or 2-50-N for N in 50..200 step 25");
    network->excludes(scenario);
    scenario->excludes(network);
}

void add_common(CLI::App* cmd, iotdef::RunConfig& config) {
    cmd->add_option("--out", config.out_path, "output CSV path");
    cmd->add_option("--jobs", config.ga.jobs,
                    "worker threads for fitness evaluation");
}

void add_ga_params(CLI::App* cmd, iotdef::RunConfig& config) {
    cmd->add_option("--pop", config.ga.population_size, "population size");
    cmd->add_option("--gens", config.ga.max_generations, "generations");
    cmd->add_option("--crossover", config.ga.crossover_rate, "crossover rate");
    cmd->add_option("--mutation", config.ga.mutation_rate, "mutation rate");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Pareto-optimal decoy placement and patch contracts for subnet-"
        "structured IoT networks"};
    app.require_subcommand(1);

    iotdef::RunConfig config;

    auto* optimize = app.add_subcommand(
        "optimize", "search the deployment space with NSGA-II");
    add_network_source(optimize, config);
    add_common(optimize, config);
    add_ga_params(optimize, config);
    optimize->add_option("--seed", config.ga.seed, "random seed")->required();
    iotdef::Money budget = -1;
    optimize->add_option("--budget", budget,
                         "budget filter applied to the frontier");
    optimize->add_option("--betas", config.betas,
                         "scalarization weights (default 0..1 step 0.1)")
        ->delimiter(',');

    auto* exhaustive = app.add_subcommand(
        "exhaustive", "evaluate every valid deployment (exact frontier)");
    add_network_source(exhaustive, config);
    add_common(exhaustive, config);
    exhaustive->add_option("--limit", config.esa_limit,
                           "refuse valid spaces larger than this");

    auto* evaluate =
        app.add_subcommand("evaluate", "metric row for one deployment vector");
    add_network_source(evaluate, config);
    add_common(evaluate, config);
    evaluate
        ->add_option("--dv", config.dv_literal,
                     "deployment vector, comma-separated integers")
        ->required();
    evaluate->add_option("--paths", config.paths_out,
                         "dump the enumerated attack paths to this file");

    auto* compare =
        app.add_subcommand("compare", "defense-mechanism comparison table");
    add_network_source(compare, config);
    add_common(compare, config);

    auto* bench = app.add_subcommand(
        "benchmark", "GA vs. exhaustive search over the scaling family");
    add_common(bench, config);
    add_ga_params(bench, config);
    bench->add_option("--seed", config.ga.seed, "random seed");
    bench->add_option("--min-iot", config.min_iot, "smallest iot count");
    bench->add_option("--max-iot", config.max_iot, "largest iot count");
    bench->add_option("--step", config.step_iot, "iot count step");
    bench->add_option("--limit", config.esa_limit,
                      "refuse valid spaces larger than this");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return iotdef::exit_usage;
    }

    if (optimize->parsed()) {
        if (budget >= 0) config.budget = budget;
        return iotdef::cmd_optimize(config, std::cout, std::cerr);
    }
    if (exhaustive->parsed())
        return iotdef::cmd_exhaustive(config, std::cout, std::cerr);
    if (evaluate->parsed())
        return iotdef::cmd_evaluate(config, std::cout, std::cerr);
    if (compare->parsed())
        return iotdef::cmd_compare(config, std::cout, std::cerr);
    if (bench->parsed())
        return iotdef::cmd_benchmark(config, std::cout, std::cerr);
    return iotdef::exit_usage;
}
