#include "iotdef/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "iotdef/harm.hpp"
#include "iotdef/report.hpp"
#include "iotdef/scenarios.hpp"

namespace iotdef {

namespace {

bool parse_scaled_name(const std::string& name, int& n_iot) {
    if (name.rfind("2-50-", 0) != 0) return false;
    const std::string tail = name.substr(5);
    if (tail.empty()) return false;
    std::size_t used = 0;
    int v;
    try {
        v = std::stoi(tail, &used);
    } catch (const std::exception&) {
        return false;
    }
    if (used != tail.size()) return false;
    n_iot = v;
    return true;
}

IoTNetwork load_network(const RunConfig& config) {
    const bool have_scenario = !config.scenario.empty();
    const bool have_path = !config.network_path.empty();
    if (have_scenario == have_path)
        throw std::invalid_argument(
            "exactly one of --scenario and --network must be given");
    if (have_path) return build_network(load_network_spec(config.network_path));
    if (config.scenario == "pacs") return build_network(pacs_case_study());
    int n_iot = 0;
    if (parse_scaled_name(config.scenario, n_iot))
        return build_network(scaled_network(n_iot));
    throw std::invalid_argument("unknown scenario: " + config.scenario);
}

std::vector<double> beta_grid(const RunConfig& config) {
    if (!config.betas.empty()) {
        for (double beta : config.betas)
            if (beta < 0.0 || beta > 1.0)
                throw std::invalid_argument("beta weights must lie in [0,1]");
        return config.betas;
    }
    std::vector<double> betas;
    for (int i = 0; i <= 10; ++i) betas.push_back(i / 10.0);
    return betas;
}

// Writes to the configured file, or to `fallback` when no path is set.
int with_output(const RunConfig& config, std::ostream& fallback,
                std::ostream& err,
                const std::function<void(std::ostream&)>& body) {
    if (config.out_path.empty()) {
        body(fallback);
        return exit_ok;
    }
    std::ofstream file(config.out_path);
    if (!file) {
        err << "cannot open output file: " << config.out_path << "\n";
        return exit_usage;
    }
    body(file);
    return exit_ok;
}

std::string format_pct(double fraction) {
    // Half-up at the displayed precision (printf would round 31.25 to 31.2).
    const double rounded = std::floor(fraction * 1000.0 + 0.5) / 10.0;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", rounded);
    return buf;
}

}  // namespace

int cmd_optimize(const RunConfig& config, std::ostream& out,
                 std::ostream& err) {
    try {
        const IoTNetwork net = load_network(config);
        const DeploymentSpace space(net);
        const std::vector<double> betas = beta_grid(config);
        const OptimizationProblem problem = deployment_problem(net, space);

        const GenerationLogger logger = [&](const GenerationStats& s) {
            out << "gen " << s.generation << " front0 " << s.front_size
                << " best dnf " << format_double(s.best_dnf) << " nip "
                << format_double(s.best_nip) << " rcf "
                << format_double(s.best_rcf) << "\n";
        };
        const GAResult result = nsga2(problem, config.ga, logger);

        ParetoFront front = result.front;
        if (config.budget) {
            front = budget_filter(front, *config.budget, total_cost(net));
            out << "budget " << *config.budget << " keeps "
                << front.members.size() << " of "
                << result.front.members.size() << " frontier points\n";
        }
        const int rc = with_output(config, out, err, [&](std::ostream& o) {
            write_frontier_csv(o, net, space, front);
        });
        if (rc != exit_ok) return rc;

        if (config.budget && !front.members.empty()) {
            const auto sweep = scalarize_sweep(front.members, betas);
            out << "beta,dv_bits,dnf,nip,score\n";
            for (const auto& entry : sweep) {
                for (int w : entry.winners) {
                    const auto& member = front.members[w];
                    for (const auto& dv : member.deployments) {
                        out << format_double(entry.beta) << ','
                            << space.encode(dv) << ','
                            << format_double(member.fitness.dnf) << ','
                            << format_double(member.fitness.nip) << ','
                            << format_double(entry.best_score) << "\n";
                    }
                }
            }
        }
        return exit_ok;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return exit_usage;
    }
}

int cmd_exhaustive(const RunConfig& config, std::ostream& out,
                   std::ostream& err) {
    try {
        const IoTNetwork net = load_network(config);
        const DeploymentSpace space(net);
        EsaResult result;
        try {
            result = exhaustive_search(net, space, config.esa_limit);
        } catch (const std::length_error& e) {
            err << e.what() << "\n";
            return exit_limit;
        }
        out << "evaluated " << result.evaluations << " valid deployments, "
            << result.front.members.size() << " frontier points\n";
        return with_output(config, out, err, [&](std::ostream& o) {
            write_frontier_csv(o, net, space, result.front);
        });
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return exit_usage;
    }
}

int cmd_evaluate(const RunConfig& config, std::ostream& out,
                 std::ostream& err) {
    try {
        const IoTNetwork net = load_network(config);
        const DeploymentSpace space(net);
        const DeploymentVector dv = parse_deployment(config.dv_literal, space);
        const EvaluationResult result = evaluate_full(net, dv);

        const int rc = with_output(config, out, err, [&](std::ostream& o) {
            o << metric_csv_header() << "\n";
            o << metric_csv_row(space.encode(dv), result) << "\n";
        });
        if (rc != exit_ok) return rc;
        if (!config.paths_out.empty()) {
            std::ofstream paths_file(config.paths_out);
            if (!paths_file) {
                err << "cannot open output file: " << config.paths_out << "\n";
                return exit_usage;
            }
            const Harm harm = build_harm(apply_deployment(net, dv));
            dump_paths(harm, enumerate_attack_paths(harm), paths_file);
        }
        if (result.no_decoy_paths)
            err << "warning: no decoy-target paths (degenerate deployment)\n";
        err << std::setprecision(3) << std::fixed << "display: dnf "
            << result.fitness.dnf << " nip " << result.fitness.nip << " rcf "
            << result.fitness.rcf << std::defaultfloat
            << std::setprecision(6) << "\n";
        return exit_ok;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return exit_usage;
    }
}

int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const IoTNetwork net = load_network(config);
        const auto named = standard_comparison(config.scenario == "pacs");
        const auto rows = comparison_report(net, named);
        return with_output(config, out, err, [&](std::ostream& o) {
            o << "name,pd_pct,ppd_pct,naprt,napdt,dcdm\n";
            for (const auto& row : rows) {
                o << row.name << ',' << format_pct(row.pd) << ','
                  << format_pct(row.ppd) << ',' << row.naprt << ','
                  << row.napdt << ',' << row.dcdm << "\n";
            }
        });
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return exit_usage;
    }
}

int cmd_benchmark(const RunConfig& config, std::ostream& out,
                  std::ostream& err) {
    try {
        std::vector<int> grid;
        if (config.step_iot > 0)
            for (int n = config.min_iot; n <= config.max_iot;
                 n += config.step_iot)
                grid.push_back(n);
        if (grid.empty()) {
            err << "empty benchmark grid\n";
            return exit_usage;
        }
        std::vector<BenchmarkRecord> records;
        try {
            records = benchmark(grid, config.ga, config.esa_limit);
        } catch (const std::length_error& e) {
            err << e.what() << "\n";
            return exit_limit;
        }
        return with_output(config, out, err, [&](std::ostream& o) {
            o << "network_label,bits,pop,gens,ga_seconds,esa_seconds,"
                 "valid_space,ratio_dnf,ratio_nip,ratio_rcf,ratio_headline\n";
            for (const auto& r : records) {
                o << r.label << ',' << r.bits << ',' << r.pop << ',' << r.gens
                  << ',' << format_double(r.ga_seconds) << ','
                  << format_double(r.esa_seconds) << ',' << r.valid_space
                  << ',' << format_double(r.ratio_dnf) << ','
                  << format_double(r.ratio_nip) << ','
                  << format_double(r.ratio_rcf) << ','
                  << format_double(r.headline) << "\n";
            }
        });
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return exit_usage;
    }
}

}  // namespace iotdef
