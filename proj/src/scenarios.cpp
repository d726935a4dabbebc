#include "iotdef/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <cmath>
#include <stdexcept>

namespace iotdef {

namespace {

DeviceType make_type(std::string name, DeviceCategory category, int count,
                     std::string subnet, Money emulated,
                     std::optional<Money> full_os = std::nullopt,
                     std::optional<Money> patch = std::nullopt) {
    DeviceType t;
    t.name = std::move(name);
    t.category = category;
    t.count = count;
    t.subnet = std::move(subnet);
    t.decoy_price_emulated = emulated;
    t.decoy_price_full_os = full_os;
    t.patch_price = patch;
    return t;
}

}  // namespace

NetworkSpec pacs_case_study() {
    NetworkSpec spec;
    spec.subnets = {{"VLAN1", false}, {"VLAN2", true}, {"VLAN3", true}};
    spec.subnet_edges = {{"VLAN2", "VLAN1"}, {"VLAN3", "VLAN1"},
                         {"VLAN3", "VLAN2"}};
    spec.device_types = {
        make_type("PACS server (Linux)", DeviceCategory::server, 2, "VLAN1",
                  400, 1500),
        make_type("PACS client (Win8)", DeviceCategory::client, 5, "VLAN2", 300),
        make_type("PACS client (Win10)", DeviceCategory::client, 5, "VLAN2",
                  300),
        make_type("Ultrasound (Win7)", DeviceCategory::iot, 1, "VLAN3", 200,
                  std::nullopt, 2000),
        make_type("MRI (Win7)", DeviceCategory::iot, 1, "VLAN3", 200,
                  std::nullopt, 6000),
        make_type("XRay (Win7)", DeviceCategory::iot, 1, "VLAN3", 200,
                  std::nullopt, 1000),
        make_type("CT (Win7)", DeviceCategory::iot, 1, "VLAN3", 200,
                  std::nullopt, 5000),
    };
    spec.p_emulated = 0.5;
    spec.p_full_os = 0.9;
    spec.intelligence_cost = 20000;
    return spec;
}

NetworkSpec scaled_network(int n_iot) {
    if (n_iot < 50 || n_iot > 200 || n_iot % 25 != 0)
        throw std::invalid_argument(
            "iot device count must lie on the 50..200 grid with step 25");
    const int iot_types = n_iot / 25;

    NetworkSpec spec;
    spec.subnets.push_back({"VLAN-server", false});
    spec.subnets.push_back({"VLAN-client", true});
    for (int i = 1; i <= iot_types; ++i)
        spec.subnets.push_back({"VLAN-iot" + std::to_string(i), true});

    spec.subnet_edges.emplace_back("VLAN-client", "VLAN-server");
    for (int i = 1; i <= iot_types; ++i) {
        const std::string vlan = "VLAN-iot" + std::to_string(i);
        spec.subnet_edges.emplace_back(vlan, "VLAN-client");
        spec.subnet_edges.emplace_back(vlan, "VLAN-server");
    }

    spec.device_types.push_back(make_type("Server (Linux)",
                                          DeviceCategory::server, 2,
                                          "VLAN-server", 400, 1500));
    spec.device_types.push_back(make_type(
        "Client (Win8)", DeviceCategory::client, 25, "VLAN-client", 300));
    spec.device_types.push_back(make_type(
        "Client (Win10)", DeviceCategory::client, 25, "VLAN-client", 300));
    for (int i = 1; i <= iot_types; ++i) {
        // One manufacturer per type; patch contracts step up by 500.
        const Money patch = 1000 + 500 * static_cast<Money>(i - 1);
        spec.device_types.push_back(
            make_type("IoT type " + std::to_string(i), DeviceCategory::iot, 25,
                      "VLAN-iot" + std::to_string(i), 200, std::nullopt, patch));
    }
    spec.p_emulated = 0.5;
    spec.p_full_os = 0.9;
    spec.intelligence_cost = 20000;
    return spec;
}

DeploymentVector pacs_deployment(const std::string& name) {
    auto dv = [](std::vector<int> decoys,
                 std::vector<int> patches) -> DeploymentVector {
        return {std::move(decoys), std::move(patches)};
    };
    if (name == "dv1") return dv({2, 1, 0, 1, 0, 0, 0}, {1, 0, 1, 1});
    if (name == "P1") return dv({1, 1, 1, 0, 1, 1, 0}, {1, 0, 1, 0});
    if (name == "P2") return dv({2, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0});
    if (name == "P3") return dv({2, 0, 0, 0, 0, 0, 1}, {1, 0, 1, 0});
    if (name == "P4") return dv({2, 0, 0, 1, 0, 0, 1}, {1, 0, 1, 0});
    if (name == "P5") return dv({2, 1, 1, 1, 1, 1, 1}, {0, 0, 1, 0});
    if (name == "A*") return dv({2, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 1});
    if (name == "B*") return dv({1, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 1});
    if (name == "C*") return dv({2, 0, 0, 0, 0, 0, 0}, {1, 1, 1, 1});
    if (name == "D*") return dv({1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0});
    throw std::invalid_argument("unknown case-study deployment: " + name);
}

double BudgetConstraint::min_rcf(Money tc) const {
    if (tc <= 0) throw std::domain_error("total cost must be positive");
    return static_cast<double>(tc - budget) / static_cast<double>(tc);
}

ParetoFront budget_filter(const ParetoFront& front, Money budget, Money tc) {
    const double threshold = BudgetConstraint{budget}.min_rcf(tc);
    ParetoFront out;
    for (const auto& member : front.members)
        if (member.fitness.rcf >= threshold) out.members.push_back(member);
    return out;
}

std::vector<SweepEntry> scalarize_sweep(const std::vector<ParetoMember>& points,
                                        const std::vector<double>& betas) {
    if (points.empty())
        throw std::invalid_argument("scalarization over an empty point set");
    constexpr double tie_eps = 1e-9;
    std::vector<SweepEntry> out;
    out.reserve(betas.size());
    for (double beta : betas) {
        SweepEntry entry;
        entry.beta = beta;
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& p : points)
            best = std::max(best,
                            beta * p.fitness.dnf + (1.0 - beta) * p.fitness.nip);
        for (std::size_t i = 0; i < points.size(); ++i) {
            const double score = beta * points[i].fitness.dnf +
                                 (1.0 - beta) * points[i].fitness.nip;
            if (score >= best - tie_eps)
                entry.winners.push_back(static_cast<int>(i));
        }
        entry.best_score = best;
        out.push_back(std::move(entry));
    }
    return out;
}

namespace {

DeploymentVector builtin_scenario(const IoTNetwork& net,
                                  const std::string& name) {
    const DeploymentSpace space(net);
    DeploymentVector dv;
    dv.decoy_part.assign(space.decoy_types().size(), 0);
    dv.patch_part.assign(space.patch_types().size(), 0);
    if (name == "no defense") return dv;
    if (name == "only patch") {
        dv.patch_part.assign(dv.patch_part.size(), 1);
        return dv;
    }
    if (name == "only deception") {
        // Full-OS server decoys plus every other decoy emulated.
        for (std::size_t i = 0; i < dv.decoy_part.size(); ++i)
            dv.decoy_part[i] = space.decoy_max(static_cast<int>(i)) == 2 ? 2 : 1;
        return dv;
    }
    throw std::invalid_argument("unknown comparison scenario: " + name);
}

}  // namespace

std::vector<ComparisonRow> comparison_report(
    const IoTNetwork& net, const std::vector<NamedDeployment>& deployments) {
    std::vector<ComparisonRow> rows;
    rows.reserve(deployments.size());
    for (const auto& named : deployments) {
        DeploymentVector dv;
        if (named.decoy_part.empty() && named.patch_part.empty()) {
            dv = builtin_scenario(net, named.name);
        } else {
            dv.decoy_part = named.decoy_part;
            dv.patch_part = named.patch_part;
        }
        const AnalysisMetrics m = analysis_metrics(net, dv);
        rows.push_back(
            {named.name, m.pd, m.ppd, m.naprt, m.napdt, m.dcdm});
    }
    return rows;
}

std::vector<NamedDeployment> standard_comparison(bool include_pacs_points) {
    std::vector<NamedDeployment> out = {
        {"no defense", {}, {}},
        {"only patch", {}, {}},
        {"only deception", {}, {}},
    };
    if (include_pacs_points) {
        for (const char* name : {"P1", "P4", "P5"}) {
            const DeploymentVector dv = pacs_deployment(name);
            out.push_back({std::string("both with dv_") + name, dv.decoy_part,
                           dv.patch_part});
        }
    }
    return out;
}

std::vector<BenchmarkRecord> benchmark(const std::vector<int>& n_iot_grid,
                                       const std::vector<GAParams>& params_list,
                                       std::uint64_t esa_limit) {
    using clock = std::chrono::steady_clock;
    std::vector<BenchmarkRecord> records;
    records.reserve(n_iot_grid.size() * params_list.size());
    for (int n_iot : n_iot_grid) {
        const IoTNetwork net = build_network(scaled_network(n_iot));
        const DeploymentSpace space(net);
        const OptimizationProblem problem = deployment_problem(net, space);

        const auto esa_start = clock::now();
        const EsaResult esa = exhaustive_search(net, space, esa_limit);
        const double esa_seconds =
            std::chrono::duration<double>(clock::now() - esa_start).count();

        for (const GAParams& params : params_list) {
            BenchmarkRecord rec;
            rec.label = "2-50-" + std::to_string(n_iot);
            rec.bits = space.width();
            rec.pop = params.population_size;
            rec.gens = params.max_generations;
            rec.valid_space = space.valid_count();
            rec.esa_seconds = esa_seconds;

            const auto ga_start = clock::now();
            const GAResult ga = nsga2(problem, params);
            rec.ga_seconds =
                std::chrono::duration<double>(clock::now() - ga_start).count();
            rec.ga_evaluations = ga.evaluations;

            const AccuracyReport acc = accuracy_ratio(ga.population, esa.front);
            rec.ratio_dnf = acc.ratio_dnf;
            rec.ratio_nip = acc.ratio_nip;
            rec.ratio_rcf = acc.ratio_rcf;
            rec.headline = acc.headline;
            records.push_back(std::move(rec));
        }
    }
    return records;
}

std::vector<BenchmarkRecord> benchmark(const std::vector<int>& n_iot_grid,
                                       const GAParams& params,
                                       std::uint64_t esa_limit) {
    return benchmark(n_iot_grid, std::vector<GAParams>{params}, esa_limit);
}

}  // namespace iotdef
