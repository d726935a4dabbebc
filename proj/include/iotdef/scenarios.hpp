#pragma once

#include <string>
#include <vector>

#include "iotdef/metrics.hpp"
#include "iotdef/network.hpp"
#include "iotdef/nsga2.hpp"

namespace iotdef {

// Smart-hospital PACS case study: 2 servers (VLAN1), 5+5 clients (VLAN2),
// 4 medical iot devices (VLAN3), VLAN3->{VLAN2,VLAN1}, VLAN2->VLAN1.
NetworkSpec pacs_case_study();

// Scaling family: 2 servers, 25+25 clients, n_iot devices in types of 25,
// one VLAN per iot type, every iot VLAN reaching the client and server VLANs.
// Patch contracts cost 1000, 1500, ... by type index. n_iot in {50..200} step 25.
NetworkSpec scaled_network(int n_iot);

// Case-study deployment vectors: "dv1", "P1".."P5", "A*".."D*".
DeploymentVector pacs_deployment(const std::string& name);

struct BudgetConstraint {
    Money budget = 0;
    double min_rcf(Money tc) const;  // (tc - budget) / tc
};

// Members whose rcf meets the budget threshold.
ParetoFront budget_filter(const ParetoFront& front, Money budget, Money tc);

// Weighted-sum sweep over (dnf, nip): per beta, every point attaining
// max of beta*dnf + (1-beta)*nip (ties within 1e-9).
struct SweepEntry {
    double beta = 0.0;
    std::vector<int> winners;  // indices into the supplied member list
    double best_score = 0.0;
};
std::vector<SweepEntry> scalarize_sweep(const std::vector<ParetoMember>& points,
                                        const std::vector<double>& betas);

// A named row of the defense-comparison table. An empty vector selects one of
// the builtin scenarios: "no defense", "only patch", "only deception".
struct NamedDeployment {
    std::string name;
    std::vector<int> decoy_part;  // empty = builtin scenario by name
    std::vector<int> patch_part;
};

struct ComparisonRow {
    std::string name;
    double pd = 0.0;   // fraction
    double ppd = 0.0;  // fraction
    std::uint64_t naprt = 0;
    std::uint64_t napdt = 0;
    Money dcdm = 0;
};

std::vector<ComparisonRow> comparison_report(
    const IoTNetwork& net, const std::vector<NamedDeployment>& deployments);

// The six rows of the case-study table (three builtin scenarios plus the
// P1/P4/P5 deployments on PACS; builtin scenarios only elsewhere).
std::vector<NamedDeployment> standard_comparison(bool include_pacs_points);

struct BenchmarkRecord {
    std::string label;  // "2-50-N"
    int bits = 0;
    int pop = 0;
    int gens = 0;
    double ga_seconds = 0.0;
    double esa_seconds = 0.0;
    std::uint64_t valid_space = 0;
    std::uint64_t ga_evaluations = 0;
    double ratio_dnf = 0.0;
    double ratio_nip = 0.0;
    double ratio_rcf = 0.0;
    double headline = 0.0;
};

// GA-vs-exhaustive sweep over the scaling family: one record per network and
// parameter setting (the exhaustive pass runs once per network). Metric
// columns are deterministic for a fixed seed; the wall-clock columns are not.
std::vector<BenchmarkRecord> benchmark(const std::vector<int>& n_iot_grid,
                                       const std::vector<GAParams>& params_list,
                                       std::uint64_t esa_limit = 1ull << 24);

std::vector<BenchmarkRecord> benchmark(const std::vector<int>& n_iot_grid,
                                       const GAParams& params,
                                       std::uint64_t esa_limit = 1ull << 24);

}  // namespace iotdef
