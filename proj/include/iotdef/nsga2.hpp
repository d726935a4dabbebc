#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "iotdef/metrics.hpp"
#include "iotdef/network.hpp"
#include "iotdef/rng.hpp"

namespace iotdef {

struct GAParams {
    int population_size = 100;
    int max_generations = 100;
    double crossover_rate = 0.8;
    double mutation_rate = 0.2;  // per offspring: flip one random bit
    std::uint64_t seed = 1;
    int jobs = 1;  // fitness evaluation only; results are jobs-invariant
};

struct Individual {
    std::string genome;  // '0'/'1' string
    DeploymentVector dv; // decoded + repaired
    FitnessTriple fitness;
    int rank = 0;
    double crowding = 0.0;
};

// a dominates b: no objective worse, at least one strictly better.
bool dominates(const FitnessTriple& a, const FitnessTriple& b);

// Partitions indices into fronts F0, F1, ... (Deb's fast sort). Every member
// of F_i is undominated within the union of F_i, F_{i+1}, ...
std::vector<std::vector<int>> fast_nondominated_sort(
    const std::vector<FitnessTriple>& points);

// NSGA-II crowding distance for one front, aligned with the input order.
// Boundary members per objective get +infinity; a zero-range objective
// contributes nothing.
std::vector<double> crowding_distance(const std::vector<FitnessTriple>& front);

// One frontier member per distinct objective triple, with every distinct
// deployment vector that attains it.
struct ParetoMember {
    FitnessTriple fitness;
    std::vector<DeploymentVector> deployments;
};

struct ParetoFront {
    std::vector<ParetoMember> members;

    bool contains(const DeploymentVector& dv) const;
    double max_dnf() const;
    double max_nip() const;
    double max_rcf() const;
};

// Genome semantics for the optimizer. decode_repair may draw from the rng
// (constraint repair); fitness must be pure so evaluations can run on any
// number of workers without changing results.
struct OptimizationProblem {
    int width = 0;
    std::function<DeploymentVector(const std::string& genome, Rng& rng)>
        decode_repair;
    std::function<FitnessTriple(const DeploymentVector& dv)> fitness;
};

OptimizationProblem deployment_problem(const IoTNetwork& net,
                                       const DeploymentSpace& space);

struct GenerationStats {
    int generation = 0;
    int front_size = 0;
    double best_dnf = 0.0;
    double best_nip = 0.0;
    double best_rcf = 0.0;
};
using GenerationLogger = std::function<void(const GenerationStats&)>;

struct GAResult {
    std::vector<Individual> population;  // final population, size N
    ParetoFront front;                   // its rank-0 set, dedup by triple
    std::uint64_t evaluations = 0;       // exactly N + G*N
};

// Seeded, deterministic NSGA-II: binary tournament on (rank, crowding),
// one-point crossover, single-bit mutation, elitist (mu+lambda) survival by
// rank then descending crowding.
GAResult nsga2(const OptimizationProblem& problem, const GAParams& params,
               const GenerationLogger& log = {});

struct EsaResult {
    ParetoFront front;
    std::uint64_t evaluations = 0;  // valid-space size
};

// Exhaustive baseline: evaluates every valid deployment vector (at least one
// server decoy) and returns the exact strongly nondominated set. Refuses to
// start when the valid space exceeds `limit`.
EsaResult exhaustive_search(const IoTNetwork& net, const DeploymentSpace& space,
                            std::uint64_t limit = 1ull << 24);

struct AccuracyReport {
    double ratio_dnf = 0.0;
    double ratio_nip = 0.0;
    double ratio_rcf = 0.0;
    double headline = 0.0;  // min of the three, clamped to [0,1]
};

// Per metric: distinct GA-population vectors attaining the exact optimum,
// over distinct frontier vectors attaining it.
AccuracyReport accuracy_ratio(const std::vector<Individual>& ga_population,
                              const ParetoFront& esa_front);

}  // namespace iotdef
