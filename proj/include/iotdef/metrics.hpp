#pragma once

#include <cstdint>

#include "iotdef/harm.hpp"
#include "iotdef/network.hpp"

namespace iotdef {

// The three objectives, all maximized.
struct FitnessTriple {
    double dnf = 0.0;  // decoy node fraction, [0,1]
    double nip = 0.0;  // node interaction probability, [0,1]
    double rcf = 0.0;  // residual cost fraction, (-inf,1)

    bool operator==(const FitnessTriple&) const = default;
};

struct CostBreakdown {
    Money ic = 0;    // intelligence center (constant)
    Money dc = 0;    // deployed decoys
    Money pmc = 0;   // purchased patch contracts
    Money tc = 0;    // total potential cost
    Money dcdm = 0;  // pmc, plus ic+dc when any decoy is deployed
};

struct AnalysisMetrics {
    double pd = 0.0;   // decoys / real devices
    double ppd = 0.0;  // patched devices / real devices
    std::uint64_t naprt = 0;
    std::uint64_t napdt = 0;
    Money dcdm = 0;
};

// Mean decoy fraction over AP_d. 0 when AP_d is empty (degenerate deployment;
// see EvaluationResult::no_decoy_paths). Uses the explicit paths when present,
// the grouped classes otherwise.
double dnf(const PathSet& paths);
// Mean interaction-probability product over AP_d, same conventions.
double nip(const PathSet& paths);

// Forced evaluation over the grouped classes (requires has_grouped).
double dnf_grouped(const PathSet& paths);
double nip_grouped(const PathSet& paths);

CostBreakdown costs(const IoTNetwork& net, const DeploymentVector& dv);

// (TC - (IC + DC + PMC)) / TC. Requires tc > 0.
double rcf(const CostBreakdown& cost);

struct EvaluationResult {
    FitnessTriple fitness;
    AnalysisMetrics analysis;
    CostBreakdown cost;
    bool no_decoy_paths = false;  // AP_d was empty; dnf and nip above are 0
};

// Grouped evaluation over the type-quotient graph. Nodes of one type are
// interchangeable (same subnet, same probabilities, never adjacent to each
// other), so every class of simple node paths is one type-level path whose
// multiplicity is a product of falling factorials. Exact, and fast enough
// for exhaustive sweeps over large deployment spaces.
EvaluationResult evaluate_full(const IoTNetwork& net, const DeploymentVector& dv,
                               const EnumerationOptions& options = {});

FitnessTriple evaluate(const IoTNetwork& net, const DeploymentVector& dv);

// Node-level route (apply deployment, build the HARM, enumerate paths).
// Independent of the grouped route; serves as its oracle.
EvaluationResult evaluate_explicit(const IoTNetwork& net,
                                   const DeploymentVector& dv,
                                   const EnumerationOptions& options = {});

AnalysisMetrics analysis_metrics(const IoTNetwork& net,
                                 const DeploymentVector& dv);

}  // namespace iotdef
