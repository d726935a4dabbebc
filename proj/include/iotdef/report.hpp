#pragma once

#include <iosfwd>
#include <string>

#include "iotdef/metrics.hpp"
#include "iotdef/network.hpp"
#include "iotdef/nsga2.hpp"

namespace iotdef {

// Shared CSV formats. Metric values are written at full precision so a row
// can be re-parsed and re-checked bit for bit.

std::string metric_csv_header();  // dv_bits,dnf,nip,rcf,pd,ppd,naprt,napdt,dcdm

std::string metric_csv_row(const std::string& dv_bits,
                           const EvaluationResult& result);

// One row per (member, deployment), ordered by dnf, nip, rcf descending,
// then by bitstring.
void write_frontier_csv(std::ostream& out, const IoTNetwork& net,
                        const DeploymentSpace& space, const ParetoFront& front);

std::string format_double(double v);  // shortest round-trip form

}  // namespace iotdef
