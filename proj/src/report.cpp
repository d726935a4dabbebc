#include "iotdef/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <tuple>

namespace iotdef {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string metric_csv_header() {
    return "dv_bits,dnf,nip,rcf,pd,ppd,naprt,napdt,dcdm";
}

std::string metric_csv_row(const std::string& dv_bits,
                           const EvaluationResult& result) {
    std::string row = dv_bits;
    row += ',' + format_double(result.fitness.dnf);
    row += ',' + format_double(result.fitness.nip);
    row += ',' + format_double(result.fitness.rcf);
    row += ',' + format_double(result.analysis.pd);
    row += ',' + format_double(result.analysis.ppd);
    row += ',' + std::to_string(result.analysis.naprt);
    row += ',' + std::to_string(result.analysis.napdt);
    row += ',' + std::to_string(result.analysis.dcdm);
    return row;
}

void write_frontier_csv(std::ostream& out, const IoTNetwork& net,
                        const DeploymentSpace& space,
                        const ParetoFront& front) {
    struct Row {
        FitnessTriple fitness;
        std::string bits;
        std::string text;
    };
    std::vector<Row> rows;
    for (const auto& member : front.members) {
        for (const auto& dv : member.deployments) {
            Row row;
            row.fitness = member.fitness;
            row.bits = space.encode(dv);
            row.text = metric_csv_row(row.bits, evaluate_full(net, dv));
            rows.push_back(std::move(row));
        }
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return std::tie(b.fitness.dnf, b.fitness.nip, b.fitness.rcf, a.bits) <
               std::tie(a.fitness.dnf, a.fitness.nip, a.fitness.rcf, b.bits);
    });
    out << metric_csv_header() << "\n";
    for (const auto& row : rows) out << row.text << "\n";
}

}  // namespace iotdef
