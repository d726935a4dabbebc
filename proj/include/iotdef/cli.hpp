#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "iotdef/network.hpp"
#include "iotdef/nsga2.hpp"

namespace iotdef {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;  // usage / input errors
inline constexpr int exit_limit = 3;  // resource limit exceeded

struct RunConfig {
    std::string scenario;      // builtin name: "pacs" or "2-50-N"
    std::string network_path;  // spec file; exactly one source must be set
    GAParams ga;
    std::optional<Money> budget;
    std::vector<double> betas;  // empty = 0.0..1.0 step 0.1
    std::string out_path;       // empty = stdout
    std::uint64_t esa_limit = 1ull << 24;
    std::string dv_literal;  // evaluate: comma-separated integers
    std::string paths_out;   // evaluate: optional attack-path dump file
    int min_iot = 50;        // benchmark grid
    int max_iot = 200;
    int step_iot = 25;
};

// Each command returns an exit code and writes results to `out` (or the
// configured output file) and diagnostics to `err`.
int cmd_optimize(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_exhaustive(const RunConfig& config, std::ostream& out,
                   std::ostream& err);
int cmd_evaluate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_benchmark(const RunConfig& config, std::ostream& out,
                  std::ostream& err);

}  // namespace iotdef
