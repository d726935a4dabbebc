#include "iotdef/metrics.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace iotdef {

namespace {

double mean_over_decoy_paths(const PathSet& paths, bool want_fraction) {
    if (paths.has_explicit) {
        if (paths.decoy_paths.empty()) return 0.0;
        double sum = 0.0;
        for (const auto& p : paths.decoy_paths)
            sum += want_fraction
                       ? static_cast<double>(p.decoy_count) / p.length()
                       : p.prob_product;
        return sum / static_cast<double>(paths.decoy_paths.size());
    }
    if (!paths.has_grouped)
        throw std::invalid_argument("path set has neither explicit nor grouped form");
    double sum = 0.0, count = 0.0;
    for (const auto& c : paths.decoy_classes) {
        const double per_path =
            want_fraction ? static_cast<double>(c.decoy_count) / c.length
                          : c.prob_product;
        sum += per_path * static_cast<double>(c.multiplicity);
        count += static_cast<double>(c.multiplicity);
    }
    return count == 0.0 ? 0.0 : sum / count;
}

double mean_over_classes(const std::vector<PathClass>& classes,
                         bool want_fraction) {
    double sum = 0.0, count = 0.0;
    for (const auto& c : classes) {
        const double per_path =
            want_fraction ? static_cast<double>(c.decoy_count) / c.length
                          : c.prob_product;
        sum += per_path * static_cast<double>(c.multiplicity);
        count += static_cast<double>(c.multiplicity);
    }
    return count == 0.0 ? 0.0 : sum / count;
}

}  // namespace

double dnf(const PathSet& paths) { return mean_over_decoy_paths(paths, true); }

double nip(const PathSet& paths) { return mean_over_decoy_paths(paths, false); }

double dnf_grouped(const PathSet& paths) {
    if (!paths.has_grouped)
        throw std::invalid_argument("path set has no grouped form");
    return mean_over_classes(paths.decoy_classes, true);
}

double nip_grouped(const PathSet& paths) {
    if (!paths.has_grouped)
        throw std::invalid_argument("path set has no grouped form");
    return mean_over_classes(paths.decoy_classes, false);
}

CostBreakdown costs(const IoTNetwork& net, const DeploymentVector& dv) {
    const DeploymentSpace space(net);
    space.validate(dv);

    CostBreakdown cost;
    cost.ic = net.intelligence_cost;
    bool any_decoy = false;
    const auto& decoy_types = space.decoy_types();
    for (std::size_t i = 0; i < decoy_types.size(); ++i) {
        const int level = dv.decoy_part[i];
        if (level == 0) continue;
        any_decoy = true;
        const auto& t = net.device_types[decoy_types[i]];
        cost.dc += level == 2 ? *t.decoy_price_full_os : t.decoy_price_emulated;
    }
    const auto& patch_types = space.patch_types();
    for (std::size_t i = 0; i < patch_types.size(); ++i)
        if (dv.patch_part[i] == 1)
            cost.pmc += *net.device_types[patch_types[i]].patch_price;
    cost.tc = total_cost(net);
    // The intelligence center is only bought when at least one decoy exists.
    cost.dcdm = cost.pmc + (any_decoy ? cost.ic + cost.dc : 0);
    return cost;
}

double rcf(const CostBreakdown& cost) {
    if (cost.tc <= 0) throw std::domain_error("total cost must be positive");
    return static_cast<double>(cost.tc - (cost.ic + cost.dc + cost.pmc)) /
           static_cast<double>(cost.tc);
}

namespace {

// One vertex of the type-quotient graph: all interchangeable nodes of a type,
// either the real population or its (single) decoy.
struct TypeVertex {
    int type = -1;
    bool decoy = false;
    int capacity = 0;
    double pr = 1.0;
    bool entry = false;
    bool real_target = false;
    bool decoy_target = false;
};

struct ClassKey {
    int length;
    int decoy_count;
    double prob;
    bool operator<(const ClassKey& o) const {
        return std::tie(length, decoy_count, prob) <
               std::tie(o.length, o.decoy_count, o.prob);
    }
};

using ClassMap = std::map<ClassKey, std::uint64_t>;

std::vector<PathClass> to_classes(const ClassMap& m) {
    std::vector<PathClass> out;
    out.reserve(m.size());
    for (const auto& [key, mult] : m)
        out.push_back({key.length, key.decoy_count, key.prob, mult});
    return out;
}

}  // namespace

EvaluationResult evaluate_full(const IoTNetwork& net, const DeploymentVector& dv,
                               const EnumerationOptions& options) {
    const DeploymentSpace space(net);
    space.validate(dv);

    const auto& patch_types = space.patch_types();
    std::vector<char> patched(net.device_types.size(), 0);
    for (std::size_t i = 0; i < patch_types.size(); ++i)
        if (dv.patch_part[i] == 1) patched[patch_types[i]] = 1;

    std::vector<TypeVertex> verts;
    for (std::size_t ti = 0; ti < net.device_types.size(); ++ti) {
        if (patched[ti]) continue;  // off the attack surface entirely
        const auto& t = net.device_types[ti];
        TypeVertex v;
        v.type = static_cast<int>(ti);
        v.capacity = t.count;
        const int s = net.type_subnet(v.type);
        v.entry = s >= 0 && net.entry_subnet[s];
        v.real_target = t.category == net.target_category;
        verts.push_back(v);
    }
    const auto& decoy_types = space.decoy_types();
    for (std::size_t i = 0; i < decoy_types.size(); ++i) {
        const int level = dv.decoy_part[i];
        if (level == 0) continue;
        const auto& t = net.device_types[decoy_types[i]];
        TypeVertex v;
        v.type = decoy_types[i];
        v.decoy = true;
        v.capacity = 1;
        v.pr = level == 2 ? net.p_full_os : net.p_emulated;
        const int s = net.type_subnet(v.type);
        v.entry = s >= 0 && net.entry_subnet[s];
        v.decoy_target = t.category == net.target_category;
        verts.push_back(v);
    }

    const std::size_t n = verts.size();
    std::vector<std::vector<int>> adj(n);
    for (std::size_t u = 0; u < n; ++u) {
        const int su = net.type_subnet(verts[u].type);
        for (std::size_t v = 0; v < n; ++v) {
            if (u == v) continue;
            const bool edge =
                verts[u].decoy
                    ? verts[v].decoy_target
                    : net.has_subnet_edge(su, net.type_subnet(verts[v].type));
            if (edge) adj[u].push_back(static_cast<int>(v));
        }
    }

    // Same depth-first walk as the node-level enumeration, except a vertex
    // may be revisited while distinct nodes of its type remain; each visit
    // scales the multiplicity by the nodes still unused (falling factorial).
    ClassMap real_classes, decoy_classes;
    std::vector<int> used(n, 0);

    auto dfs = [&](auto&& self, int u, int length, int decoys, double prob,
                   std::uint64_t mult) -> void {
        mult *= static_cast<std::uint64_t>(verts[u].capacity - used[u]);
        ++used[u];
        ++length;
        prob *= verts[u].pr;
        if (verts[u].decoy) ++decoys;

        if (verts[u].real_target) real_classes[{length, decoys, prob}] += mult;
        if (verts[u].decoy_target) decoy_classes[{length, decoys, prob}] += mult;

        if (options.max_length == 0 || length < options.max_length) {
            for (int v : adj[u])
                if (used[v] < verts[v].capacity)
                    self(self, v, length, decoys, prob, mult);
        }
        --used[u];
    };

    for (std::size_t e = 0; e < n; ++e)
        if (verts[e].entry) dfs(dfs, static_cast<int>(e), 0, 0, 1.0, 1);

    EvaluationResult result;
    PathSet paths;
    paths.has_grouped = true;
    paths.real_classes = to_classes(real_classes);
    paths.decoy_classes = to_classes(decoy_classes);

    result.no_decoy_paths = paths.decoy_classes.empty();
    result.cost = costs(net, dv);
    result.fitness.dnf = dnf_grouped(paths);
    result.fitness.nip = nip_grouped(paths);
    result.fitness.rcf = rcf(result.cost);

    int decoys_deployed = 0;
    for (int v : dv.decoy_part) decoys_deployed += v > 0 ? 1 : 0;
    int patched_devices = 0;
    for (std::size_t ti = 0; ti < net.device_types.size(); ++ti)
        if (patched[ti]) patched_devices += net.device_types[ti].count;
    const double real_devices = net.real_device_count();

    result.analysis.pd = decoys_deployed / real_devices;
    result.analysis.ppd = patched_devices / real_devices;
    result.analysis.naprt = paths.naprt();
    result.analysis.napdt = paths.napdt();
    result.analysis.dcdm = result.cost.dcdm;
    return result;
}

FitnessTriple evaluate(const IoTNetwork& net, const DeploymentVector& dv) {
    return evaluate_full(net, dv).fitness;
}

EvaluationResult evaluate_explicit(const IoTNetwork& net,
                                   const DeploymentVector& dv,
                                   const EnumerationOptions& options) {
    const IoTNetwork deployed = apply_deployment(net, dv);
    const Harm harm = build_harm(deployed);
    const PathSet paths = enumerate_attack_paths(harm, options);

    EvaluationResult result;
    result.no_decoy_paths = paths.decoy_paths.empty();
    result.cost = costs(net, dv);
    result.fitness.dnf = dnf(paths);
    result.fitness.nip = nip(paths);
    result.fitness.rcf = rcf(result.cost);

    int decoys_deployed = 0;
    for (int v : dv.decoy_part) decoys_deployed += v > 0 ? 1 : 0;
    int patched_devices = 0;
    for (const auto& n : deployed.nodes)
        if (!n.decoy && n.patched) ++patched_devices;
    const double real_devices = net.real_device_count();

    result.analysis.pd = decoys_deployed / real_devices;
    result.analysis.ppd = patched_devices / real_devices;
    result.analysis.naprt = paths.naprt();
    result.analysis.napdt = paths.napdt();
    result.analysis.dcdm = result.cost.dcdm;
    return result;
}

AnalysisMetrics analysis_metrics(const IoTNetwork& net,
                                 const DeploymentVector& dv) {
    return evaluate_full(net, dv).analysis;
}

}  // namespace iotdef
