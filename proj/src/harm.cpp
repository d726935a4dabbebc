#include "iotdef/harm.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <tuple>

namespace iotdef {

namespace {

bool is_target_decoy(const IoTNetwork& net, const Node& n) {
    return n.decoy &&
           net.device_types[n.type_index].category == net.target_category;
}

bool is_real_target(const IoTNetwork& net, const Node& n) {
    return !n.decoy && !n.patched &&
           net.device_types[n.type_index].category == net.target_category;
}

}  // namespace

Harm build_harm(const IoTNetwork& deployed) {
    Harm harm;
    harm.network = deployed;
    harm.upper = deployed.subnet_edges;

    const auto& nodes = harm.network.nodes;
    const std::size_t n = nodes.size();
    harm.adjacency.assign(n, {});
    harm.lower.assign(n, {});

    for (std::size_t i = 0; i < n; ++i) {
        if (!nodes[i].patched) harm.lower[i].push_back("v_" + nodes[i].id);
    }

    for (std::size_t u = 0; u < n; ++u) {
        if (nodes[u].patched) continue;
        const int su = deployed.type_subnet(nodes[u].type_index);
        for (std::size_t v = 0; v < n; ++v) {
            if (u == v || nodes[v].patched) continue;
            bool edge = false;
            if (!nodes[u].decoy) {
                // Rules (i) and (ii): real sources follow subnet reachability.
                const int sv = deployed.type_subnet(nodes[v].type_index);
                edge = deployed.has_subnet_edge(su, sv);
            } else {
                // Rule (iii): a trapped attacker is funneled to decoy targets.
                // Rule (iv): decoys never lead back to real nodes.
                edge = nodes[v].decoy && is_target_decoy(deployed, nodes[v]);
            }
            if (edge) harm.adjacency[u].push_back(static_cast<int>(v));
        }
    }
    return harm;
}

std::uint64_t PathSet::naprt() const {
    if (has_explicit) return real_paths.size();
    std::uint64_t n = 0;
    for (const auto& c : real_classes) n += c.multiplicity;
    return n;
}

std::uint64_t PathSet::napdt() const {
    if (has_explicit) return decoy_paths.size();
    std::uint64_t n = 0;
    for (const auto& c : decoy_classes) n += c.multiplicity;
    return n;
}

PathSet enumerate_attack_paths(const Harm& harm,
                               const EnumerationOptions& options) {
    const auto& net = harm.network;
    const auto& nodes = net.nodes;

    std::vector<int> entries;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].patched) continue;
        const int s = net.type_subnet(nodes[i].type_index);
        if (s >= 0 && net.entry_subnet[s]) entries.push_back(static_cast<int>(i));
    }

    PathSet out;
    out.has_explicit = true;

    std::vector<char> on_path(nodes.size(), 0);
    std::vector<int> stack;

    auto record = [&](std::vector<AttackPath>& section, double prob,
                      int decoys) {
        AttackPath p;
        p.nodes = stack;
        p.decoy_count = decoys;
        p.prob_product = prob;
        section.push_back(std::move(p));
    };

    // Depth-first over simple paths. The probability product is carried down
    // the recursion (multiplied left to right, never divided back) so a
    // path's value does not depend on backtracking order. A path is recorded
    // whenever its tip is a target; extension continues past targets so
    // longer paths are kept too.
    auto dfs = [&](auto&& self, int u, double prob, int decoys) -> void {
        on_path[u] = 1;
        stack.push_back(u);
        prob *= nodes[u].interaction_prob;
        if (nodes[u].decoy) ++decoys;

        if (is_real_target(net, nodes[u])) record(out.real_paths, prob, decoys);
        if (is_target_decoy(net, nodes[u]))
            record(out.decoy_paths, prob, decoys);

        if (options.max_length == 0 ||
            static_cast<int>(stack.size()) < options.max_length) {
            for (int v : harm.adjacency[u]) {
                if (!on_path[v]) self(self, v, prob, decoys);
            }
        }

        stack.pop_back();
        on_path[u] = 0;
    };

    for (int e : entries) {
        dfs(dfs, e, 1.0, 0);
    }
    return out;
}

namespace {

void group_into(const std::vector<AttackPath>& paths,
                std::vector<PathClass>& classes) {
    std::map<std::tuple<int, int, double>, std::uint64_t> buckets;
    for (const auto& p : paths)
        ++buckets[{p.length(), p.decoy_count, p.prob_product}];
    for (const auto& [key, mult] : buckets) {
        PathClass c;
        std::tie(c.length, c.decoy_count, c.prob_product) = key;
        c.multiplicity = mult;
        classes.push_back(c);
    }
}

}  // namespace

PathSet group_paths(const PathSet& paths) {
    PathSet out = paths;
    out.real_classes.clear();
    out.decoy_classes.clear();
    group_into(paths.real_paths, out.real_classes);
    group_into(paths.decoy_paths, out.decoy_classes);
    out.has_grouped = true;
    return out;
}

void dump_paths(const Harm& harm, const PathSet& paths, std::ostream& out) {
    auto dump_section = [&](const char* header,
                            const std::vector<AttackPath>& section) {
        out << header << "\n";
        for (const auto& p : section) {
            for (std::size_t i = 0; i < p.nodes.size(); ++i) {
                if (i) out << "->";
                out << harm.network.nodes[p.nodes[i]].id;
            }
            out << "\n";
        }
    };
    dump_section("#AP_r", paths.real_paths);
    dump_section("#AP_d", paths.decoy_paths);
}

}  // namespace iotdef
