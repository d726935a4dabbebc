#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "iotdef/network.hpp"

namespace iotdef {

// Three-layer hierarchical attack model of one deployed network: subnet
// reachability on top, node connectivity in the middle, per-node
// vulnerabilities below. Patched nodes carry no vulnerabilities and no edges.
//
// Middle-layer edge rules:
//   (i)   real u -> real v    iff subnet(u)->subnet(v) and both unpatched
//   (ii)  real u -> decoy v   iff subnet(u)->subnet(v) and u unpatched
//   (iii) decoy u -> decoy v  iff v is a decoy of the target category
//         (the deception fabric funnels trapped attackers to decoy targets)
//   (iv)  decoy u -> real v   never
struct Harm {
    IoTNetwork network;                           // deployed snapshot
    std::vector<std::pair<int, int>> upper;       // subnet edges
    std::vector<std::vector<int>> adjacency;      // by node index
    std::vector<std::vector<std::string>> lower;  // vulnerabilities per node
};

Harm build_harm(const IoTNetwork& deployed);

struct AttackPath {
    std::vector<int> nodes;  // indices into harm.network.nodes
    int decoy_count = 0;
    double prob_product = 1.0;

    int length() const { return static_cast<int>(nodes.size()); }
};

// Paths sharing (length, decoy count, probability product) collapse into one
// class; the multiplicity preserves the original path count.
struct PathClass {
    int length = 0;
    int decoy_count = 0;
    double prob_product = 1.0;
    std::uint64_t multiplicity = 0;
};

struct PathSet {
    std::vector<AttackPath> real_paths;   // AP_r: real nodes only
    std::vector<AttackPath> decoy_paths;  // AP_d: end at a decoy target
    std::vector<PathClass> real_classes;
    std::vector<PathClass> decoy_classes;
    bool has_explicit = false;
    bool has_grouped = false;

    std::uint64_t naprt() const;
    std::uint64_t napdt() const;
};

struct EnumerationOptions {
    // 0 = unbounded. The induced graphs are acyclic for the layered subnet
    // topologies shipped here; the cap guards arbitrary cyclic inputs.
    int max_length = 0;
};

// All simple paths from every entry (unpatched node, real or decoy, in an
// entry subnet) to every target. Paths ending at a real node of the target
// category land in AP_r, paths ending at a decoy of that category in AP_d.
PathSet enumerate_attack_paths(const Harm& harm,
                               const EnumerationOptions& options = {});

// Collapses explicit paths into multiplicity classes. Metric evaluation over
// the grouped form equals evaluation over the explicit form.
PathSet group_paths(const PathSet& paths);

// One path per line ("a->b->c"), under "#AP_r" / "#AP_d" section headers.
void dump_paths(const Harm& harm, const PathSet& paths, std::ostream& out);

}  // namespace iotdef
