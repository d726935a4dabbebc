#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iotdef/rng.hpp"

namespace iotdef {

// Prices are integral currency units.
using Money = std::int64_t;

enum class DeviceCategory { server, client, iot };

const char* to_string(DeviceCategory c);
DeviceCategory category_from_string(const std::string& s);

// One catalog entry: a device type, its population, and its defense prices.
// Full-OS decoys exist for servers only; patch contracts for iot types only.
struct DeviceType {
    std::string name;
    DeviceCategory category = DeviceCategory::iot;
    int count = 0;
    std::string subnet;
    Money decoy_price_emulated = 0;
    std::optional<Money> decoy_price_full_os;
    std::optional<Money> patch_price;
};

struct Node {
    std::string id;
    int type_index = -1;
    bool decoy = false;
    double interaction_prob = 1.0;  // decoys in (0,1), real nodes exactly 1
    Money cost = 0;                 // decoy deployment cost, 0 for real nodes
    bool patched = false;
};

// Declarative network description; the JSON spec file maps onto this 1:1.
struct NetworkSpec {
    struct Subnet {
        std::string id;
        bool entry = false;
    };
    std::vector<Subnet> subnets;
    std::vector<std::pair<std::string, std::string>> subnet_edges;
    std::vector<DeviceType> device_types;
    double p_emulated = 0.5;
    double p_full_os = 0.9;
    Money intelligence_cost = 0;
    DeviceCategory target_category = DeviceCategory::server;
};

NetworkSpec parse_network_spec(const std::string& json_text);
NetworkSpec load_network_spec(const std::string& path);
std::string to_json(const NetworkSpec& spec);

// Immutable after construction. Real nodes come first, decoys are appended
// by apply_deployment.
struct IoTNetwork {
    std::vector<std::string> subnets;
    std::vector<bool> entry_subnet;                 // parallel to subnets
    std::vector<std::pair<int, int>> subnet_edges;  // directed, irreflexive
    std::vector<DeviceType> device_types;
    std::vector<Node> nodes;
    double p_emulated = 0.5;
    double p_full_os = 0.9;
    Money intelligence_cost = 0;
    DeviceCategory target_category = DeviceCategory::server;

    int subnet_index(const std::string& id) const;
    int type_subnet(int type_index) const;
    bool has_subnet_edge(int from, int to) const;
    int real_device_count() const;
};

// Validates the spec (unique type names, positive counts, category-consistent
// prices, nonempty entry set, a target-category type present) and instantiates
// one node per device.
IoTNetwork build_network(const NetworkSpec& spec);

// Y_d: every device type in declaration order. Y_p: iot types only.
std::vector<int> decoy_type_indices(const IoTNetwork& net);
std::vector<int> patch_type_indices(const IoTNetwork& net);

struct DeploymentVector {
    std::vector<int> decoy_part;  // per Y_d: 0..2 for servers, 0..1 otherwise
    std::vector<int> patch_part;  // per Y_p: 0..1

    bool operator==(const DeploymentVector&) const = default;
    std::string to_string() const;  // "2,1,0,...,1"
};

// Fixed-width binary view of one network's deployment space.
//
// Bit layout, most significant first: server types use two bits
// (00=0, 01=1, 10=2, 11 clamps to 2), every other decoy position and every
// patch position one bit. Width = 2*servers + clients + iot + |Y_p|.
class DeploymentSpace {
public:
    explicit DeploymentSpace(const IoTNetwork& net);

    int width() const { return width_; }
    const std::vector<int>& decoy_types() const { return decoy_types_; }
    const std::vector<int>& patch_types() const { return patch_types_; }
    int decoy_max(int pos) const { return decoy_max_[pos]; }

    std::string encode(const DeploymentVector& dv) const;
    // Never fails on a string of the right width; the result may still
    // violate the server-decoy rule (check has_server_decoy, then repair).
    DeploymentVector decode(const std::string& bits) const;

    bool has_server_decoy(const DeploymentVector& dv) const;

    // Valid input passes through untouched; otherwise one uniformly chosen
    // server position is set to 1 (emulated). Idempotent on valid vectors.
    DeploymentVector repair(DeploymentVector dv, Rng& rng) const;

    // Every position uniform over its value set, then repaired.
    DeploymentVector random_deployment(Rng& rng) const;

    void validate(const DeploymentVector& dv) const;  // lengths and ranges

    // Deployment vectors satisfying the server-decoy rule.
    std::uint64_t valid_count() const;

    // Visits every valid vector in a fixed lexicographic order.
    template <typename F>
    void for_each_valid(F&& fn) const {
        DeploymentVector dv;
        dv.decoy_part.assign(decoy_types_.size(), 0);
        dv.patch_part.assign(patch_types_.size(), 0);
        const std::size_t n = decoy_types_.size() + patch_types_.size();
        for (;;) {
            if (has_server_decoy(dv)) fn(dv);
            // Mixed-radix increment, last position fastest.
            std::size_t i = n;
            while (i > 0) {
                --i;
                int& v = i < decoy_types_.size()
                             ? dv.decoy_part[i]
                             : dv.patch_part[i - decoy_types_.size()];
                const int radix =
                    i < decoy_types_.size() ? decoy_max_[i] + 1 : 2;
                if (++v < radix) break;
                v = 0;
                if (i == 0) return;
            }
            if (n == 0) return;
        }
    }

private:
    std::vector<int> decoy_types_;
    std::vector<int> patch_types_;
    std::vector<int> decoy_max_;  // per decoy position: 2 for servers else 1
    int width_ = 0;
};

DeploymentVector parse_deployment(const std::string& literal,
                                  const DeploymentSpace& space);

// Copy of the network with one decoy node added per selected type (placed in
// that type's subnet) and all real nodes of every purchased patch type marked
// patched. Real-node attributes other than `patched` are never touched.
IoTNetwork apply_deployment(const IoTNetwork& net, const DeploymentVector& dv);

// TC: intelligence center plus the priciest decoy option of every type plus
// every patch contract.
Money total_cost(const IoTNetwork& net);

}  // namespace iotdef
