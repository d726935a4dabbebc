#include "iotdef/network.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace iotdef {

using nlohmann::json;

const char* to_string(DeviceCategory c) {
    switch (c) {
        case DeviceCategory::server: return "server";
        case DeviceCategory::client: return "client";
        case DeviceCategory::iot: return "iot";
    }
    return "?";
}

DeviceCategory category_from_string(const std::string& s) {
    if (s == "server") return DeviceCategory::server;
    if (s == "client") return DeviceCategory::client;
    if (s == "iot") return DeviceCategory::iot;
    throw std::invalid_argument("unknown device category: " + s);
}

namespace {

std::string slug(const std::string& name) {
    std::string out;
    bool sep = false;
    for (char c : name) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            if (sep && !out.empty()) out.push_back('_');
            out.push_back(static_cast<char>(
                std::tolower(static_cast<unsigned char>(c))));
            sep = false;
        } else {
            sep = true;
        }
    }
    return out.empty() ? std::string("type") : out;
}

}  // namespace

NetworkSpec parse_network_spec(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad spec JSON: ") + e.what());
    }
    NetworkSpec spec;
    try {
        for (const auto& s : j.at("subnets")) {
            NetworkSpec::Subnet sub;
            sub.id = s.at("id").get<std::string>();
            sub.entry = s.value("entry", false);
            spec.subnets.push_back(sub);
        }
        for (const auto& e : j.at("subnet_edges")) {
            spec.subnet_edges.emplace_back(e.at(0).get<std::string>(),
                                           e.at(1).get<std::string>());
        }
        for (const auto& t : j.at("device_types")) {
            DeviceType dt;
            dt.name = t.at("name").get<std::string>();
            dt.category = category_from_string(t.at("category").get<std::string>());
            dt.count = t.at("count").get<int>();
            dt.subnet = t.at("subnet").get<std::string>();
            dt.decoy_price_emulated = t.at("decoy_price_emulated").get<Money>();
            if (t.contains("decoy_price_full_os"))
                dt.decoy_price_full_os = t.at("decoy_price_full_os").get<Money>();
            if (t.contains("patch_price"))
                dt.patch_price = t.at("patch_price").get<Money>();
            spec.device_types.push_back(std::move(dt));
        }
        const auto& probs = j.at("probabilities");
        spec.p_emulated = probs.at("emulated").get<double>();
        spec.p_full_os = probs.at("full_os").get<double>();
        spec.intelligence_cost = j.at("intelligence_cost").get<Money>();
        if (j.contains("target_category"))
            spec.target_category =
                category_from_string(j.at("target_category").get<std::string>());
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad spec JSON: ") + e.what());
    }
    return spec;
}

NetworkSpec load_network_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("spec not found: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_network_spec(buf.str());
}

std::string to_json(const NetworkSpec& spec) {
    json j;
    j["subnets"] = json::array();
    for (const auto& s : spec.subnets)
        j["subnets"].push_back({{"id", s.id}, {"entry", s.entry}});
    j["subnet_edges"] = json::array();
    for (const auto& [from, to] : spec.subnet_edges)
        j["subnet_edges"].push_back({from, to});
    j["device_types"] = json::array();
    for (const auto& t : spec.device_types) {
        json jt = {{"name", t.name},
                   {"category", to_string(t.category)},
                   {"count", t.count},
                   {"subnet", t.subnet},
                   {"decoy_price_emulated", t.decoy_price_emulated}};
        if (t.decoy_price_full_os) jt["decoy_price_full_os"] = *t.decoy_price_full_os;
        if (t.patch_price) jt["patch_price"] = *t.patch_price;
        j["device_types"].push_back(jt);
    }
    j["probabilities"] = {{"emulated", spec.p_emulated},
                          {"full_os", spec.p_full_os}};
    j["intelligence_cost"] = spec.intelligence_cost;
    j["target_category"] = to_string(spec.target_category);
    return j.dump(2);
}

int IoTNetwork::subnet_index(const std::string& id) const {
    for (std::size_t i = 0; i < subnets.size(); ++i)
        if (subnets[i] == id) return static_cast<int>(i);
    return -1;
}

int IoTNetwork::type_subnet(int type_index) const {
    return subnet_index(device_types[type_index].subnet);
}

bool IoTNetwork::has_subnet_edge(int from, int to) const {
    for (const auto& [a, b] : subnet_edges)
        if (a == from && b == to) return true;
    return false;
}

int IoTNetwork::real_device_count() const {
    int n = 0;
    for (const auto& t : device_types) n += t.count;
    return n;
}

IoTNetwork build_network(const NetworkSpec& spec) {
    if (spec.subnets.empty()) throw std::invalid_argument("no subnets declared");
    if (spec.device_types.empty())
        throw std::invalid_argument("no device types declared");
    if (!(spec.p_emulated > 0.0 && spec.p_emulated < 1.0) ||
        !(spec.p_full_os > 0.0 && spec.p_full_os < 1.0))
        throw std::invalid_argument("interaction probabilities must lie in (0,1)");

    IoTNetwork net;
    net.p_emulated = spec.p_emulated;
    net.p_full_os = spec.p_full_os;
    net.intelligence_cost = spec.intelligence_cost;
    net.target_category = spec.target_category;

    std::set<std::string> seen_subnets;
    for (const auto& s : spec.subnets) {
        if (!seen_subnets.insert(s.id).second)
            throw std::invalid_argument("duplicate subnet: " + s.id);
        net.subnets.push_back(s.id);
        net.entry_subnet.push_back(s.entry);
    }
    if (std::none_of(net.entry_subnet.begin(), net.entry_subnet.end(),
                     [](bool b) { return b; }))
        throw std::invalid_argument("no entry subnet declared");

    for (const auto& [from, to] : spec.subnet_edges) {
        const int a = net.subnet_index(from);
        const int b = net.subnet_index(to);
        if (a < 0 || b < 0)
            throw std::invalid_argument("subnet edge references unknown subnet");
        if (a == b)
            throw std::invalid_argument("intra-subnet edge not allowed: " + from);
        net.subnet_edges.emplace_back(a, b);
    }

    std::set<std::string> seen_types;
    bool has_target = false;
    for (const auto& t : spec.device_types) {
        if (!seen_types.insert(t.name).second)
            throw std::invalid_argument("duplicate device type: " + t.name);
        if (t.count < 1)
            throw std::invalid_argument("device count must be >= 1: " + t.name);
        if (net.subnet_index(t.subnet) < 0)
            throw std::invalid_argument("unknown subnet for type: " + t.name);
        if (t.decoy_price_emulated < 0)
            throw std::invalid_argument("negative decoy price: " + t.name);
        if (t.category == DeviceCategory::server) {
            if (!t.decoy_price_full_os)
                throw std::invalid_argument("server type missing full-OS price: " +
                                            t.name);
            if (*t.decoy_price_full_os < 0)
                throw std::invalid_argument("negative decoy price: " + t.name);
        } else if (t.decoy_price_full_os) {
            throw std::invalid_argument("full-OS price on non-server type: " +
                                        t.name);
        }
        if (t.category == DeviceCategory::iot) {
            if (!t.patch_price)
                throw std::invalid_argument("iot type missing patch price: " +
                                            t.name);
            if (*t.patch_price < 0)
                throw std::invalid_argument("negative patch price: " + t.name);
        } else if (t.patch_price) {
            throw std::invalid_argument("patch price on non-iot type: " + t.name);
        }
        if (t.category == spec.target_category) has_target = true;
        net.device_types.push_back(t);
    }
    if (!has_target)
        throw std::invalid_argument("no device of the target category declared");

    for (std::size_t ti = 0; ti < net.device_types.size(); ++ti) {
        const auto& t = net.device_types[ti];
        const std::string base = slug(t.name);
        for (int k = 0; k < t.count; ++k) {
            Node n;
            n.id = base + "_" + std::to_string(k + 1);
            n.type_index = static_cast<int>(ti);
            net.nodes.push_back(std::move(n));
        }
    }
    return net;
}

std::vector<int> decoy_type_indices(const IoTNetwork& net) {
    std::vector<int> out(net.device_types.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<int>(i);
    return out;
}

std::vector<int> patch_type_indices(const IoTNetwork& net) {
    std::vector<int> out;
    for (std::size_t i = 0; i < net.device_types.size(); ++i)
        if (net.device_types[i].category == DeviceCategory::iot)
            out.push_back(static_cast<int>(i));
    return out;
}

std::string DeploymentVector::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < decoy_part.size() + patch_part.size(); ++i) {
        if (i) out.push_back(',');
        const int v = i < decoy_part.size()
                          ? decoy_part[i]
                          : patch_part[i - decoy_part.size()];
        out += std::to_string(v);
    }
    return out;
}

DeploymentSpace::DeploymentSpace(const IoTNetwork& net) {
    decoy_types_ = decoy_type_indices(net);
    patch_types_ = patch_type_indices(net);
    for (int ti : decoy_types_) {
        const bool server = net.device_types[ti].category == DeviceCategory::server;
        decoy_max_.push_back(server ? 2 : 1);
        width_ += server ? 2 : 1;
    }
    width_ += static_cast<int>(patch_types_.size());
}

std::string DeploymentSpace::encode(const DeploymentVector& dv) const {
    validate(dv);
    std::string bits;
    bits.reserve(width_);
    for (std::size_t i = 0; i < dv.decoy_part.size(); ++i) {
        const int v = dv.decoy_part[i];
        if (decoy_max_[i] == 2) {
            bits.push_back(v >= 2 ? '1' : '0');
            bits.push_back(v == 1 ? '1' : '0');
        } else {
            bits.push_back(v ? '1' : '0');
        }
    }
    for (int v : dv.patch_part) bits.push_back(v ? '1' : '0');
    return bits;
}

DeploymentVector DeploymentSpace::decode(const std::string& bits) const {
    if (static_cast<int>(bits.size()) != width_)
        throw std::invalid_argument("bitstring width " +
                                    std::to_string(bits.size()) + ", expected " +
                                    std::to_string(width_));
    for (char c : bits)
        if (c != '0' && c != '1')
            throw std::invalid_argument("bitstring must contain only 0 and 1");

    DeploymentVector dv;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < decoy_types_.size(); ++i) {
        if (decoy_max_[i] == 2) {
            const int hi = bits[pos] - '0';
            const int lo = bits[pos + 1] - '0';
            // 11 clamps to 2 so that every bitstring stays decodable.
            dv.decoy_part.push_back(hi ? 2 : lo);
            pos += 2;
        } else {
            dv.decoy_part.push_back(bits[pos] - '0');
            pos += 1;
        }
    }
    for (std::size_t i = 0; i < patch_types_.size(); ++i)
        dv.patch_part.push_back(bits[pos++] - '0');
    return dv;
}

bool DeploymentSpace::has_server_decoy(const DeploymentVector& dv) const {
    for (std::size_t i = 0; i < decoy_max_.size(); ++i)
        if (decoy_max_[i] == 2 && dv.decoy_part[i] > 0) return true;
    return false;
}

void DeploymentSpace::validate(const DeploymentVector& dv) const {
    if (dv.decoy_part.size() != decoy_types_.size() ||
        dv.patch_part.size() != patch_types_.size())
        throw std::invalid_argument("deployment vector arity mismatch");
    for (std::size_t i = 0; i < dv.decoy_part.size(); ++i)
        if (dv.decoy_part[i] < 0 || dv.decoy_part[i] > decoy_max_[i])
            throw std::invalid_argument("decoy value out of range at position " +
                                        std::to_string(i));
    for (int v : dv.patch_part)
        if (v < 0 || v > 1)
            throw std::invalid_argument("patch value out of range");
}

DeploymentVector DeploymentSpace::repair(DeploymentVector dv, Rng& rng) const {
    validate(dv);
    if (has_server_decoy(dv)) return dv;
    std::vector<int> server_positions;
    for (std::size_t i = 0; i < decoy_max_.size(); ++i)
        if (decoy_max_[i] == 2) server_positions.push_back(static_cast<int>(i));
    if (server_positions.empty()) return dv;  // no server types to repair with
    const int pick = server_positions[rng.below(server_positions.size())];
    dv.decoy_part[pick] = 1;
    return dv;
}

DeploymentVector DeploymentSpace::random_deployment(Rng& rng) const {
    DeploymentVector dv;
    for (int m : decoy_max_)
        dv.decoy_part.push_back(static_cast<int>(rng.below(m + 1)));
    for (std::size_t i = 0; i < patch_types_.size(); ++i)
        dv.patch_part.push_back(static_cast<int>(rng.below(2)));
    return repair(std::move(dv), rng);
}

std::uint64_t DeploymentSpace::valid_count() const {
    std::uint64_t total = 1, invalid = 1;
    for (int m : decoy_max_) {
        total *= static_cast<std::uint64_t>(m) + 1;
        if (m != 2) invalid *= 2;  // server positions pinned to 0
    }
    for (std::size_t i = 0; i < patch_types_.size(); ++i) {
        total *= 2;
        invalid *= 2;
    }
    return total - invalid;
}

DeploymentVector parse_deployment(const std::string& literal,
                                  const DeploymentSpace& space) {
    std::vector<int> values;
    std::string token;
    std::istringstream in(literal);
    while (std::getline(in, token, ',')) {
        std::size_t used = 0;
        int v;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad deployment literal: " + token);
        }
        if (used != token.size())
            throw std::invalid_argument("bad deployment literal: " + token);
        values.push_back(v);
    }
    const std::size_t nd = space.decoy_types().size();
    const std::size_t np = space.patch_types().size();
    if (values.size() != nd + np)
        throw std::invalid_argument(
            "deployment literal has " + std::to_string(values.size()) +
            " components, expected " + std::to_string(nd + np));
    DeploymentVector dv;
    dv.decoy_part.assign(values.begin(), values.begin() + nd);
    dv.patch_part.assign(values.begin() + nd, values.end());
    space.validate(dv);
    return dv;
}

IoTNetwork apply_deployment(const IoTNetwork& net, const DeploymentVector& dv) {
    const DeploymentSpace space(net);
    space.validate(dv);

    IoTNetwork out = net;
    const auto& decoy_types = space.decoy_types();
    for (std::size_t i = 0; i < decoy_types.size(); ++i) {
        const int level = dv.decoy_part[i];
        if (level == 0) continue;
        const auto& t = net.device_types[decoy_types[i]];
        Node d;
        d.id = [&] {
            std::string base;
            for (const auto& n : net.nodes)
                if (n.type_index == decoy_types[i]) {
                    base = n.id.substr(0, n.id.rfind('_'));
                    break;
                }
            return base + "_decoy";
        }();
        d.type_index = decoy_types[i];
        d.decoy = true;
        d.interaction_prob = level == 2 ? net.p_full_os : net.p_emulated;
        d.cost = level == 2 ? *t.decoy_price_full_os : t.decoy_price_emulated;
        out.nodes.push_back(std::move(d));
    }
    const auto& patch_types = space.patch_types();
    for (std::size_t i = 0; i < patch_types.size(); ++i) {
        if (dv.patch_part[i] != 1) continue;
        for (auto& n : out.nodes)
            if (!n.decoy && n.type_index == patch_types[i]) n.patched = true;
    }
    return out;
}

Money total_cost(const IoTNetwork& net) {
    Money tc = net.intelligence_cost;
    for (const auto& t : net.device_types) {
        tc += t.category == DeviceCategory::server ? *t.decoy_price_full_os
                                                   : t.decoy_price_emulated;
        if (t.patch_price) tc += *t.patch_price;
    }
    return tc;
}

}  // namespace iotdef
