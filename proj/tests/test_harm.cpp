#include <doctest.h>

#include <set>
#include <sstream>

#include "iotdef/harm.hpp"
#include "iotdef/scenarios.hpp"
#include "support.hpp"

using namespace iotdef;

namespace {

Harm pacs_harm(const DeploymentVector& dv) {
    const IoTNetwork net = build_network(pacs_case_study());
    return build_harm(apply_deployment(net, dv));
}

DeploymentVector pacs_zero() {
    return {{0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0}};
}

std::size_t edge_count(const Harm& harm) {
    std::size_t n = 0;
    for (const auto& adj : harm.adjacency) n += adj.size();
    return n;
}

}  // namespace

TEST_CASE("undefended pacs harm: layer structure and path counts") {
    const Harm harm = pacs_harm(pacs_zero());

    CHECK(harm.upper == harm.network.subnet_edges);
    // client->server 10*2, iot->server 4*2, iot->client 4*10.
    CHECK(edge_count(harm) == 68);
    for (const auto& vulns : harm.lower) CHECK(vulns.size() == 1);

    const PathSet paths = enumerate_attack_paths(harm);
    CHECK(paths.naprt() == 108);
    CHECK(paths.napdt() == 0);
}

TEST_CASE("patched node loses all edges and vulnerabilities") {
    DeploymentVector dv = pacs_zero();
    dv.decoy_part[0] = 1;  // keep the vector valid
    dv.patch_part[0] = 1;  // patch the ultrasound device
    const Harm harm = pacs_harm(dv);
    for (std::size_t i = 0; i < harm.network.nodes.size(); ++i) {
        if (!harm.network.nodes[i].patched) continue;
        CHECK(harm.adjacency[i].empty());
        CHECK(harm.lower[i].empty());
        for (const auto& adj : harm.adjacency)
            CHECK(std::find(adj.begin(), adj.end(), static_cast<int>(i)) ==
                  adj.end());
    }
}

TEST_CASE("decoy funnel: a decoy client leads only to the decoy server") {
    const Harm harm = pacs_harm(pacs_deployment("dv1"));
    const auto& nodes = harm.network.nodes;
    int decoy_client = -1, decoy_server = -1;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!nodes[i].decoy) continue;
        const auto cat = harm.network.device_types[nodes[i].type_index].category;
        if (cat == DeviceCategory::client) decoy_client = static_cast<int>(i);
        if (cat == DeviceCategory::server) decoy_server = static_cast<int>(i);
    }
    REQUIRE(decoy_client >= 0);
    REQUIRE(decoy_server >= 0);
    CHECK(harm.adjacency[decoy_client] == std::vector<int>{decoy_server});
    // Rule (iv): nothing real is reachable from any decoy.
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!nodes[i].decoy) continue;
        for (int v : harm.adjacency[i]) CHECK(nodes[v].decoy);
    }
}

TEST_CASE("path counts match the comparison table") {
    SUBCASE("combined defense P1") {
        const PathSet paths =
            enumerate_attack_paths(pacs_harm(pacs_deployment("P1")));
        CHECK(paths.naprt() == 64);
        CHECK(paths.napdt() == 40);
    }
    SUBCASE("combined defense P4") {
        const PathSet paths =
            enumerate_attack_paths(pacs_harm(pacs_deployment("P4")));
        CHECK(paths.naprt() == 64);
        CHECK(paths.napdt() == 34);
    }
    SUBCASE("only deception: all decoys, no patches") {
        const PathSet paths = enumerate_attack_paths(
            pacs_harm({{2, 1, 1, 1, 1, 1, 1}, {0, 0, 0, 0}}));
        CHECK(paths.naprt() == 108);
        CHECK(paths.napdt() == 68);
    }
}

TEST_CASE("grouping collapses the P2 decoy paths into three classes") {
    const PathSet paths =
        enumerate_attack_paths(pacs_harm(pacs_deployment("P2")));
    REQUIRE(paths.napdt() == 55);
    const PathSet grouped = group_paths(paths);
    REQUIRE(grouped.decoy_classes.size() == 3);

    auto has_class = [&](int len, int decoys, double prob, std::uint64_t mult) {
        for (const auto& c : grouped.decoy_classes)
            if (c.length == len && c.decoy_count == decoys &&
                c.prob_product == doctest::Approx(prob).epsilon(1e-12) &&
                c.multiplicity == mult)
                return true;
        return false;
    };
    // Direct hops from 14 real entries, three-hop paths through clients, and
    // the decoy-ultrasound entry path.
    CHECK(has_class(2, 1, 0.9, 14));
    CHECK(has_class(3, 1, 0.9, 40));
    CHECK(has_class(2, 2, 0.45, 1));

    std::uint64_t total = 0;
    for (const auto& c : grouped.decoy_classes) total += c.multiplicity;
    CHECK(total == 55);
}

TEST_CASE("grouping an empty path set yields an empty grouping") {
    PathSet empty;
    empty.has_explicit = true;
    const PathSet grouped = group_paths(empty);
    CHECK(grouped.real_classes.empty());
    CHECK(grouped.decoy_classes.empty());
    CHECK(grouped.has_grouped);
}

TEST_CASE("grouping conserves multiplicity on random deployments") {
    Rng rng(404);
    const IoTNetwork net = build_network(pacs_case_study());
    const DeploymentSpace space(net);
    for (int i = 0; i < 50; ++i) {
        const DeploymentVector dv = space.random_deployment(rng);
        const PathSet paths =
            enumerate_attack_paths(build_harm(apply_deployment(net, dv)));
        const PathSet grouped = group_paths(paths);
        std::uint64_t real = 0, decoy = 0;
        for (const auto& c : grouped.real_classes) real += c.multiplicity;
        for (const auto& c : grouped.decoy_classes) decoy += c.multiplicity;
        CHECK(real == paths.real_paths.size());
        CHECK(decoy == paths.decoy_paths.size());
    }
}

TEST_CASE("enumerated paths satisfy the attacker semantics") {
    Rng rng(777);
    for (int i = 0; i < 150; ++i) {
        const IoTNetwork net =
            build_network(iotdef::testing::random_spec(rng));
        const DeploymentSpace space(net);
        const DeploymentVector dv = space.random_deployment(rng);
        const Harm harm = build_harm(apply_deployment(net, dv));
        const PathSet paths = enumerate_attack_paths(harm);
        const auto& nodes = harm.network.nodes;

        for (const auto& p : paths.real_paths) {
            // AP_r purity: no decoys anywhere.
            for (int u : p.nodes) CHECK(!nodes[u].decoy);
            CHECK(p.decoy_count == 0);
        }
        for (const auto& p : paths.decoy_paths) {
            CHECK(p.decoy_count >= 1);
            CHECK(nodes[p.nodes.back()].decoy);
            // Decoy suffix: once trapped, never back on a real node.
            bool seen_decoy = false;
            for (int u : p.nodes) {
                if (nodes[u].decoy) seen_decoy = true;
                if (seen_decoy) CHECK(nodes[u].decoy);
            }
        }
        // Simple paths, starting at entries, respecting middle-layer edges.
        auto check_common = [&](const AttackPath& p) {
            std::set<int> distinct(p.nodes.begin(), p.nodes.end());
            CHECK(distinct.size() == p.nodes.size());
            const int s0 =
                harm.network.type_subnet(nodes[p.nodes.front()].type_index);
            CHECK(harm.network.entry_subnet[s0]);
            for (std::size_t k = 0; k + 1 < p.nodes.size(); ++k) {
                const auto& adj = harm.adjacency[p.nodes[k]];
                CHECK(std::find(adj.begin(), adj.end(), p.nodes[k + 1]) !=
                      adj.end());
            }
        };
        for (const auto& p : paths.real_paths) check_common(p);
        for (const auto& p : paths.decoy_paths) check_common(p);
    }
}

TEST_CASE("real-path count ignores the decoy part of a deployment") {
    Rng rng(90125);
    for (int i = 0; i < 100; ++i) {
        const IoTNetwork net =
            build_network(iotdef::testing::random_spec(rng));
        const DeploymentSpace space(net);
        const DeploymentVector a = space.random_deployment(rng);
        DeploymentVector b = space.random_deployment(rng);
        b.patch_part = a.patch_part;
        const PathSet pa =
            enumerate_attack_paths(build_harm(apply_deployment(net, a)));
        const PathSet pb =
            enumerate_attack_paths(build_harm(apply_deployment(net, b)));
        CHECK(pa.naprt() == pb.naprt());
    }
}

TEST_CASE("path dump uses section headers and arrow-separated ids") {
    const Harm harm = pacs_harm(pacs_deployment("D*"));
    const PathSet paths = enumerate_attack_paths(harm);
    std::ostringstream out;
    dump_paths(harm, paths, out);
    const std::string text = out.str();
    CHECK(text.find("#AP_r\n") != std::string::npos);
    CHECK(text.find("#AP_d\n") != std::string::npos);
    CHECK(text.find("->pacs_server_linux_decoy\n") != std::string::npos);

    std::istringstream in(text);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 2 + paths.naprt() + paths.napdt());
}

TEST_CASE("length cap bounds the enumeration") {
    const Harm harm = pacs_harm(pacs_zero());
    EnumerationOptions options;
    options.max_length = 2;
    const PathSet paths = enumerate_attack_paths(harm, options);
    // Two-hop paths only: 10*2 from clients, 4*2 from iot devices.
    CHECK(paths.naprt() == 28);
    for (const auto& p : paths.real_paths) CHECK(p.length() <= 2);
}
