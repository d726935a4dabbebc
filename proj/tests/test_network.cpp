#include <doctest.h>

#include <algorithm>
#include <set>

#include "iotdef/network.hpp"
#include "iotdef/scenarios.hpp"
#include "support.hpp"

using namespace iotdef;

TEST_CASE("pacs network matches the case-study inventory") {
    const IoTNetwork net = build_network(pacs_case_study());
    CHECK(net.nodes.size() == 16);
    CHECK(net.subnets.size() == 3);
    CHECK(net.real_device_count() == 16);
    for (const auto& n : net.nodes) {
        CHECK(!n.decoy);
        CHECK(!n.patched);
        CHECK(n.interaction_prob == 1.0);
        CHECK(n.cost == 0);
    }
    CHECK(decoy_type_indices(net).size() == 7);
    CHECK(patch_type_indices(net).size() == 4);
    CHECK(total_cost(net) == 36900);
}

TEST_CASE("minimal two-node network builds") {
    NetworkSpec spec;
    spec.subnets = {{"a", true}, {"b", false}};
    spec.subnet_edges = {{"a", "b"}};
    DeviceType server;
    server.name = "srv";
    server.category = DeviceCategory::server;
    server.count = 1;
    server.subnet = "b";
    server.decoy_price_emulated = 100;
    server.decoy_price_full_os = 200;
    DeviceType client;
    client.name = "clt";
    client.category = DeviceCategory::client;
    client.count = 1;
    client.subnet = "a";
    client.decoy_price_emulated = 50;
    spec.device_types = {server, client};
    spec.intelligence_cost = 1000;

    const IoTNetwork net = build_network(spec);
    CHECK(net.nodes.size() == 2);
    CHECK(patch_type_indices(net).empty());
}

TEST_CASE("scaled 2-50-200 network has 252 nodes in 10 subnets") {
    const IoTNetwork net = build_network(scaled_network(200));
    CHECK(net.nodes.size() == 252);
    CHECK(net.subnets.size() == 10);
    const IoTNetwork net125 = build_network(scaled_network(125));
    CHECK(decoy_type_indices(net125).size() == 8);
    CHECK(patch_type_indices(net125).size() == 5);
}

TEST_CASE("build_network rejects malformed specs") {
    NetworkSpec spec = pacs_case_study();
    SUBCASE("duplicate type names") {
        spec.device_types.push_back(spec.device_types[0]);
        CHECK_THROWS_AS(build_network(spec), std::invalid_argument);
    }
    SUBCASE("zero count") {
        spec.device_types[1].count = 0;
        CHECK_THROWS_AS(build_network(spec), std::invalid_argument);
    }
    SUBCASE("server without full-OS price") {
        spec.device_types[0].decoy_price_full_os.reset();
        CHECK_THROWS_AS(build_network(spec), std::invalid_argument);
    }
    SUBCASE("iot without patch price") {
        spec.device_types[3].patch_price.reset();
        CHECK_THROWS_AS(build_network(spec), std::invalid_argument);
    }
    SUBCASE("client with patch price") {
        spec.device_types[1].patch_price = 100;
        CHECK_THROWS_AS(build_network(spec), std::invalid_argument);
    }
    SUBCASE("no entry subnet") {
        for (auto& s : spec.subnets) s.entry = false;
        CHECK_THROWS_AS(build_network(spec), std::invalid_argument);
    }
    SUBCASE("intra-subnet edge") {
        spec.subnet_edges.emplace_back("VLAN2", "VLAN2");
        CHECK_THROWS_AS(build_network(spec), std::invalid_argument);
    }
    SUBCASE("no target-category device") {
        spec.device_types.erase(spec.device_types.begin());
        CHECK_THROWS_AS(build_network(spec), std::invalid_argument);
    }
}

TEST_CASE("encoding layout matches the case-study example") {
    const IoTNetwork net = build_network(pacs_case_study());
    const DeploymentSpace space(net);
    CHECK(space.width() == 12);

    const DeploymentVector dv1 = pacs_deployment("dv1");
    CHECK(space.encode(dv1) == "101010001011");
    CHECK(space.decode("101010001011") == dv1);

    const DeploymentVector zero = space.decode(std::string(12, '0'));
    CHECK(zero == DeploymentVector{{0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0}});
    CHECK(!space.has_server_decoy(zero));

    // The two-bit server code clamps 11 to full OS.
    CHECK(space.decode("110000000000").decoy_part[0] == 2);

    CHECK_THROWS_AS(space.decode("101"), std::invalid_argument);
    CHECK_THROWS_AS(space.decode("10101000101x"), std::invalid_argument);
}

TEST_CASE("encode/decode round trip over random valid vectors") {
    const IoTNetwork net = build_network(pacs_case_study());
    const DeploymentSpace space(net);
    Rng rng(2024);
    for (int i = 0; i < 1000; ++i) {
        const DeploymentVector dv = space.random_deployment(rng);
        CHECK(space.decode(space.encode(dv)) == dv);
    }
}

TEST_CASE("repair enforces the server-decoy rule") {
    const IoTNetwork net = build_network(pacs_case_study());
    const DeploymentSpace space(net);
    Rng rng(7);

    DeploymentVector valid{{1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0}};
    CHECK(space.repair(valid, rng) == valid);

    DeploymentVector zero{{0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0}};
    const DeploymentVector repaired = space.repair(zero, rng);
    CHECK(repaired.decoy_part[0] == 1);
    CHECK(space.repair(repaired, rng) == repaired);  // idempotent
}

TEST_CASE("repair picks uniformly among several server types") {
    NetworkSpec spec = pacs_case_study();
    DeviceType second = spec.device_types[0];
    second.name = "PACS server (BSD)";
    spec.device_types.push_back(second);
    const IoTNetwork net = build_network(spec);
    const DeploymentSpace space(net);

    DeploymentVector zero{{0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0}};
    std::set<int> chosen;
    Rng rng(11);
    for (int i = 0; i < 64; ++i) {
        const DeploymentVector r = space.repair(zero, rng);
        for (std::size_t p = 0; p < r.decoy_part.size(); ++p)
            if (r.decoy_part[p] == 1) chosen.insert(static_cast<int>(p));
    }
    CHECK(chosen == std::set<int>{0, 7});

    Rng a(5), b(5);
    CHECK(space.repair(zero, a) == space.repair(zero, b));
}

TEST_CASE("apply_deployment adds decoys and removes patched devices") {
    const IoTNetwork net = build_network(pacs_case_study());

    SUBCASE("case-study vector: three decoys, three patched types") {
        const IoTNetwork deployed =
            apply_deployment(net, pacs_deployment("dv1"));
        int decoys = 0, patched = 0;
        for (const auto& n : deployed.nodes) {
            decoys += n.decoy;
            patched += n.patched;
        }
        CHECK(decoys == 3);
        CHECK(patched == 3);
        CHECK(deployed.nodes.size() == 19);

        // Full-OS server decoy and two emulated decoys, at catalog prices.
        std::vector<std::pair<double, Money>> decoy_attrs;
        for (const auto& n : deployed.nodes)
            if (n.decoy) decoy_attrs.emplace_back(n.interaction_prob, n.cost);
        CHECK(decoy_attrs == std::vector<std::pair<double, Money>>{
                                 {0.9, 1500}, {0.5, 300}, {0.5, 200}});

        for (const auto& n : deployed.nodes) {
            if (n.decoy) continue;
            CHECK(n.interaction_prob == 1.0);
            CHECK(n.cost == 0);
        }
    }
    SUBCASE("single emulated server decoy") {
        const IoTNetwork deployed =
            apply_deployment(net, pacs_deployment("D*"));
        int decoys = 0, patched = 0;
        for (const auto& n : deployed.nodes) {
            decoys += n.decoy;
            patched += n.patched;
        }
        CHECK(decoys == 1);
        CHECK(patched == 0);
        CHECK(deployed.nodes.back().interaction_prob == 0.5);
        CHECK(deployed.nodes.back().cost == 400);
    }
    SUBCASE("decoy count equals selected positions") {
        Rng rng(3);
        const DeploymentSpace space(net);
        for (int i = 0; i < 200; ++i) {
            const DeploymentVector dv = space.random_deployment(rng);
            int expected = 0;
            for (int v : dv.decoy_part) expected += v > 0;
            const IoTNetwork deployed = apply_deployment(net, dv);
            int decoys = 0;
            for (const auto& n : deployed.nodes) decoys += n.decoy;
            CHECK(decoys == expected);
            CHECK(deployed.nodes.size() == net.nodes.size() + expected);
        }
    }
}

TEST_CASE("random_deployment is seeded and covers every legal value") {
    const IoTNetwork net = build_network(pacs_case_study());
    const DeploymentSpace space(net);

    Rng a(99), b(99);
    for (int i = 0; i < 50; ++i)
        CHECK(space.random_deployment(a) == space.random_deployment(b));

    // Single server type, so the repaired first component is never 0.
    Rng rng(1);
    std::vector<std::set<int>> decoy_seen(7);
    std::vector<std::set<int>> patch_seen(4);
    for (int i = 0; i < 10000; ++i) {
        const DeploymentVector dv = space.random_deployment(rng);
        CHECK(dv.decoy_part[0] >= 1);
        for (std::size_t p = 0; p < dv.decoy_part.size(); ++p)
            decoy_seen[p].insert(dv.decoy_part[p]);
        for (std::size_t p = 0; p < dv.patch_part.size(); ++p)
            patch_seen[p].insert(dv.patch_part[p]);
    }
    CHECK(decoy_seen[0] == std::set<int>{1, 2});
    for (std::size_t p = 1; p < decoy_seen.size(); ++p)
        CHECK(decoy_seen[p] == std::set<int>{0, 1});
    for (const auto& seen : patch_seen) CHECK(seen == std::set<int>{0, 1});
}

TEST_CASE("valid deployment space sizes") {
    CHECK(DeploymentSpace(build_network(pacs_case_study())).valid_count() ==
          2048);
    CHECK(DeploymentSpace(build_network(scaled_network(50))).valid_count() ==
          128);
}

TEST_CASE("network spec JSON round trip") {
    const NetworkSpec spec = pacs_case_study();
    const NetworkSpec parsed = parse_network_spec(to_json(spec));
    const IoTNetwork a = build_network(spec);
    const IoTNetwork b = build_network(parsed);
    CHECK(a.nodes.size() == b.nodes.size());
    CHECK(a.subnet_edges == b.subnet_edges);
    CHECK(total_cost(a) == total_cost(b));
    CHECK(a.device_types.size() == b.device_types.size());
    for (std::size_t i = 0; i < a.device_types.size(); ++i) {
        CHECK(a.device_types[i].name == b.device_types[i].name);
        CHECK(a.device_types[i].patch_price == b.device_types[i].patch_price);
    }

    CHECK_THROWS_AS(parse_network_spec("{not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_network_spec("{\"subnets\": []}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(load_network_spec("/nonexistent/x.spec"),
                    std::invalid_argument);
}

TEST_CASE("bundled pacs spec file reproduces the builtin scenario") {
    const NetworkSpec file =
        load_network_spec(std::string(IOTDEF_SOURCE_DIR) + "/data/pacs.spec");
    const IoTNetwork net = build_network(file);
    CHECK(net.nodes.size() == 16);
    CHECK(total_cost(net) == 36900);
    CHECK(to_json(file) == to_json(pacs_case_study()));
}

TEST_CASE("random specs always build into valid networks") {
    Rng rng(31337);
    for (int i = 0; i < 200; ++i) {
        const IoTNetwork net =
            build_network(iotdef::testing::random_spec(rng));
        CHECK(net.nodes.size() <= 12);
        CHECK(DeploymentSpace(net).width() <= 8);
    }
}
