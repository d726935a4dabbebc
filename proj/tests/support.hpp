#pragma once

// Shared test helpers: a random-network generator bounded to small spaces and
// independent oracles for the algorithms under test.

#include <string>
#include <vector>

#include "iotdef/metrics.hpp"
#include "iotdef/network.hpp"
#include "iotdef/nsga2.hpp"
#include "iotdef/rng.hpp"

namespace iotdef::testing {

// Random network with at most 12 nodes and a genome of at most 8 bits.
// Subnet graphs may contain cycles so the simple-path machinery is exercised.
inline NetworkSpec random_spec(Rng& rng) {
    NetworkSpec spec;
    const int n_subnets = 2 + static_cast<int>(rng.below(3));
    for (int s = 0; s < n_subnets; ++s)
        spec.subnets.push_back({"s" + std::to_string(s), false});
    spec.subnets[rng.below(n_subnets)].entry = true;
    for (auto& s : spec.subnets)
        if (rng.chance(0.4)) s.entry = true;

    for (int a = 0; a < n_subnets; ++a)
        for (int b = 0; b < n_subnets; ++b)
            if (a != b && rng.chance(0.5))
                spec.subnet_edges.emplace_back(spec.subnets[a].id,
                                               spec.subnets[b].id);

    auto subnet_of = [&](int i) { return spec.subnets[i % n_subnets].id; };
    auto add_type = [&](const std::string& name, DeviceCategory cat, int count,
                        const std::string& subnet) {
        DeviceType t;
        t.name = name;
        t.category = cat;
        t.count = count;
        t.subnet = subnet;
        t.decoy_price_emulated = 100 + 100 * static_cast<Money>(rng.below(5));
        if (cat == DeviceCategory::server)
            t.decoy_price_full_os =
                t.decoy_price_emulated + 100 * (1 + static_cast<Money>(rng.below(5)));
        if (cat == DeviceCategory::iot)
            t.patch_price = 500 + 500 * static_cast<Money>(rng.below(5));
        spec.device_types.push_back(std::move(t));
    };

    add_type("srv", DeviceCategory::server, 1 + static_cast<int>(rng.below(2)),
             subnet_of(static_cast<int>(rng.below(n_subnets))));
    const int clients = static_cast<int>(rng.below(3));
    for (int c = 0; c < clients; ++c)
        add_type("clt" + std::to_string(c), DeviceCategory::client,
                 1 + static_cast<int>(rng.below(2)),
                 subnet_of(static_cast<int>(rng.below(n_subnets))));
    const int iots = static_cast<int>(rng.below(3));
    for (int i = 0; i < iots; ++i)
        add_type("iot" + std::to_string(i), DeviceCategory::iot,
                 1 + static_cast<int>(rng.below(2)),
                 subnet_of(static_cast<int>(rng.below(n_subnets))));

    spec.p_emulated = 0.5;
    spec.p_full_os = 0.9;
    spec.intelligence_cost = 1000 + 1000 * static_cast<Money>(rng.below(5));
    return spec;
}

// Rank assignment by repeated peeling of the full domination matrix; the
// comparison oracle for fast_nondominated_sort.
inline std::vector<int> rank_oracle(const std::vector<FitnessTriple>& points) {
    const int n = static_cast<int>(points.size());
    std::vector<std::vector<bool>> dom(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) dom[i][j] = dominates(points[i], points[j]);

    std::vector<int> rank(n, -1);
    int assigned = 0, level = 0;
    while (assigned < n) {
        std::vector<int> layer;
        for (int i = 0; i < n; ++i) {
            if (rank[i] != -1) continue;
            bool dominated = false;
            for (int j = 0; j < n && !dominated; ++j)
                dominated = rank[j] == -1 && dom[j][i];
            if (!dominated) layer.push_back(i);
        }
        for (int i : layer) rank[i] = level;
        assigned += static_cast<int>(layer.size());
        ++level;
    }
    return rank;
}

}  // namespace iotdef::testing
