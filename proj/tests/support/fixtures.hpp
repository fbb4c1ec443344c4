#pragma once

// Shared helpers for the test binaries: fixture loading and the bridge
// between oracle::TinyGraph (index-based) and GenealogyGraph (id-based).
// node_id() zero-pads, so lexicographic id order equals numeric index order
// and library NodeIndex i corresponds to oracle node i.

#include <cstdio>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "genealogy/graph.hpp"
#include "genealogy/io.hpp"
#include "oracles.hpp"

namespace testsupport {

inline std::string node_id(int i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "n%03d", i);
    return buf;
}

inline std::vector<genealogy::Scholar> scholars_for(const oracle::TinyGraph& g,
                                                    std::mt19937& rng) {
    std::vector<genealogy::Scholar> out;
    for (int i = 0; i < g.n; ++i) {
        genealogy::Scholar s;
        s.id = node_id(i);
        s.name = "Scholar " + std::to_string(i);
        if (rng() % 5 < 2) {
            const int prizes = 1 + (rng() % 4 == 0 ? 1 : 0);
            for (int p = 0; p < prizes; ++p)
                s.prizes.push_back({static_cast<genealogy::PrizeField>(rng() % 4),
                                    1901 + static_cast<int>(rng() % 120)});
        }
        out.push_back(std::move(s));
    }
    return out;
}

inline std::vector<genealogy::Edge> edges_for(const oracle::TinyGraph& g) {
    std::vector<genealogy::Edge> out;
    for (const auto& [a, b] : g.edges) out.push_back({node_id(a), node_id(b)});
    return out;
}

inline genealogy::GenealogyGraph graph_for(const oracle::TinyGraph& g, std::mt19937& rng) {
    return genealogy::GenealogyGraph::build(scholars_for(g, rng), edges_for(g));
}

inline std::filesystem::path fixture(const char* name) {
    return std::filesystem::path(GENEALOGY_FIXTURES_DIR) / name;
}

inline genealogy::GenealogyGraph load_fixture(const char* nodes, const char* edges) {
    const genealogy::DatasetManifest manifest{fixture(nodes), fixture(edges), 1, std::nullopt};
    return genealogy::load_dataset(manifest);
}

inline genealogy::GenealogyGraph mini_nobel() {
    return load_fixture("mini_nobel_nodes.csv", "mini_nobel_edges.csv");
}

inline genealogy::GenealogyGraph ped_b() {
    return load_fixture("ped_b_nodes.csv", "ped_b_edges.csv");
}

} // namespace testsupport
