#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "genealogy/closeness.hpp"

using namespace genealogy;
namespace ts = testsupport;

namespace {

Scholar plain(std::string id) { return {std::move(id), "", {}}; }

Scholar winner(std::string id, PrizeField f, int year) {
    Scholar s{std::move(id), "", {}};
    s.prizes.push_back({f, year});
    return s;
}

GenealogyGraph chain_ab_laureates() {
    return GenealogyGraph::build({winner("a", PrizeField::Physics, 1910),
                                  winner("b", PrizeField::Physics, 1930), plain("c")},
                                 {{"a", "b"}, {"b", "c"}});
}

HolderParams laureate_params(const GenealogyGraph& g, double h = -1.0) {
    HolderParams p;
    p.h = h;
    for (const auto& id : g.laureate_ids()) p.subset.insert(id);
    return p;
}

/// Brute-force H(i,j)(n) from the library's generation sets (themselves
/// oracle-checked against the boolean-matrix closure in the graph tests).
double brute_h(const GenealogyGraph& g, const std::string& i, const std::string& j, int n) {
    const auto ai = g.generation_ancestors(i, n);
    const auto aj = g.generation_ancestors(j, n);
    if (ai.empty() || aj.empty()) return 0.0;
    std::size_t shared = 0;
    for (const auto& k : ai) shared += aj.count(k);
    return static_cast<double>(shared) / static_cast<double>(std::max(ai.size(), aj.size()));
}

double brute_cross_distance(const GenealogyGraph& g, const std::string& i, const std::string& j,
                            int max_n) {
    double best = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= max_n; ++n) {
        const double h = brute_h(g, i, j, n);
        if (h > 0) best = std::min(best, n / h);
    }
    return best;
}

} // namespace

TEST_CASE("holder mean on the chain: harmonic and arithmetic") {
    const auto g = chain_ab_laureates();
    HolderParams p = laureate_params(g, -1.0);
    CHECK(holder_mean_distance(g, "c", p, ClosenessDirection::Out) ==
          doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    p.h = 1.0;
    CHECK(holder_mean_distance(g, "c", p, ClosenessDirection::Out) ==
          doctest::Approx(1.5).epsilon(1e-12));
    p.h = -2.0;
    // ((1/4 + 1)/2)^(-1/2) = sqrt(8/5)
    CHECK(holder_mean_distance(g, "c", p, ClosenessDirection::Out) ==
          doctest::Approx(std::sqrt(8.0 / 5.0)).epsilon(1e-12));
}

TEST_CASE("holder mean: unreachable conventions") {
    const auto g = GenealogyGraph::build({winner("a", PrizeField::Physics, 1910),
                                          winner("b", PrizeField::Physics, 1930), plain("c"),
                                          plain("x")},
                                         {{"a", "b"}, {"b", "c"}});
    HolderParams p = laureate_params(g, -1.0);
    CHECK(std::isinf(holder_mean_distance(g, "x", p, ClosenessDirection::Out)));
    p.h = 1.0;
    CHECK(std::isinf(holder_mean_distance(g, "x", p, ClosenessDirection::Out)));
    // h > 0 is infinite as soon as one member is unreachable: c reaches b (1) but a only via b
    p.h = 1.0;
    CHECK(holder_mean_distance(g, "c", p, ClosenessDirection::Out) == 1.5); // both reachable
    p.subset.insert("x"); // now one member is unreachable from c
    CHECK(std::isinf(holder_mean_distance(g, "c", p, ClosenessDirection::Out)));
    p.h = -1.0; // harmonic stays bounded
    CHECK(holder_mean_distance(g, "c", p, ClosenessDirection::Out) ==
          doctest::Approx(3.0 / 1.5).epsilon(1e-12)); // (1.5/3)^-1
}

TEST_CASE("holder mean: errors") {
    const auto g = chain_ab_laureates();
    HolderParams p = laureate_params(g);
    CHECK_THROWS_AS(holder_mean_distance(g, "zz", p, ClosenessDirection::Out), UnknownIdError);
    p.h = 0.0;
    CHECK_THROWS_AS(holder_mean_distance(g, "c", p, ClosenessDirection::Out),
                    InvalidArgumentError);
    HolderParams empty;
    CHECK_THROWS_AS(holder_mean_distance(g, "c", empty, ClosenessDirection::Out),
                    EmptySubsetError);
    HolderParams self_only;
    self_only.subset = {"a"};
    CHECK_THROWS_AS(holder_mean_distance(g, "a", self_only, ClosenessDirection::Out),
                    EmptySubsetError);
}

TEST_CASE("holder mean matches direct evaluation from the distance oracle on random DAGs") {
    std::mt19937 rng(501);
    for (int trial = 0; trial < 20; ++trial) {
        const auto tiny = oracle::random_dag(rng, 40, 160);
        const auto dist = oracle::all_pairs_distances(tiny);
        const auto g = ts::graph_for(tiny, rng);
        const auto laureates = g.laureate_ids();
        if (laureates.empty()) continue;

        for (const double h : {-2.0, -1.0, 1.0}) {
            HolderParams p = laureate_params(g, h);
            for (int i = 0; i < tiny.n; ++i) {
                const auto id = ts::node_id(i);
                std::vector<double> out_d, in_d;
                for (const auto& jid : laureates) {
                    if (jid == id) continue;
                    const int j = std::stoi(jid.substr(1));
                    out_d.push_back(dist[j][i] >= oracle::kInf
                                        ? std::numeric_limits<double>::infinity()
                                        : static_cast<double>(dist[j][i]));
                    in_d.push_back(dist[i][j] >= oracle::kInf
                                       ? std::numeric_limits<double>::infinity()
                                       : static_cast<double>(dist[i][j]));
                }
                if (out_d.empty()) continue; // the only laureate is i itself
                const double want_out = oracle::holder_mean(out_d, h);
                const double want_in = oracle::holder_mean(in_d, h);
                const double got_out = holder_mean_distance(g, id, p, ClosenessDirection::Out);
                const double got_in = holder_mean_distance(g, id, p, ClosenessDirection::In);
                if (std::isinf(want_out))
                    CHECK(std::isinf(got_out));
                else
                    CHECK(got_out == doctest::Approx(want_out).epsilon(1e-12));
                if (std::isinf(want_in))
                    CHECK(std::isinf(got_in));
                else
                    CHECK(got_in == doctest::Approx(want_in).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("holder mean is nondecreasing in h") {
    std::mt19937 rng(502);
    const std::vector<double> grid{-3, -2, -1, 1, 2};
    for (int trial = 0; trial < 10; ++trial) {
        const auto tiny = oracle::random_dag(rng, 30, 90);
        const auto g = ts::graph_for(tiny, rng);
        if (g.laureate_count() == 0) continue;
        for (int i = 0; i < tiny.n; ++i) {
            double prev = -1;
            for (const double h : grid) {
                HolderParams p = laureate_params(g, h);
                if (p.subset.size() == 1 && p.subset.contains(ts::node_id(i))) continue;
                const double d = holder_mean_distance(g, ts::node_id(i), p,
                                                      ClosenessDirection::Out);
                CHECK(d >= prev - 1e-9);
                prev = std::isinf(d) ? std::numeric_limits<double>::max() : d;
            }
        }
    }
}

TEST_CASE("PED-B horizontal distances reproduce the pedigree values") {
    const auto g = ts::ped_b();
    CHECK(horizontal_distance(g, "b1", "b2", 1) == 1.0);   // full siblings
    CHECK(horizontal_distance(g, "g1", "g2", 1) == 0.5);   // half-siblings
    CHECK(horizontal_distance(g, "k1", "k2", 2) == 0.5);   // first cousins
    CHECK(horizontal_distance(g, "k1", "k2", 1) == 0.0);
    CHECK(horizontal_distance(g, "m1", "m2", 3) == 0.25);  // second cousins
    CHECK(horizontal_distance(g, "m1", "m2", 2) == 0.0);

    // separate families share nothing at any generation
    for (int n = 1; n <= g.max_depth() + 1; ++n)
        CHECK(horizontal_distance(g, "b1", "g1", n) == 0.0);

    CHECK_THROWS_AS(horizontal_distance(g, "b1", "b1", 1), SameNodeError);
    CHECK_THROWS_AS(horizontal_distance(g, "b1", "b2", 0), InvalidArgumentError);
    CHECK_THROWS_AS(horizontal_distance(g, "b1", "zz", 1), UnknownIdError);
}

TEST_CASE("horizontal distance is symmetric, bounded, and 1 only on equal sets") {
    std::mt19937 rng(503);
    for (int trial = 0; trial < 15; ++trial) {
        const auto tiny = oracle::random_dag(rng, 30, 100);
        const auto dist = oracle::all_pairs_distances(tiny);
        const auto g = ts::graph_for(tiny, rng);
        for (int i = 0; i < tiny.n; ++i)
            for (int j = i + 1; j < tiny.n; ++j)
                for (int n = 1; n <= 4; ++n) {
                    const double hij = horizontal_distance(g, ts::node_id(i), ts::node_id(j), n);
                    const double hji = horizontal_distance(g, ts::node_id(j), ts::node_id(i), n);
                    CHECK(hij == hji);
                    CHECK(hij >= 0.0);
                    CHECK(hij <= 1.0);
                    CHECK(hij == doctest::Approx(oracle::horizontal(dist, i, j, n)).epsilon(1e-12));
                    if (hij == 1.0) {
                        const auto ai = oracle::generation_set(dist, i, n);
                        const auto aj = oracle::generation_set(dist, j, n);
                        CHECK(ai == aj);
                        CHECK_FALSE(ai.empty());
                    }
                }
    }
}

TEST_CASE("pairwise cross distance: pedigree ladder and disconnection") {
    const auto g = ts::ped_b();
    const int depth = g.max_depth();
    CHECK(pairwise_cross_distance(g, "b1", "b2", depth) == 1.0);  // full siblings
    CHECK(pairwise_cross_distance(g, "g1", "g2", depth) == 2.0);  // half-siblings
    CHECK(pairwise_cross_distance(g, "k1", "k2", depth) == 4.0);  // first cousins
    CHECK(pairwise_cross_distance(g, "m1", "m2", depth) == 12.0); // second cousins
    CHECK(std::isinf(pairwise_cross_distance(g, "b1", "g1", depth)));
    CHECK_THROWS_AS(pairwise_cross_distance(g, "b1", "b1", depth), SameNodeError);
    CHECK_THROWS_AS(pairwise_cross_distance(g, "b1", "b2", 0), InvalidArgumentError);
}

TEST_CASE("pairwise cross distance matches the oracle on random DAGs") {
    std::mt19937 rng(504);
    for (int trial = 0; trial < 15; ++trial) {
        const auto tiny = oracle::random_dag(rng, 30, 100);
        const auto dist = oracle::all_pairs_distances(tiny);
        const auto g = ts::graph_for(tiny, rng);
        const int max_n = std::max(1, g.max_depth());
        for (int i = 0; i < tiny.n; ++i)
            for (int j = i + 1; j < tiny.n; ++j) {
                const double want = oracle::cross_distance(dist, i, j, max_n);
                const double got =
                    pairwise_cross_distance(g, ts::node_id(i), ts::node_id(j), max_n);
                if (std::isinf(want))
                    CHECK(std::isinf(got));
                else
                    CHECK(got == doctest::Approx(want).epsilon(1e-12));
            }
    }
}

TEST_CASE("crosscloseness: single sibling, isolation, errors") {
    const auto g = ts::ped_b();
    HolderParams p;
    p.subset = {"b2"};
    CHECK(crosscloseness(g, "b1", p) == 1.0); // one laureate full sibling at distance 1

    HolderParams q;
    q.subset = {"b2", "k2", "m2"};
    CHECK(crosscloseness(g, "g1", q) == 0.0); // shares no ancestors with that family

    CHECK_THROWS_AS(crosscloseness(g, "zz", p), UnknownIdError);
    HolderParams self_only;
    self_only.subset = {"b2"};
    CHECK_THROWS_AS(crosscloseness(g, "b2", self_only), EmptySubsetError);
}

TEST_CASE("crosscloseness on MINI-NOBEL matches brute-force composition") {
    const auto g = ts::mini_nobel();
    const auto params = laureate_params(g, -1.0);
    const int max_n = g.max_depth();
    for (const auto& id : g.ids()) {
        std::vector<double> dists;
        for (const auto& jid : g.laureate_ids()) {
            if (jid == id) continue;
            dists.push_back(brute_cross_distance(g, id, jid, max_n));
        }
        const double mean = oracle::holder_mean(dists, -1.0);
        const double want = std::isinf(mean) ? 0.0 : 1.0 / mean;
        CHECK(crosscloseness(g, id, params) == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("closeness report on the chain") {
    const auto g = chain_ab_laureates();
    const auto report = closeness_report(g, laureate_params(g));
    REQUIRE(report.rows.size() == 3);
    CHECK(report.rows[0].id == "a");
    CHECK(report.rows[1].id == "b");
    CHECK(report.rows[2].id == "c");
    CHECK(report.rows[2].out_distance == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    CHECK(report.rows[2].out_closeness == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(report.rows[2].in_closeness == 0.0); // no laureate descendants
}

TEST_CASE("closeness report: disconnected node has all three values zero") {
    const auto g = GenealogyGraph::build({winner("a", PrizeField::Physics, 1910),
                                          winner("b", PrizeField::Physics, 1930), plain("c"),
                                          plain("x")},
                                         {{"a", "b"}, {"b", "c"}});
    const auto report = closeness_report(g, laureate_params(g));
    const auto& row = report.rows.back(); // "x"
    REQUIRE(row.id == "x");
    CHECK(row.out_closeness == 0.0);
    CHECK(row.in_closeness == 0.0);
    CHECK(row.cross_closeness == 0.0);
    CHECK(row.total_closeness == 0.0);
    CHECK(std::isinf(row.out_distance));
}

TEST_CASE("closeness report agrees with the per-node operations and the oracle") {
    std::mt19937 rng(505);
    for (int trial = 0; trial < 10; ++trial) {
        const auto tiny = oracle::random_dag(rng, 35, 120);
        const auto g = ts::graph_for(tiny, rng);
        if (g.laureate_count() == 0) continue;
        for (const double h : {-2.0, -1.0, 1.0}) {
            const auto params = laureate_params(g, h);
            const auto report = closeness_report(g, params);
            REQUIRE(report.rows.size() == g.node_count());
            for (const auto& row : report.rows) {
                if (params.subset.size() == 1 && params.subset.contains(row.id)) {
                    CHECK(std::isinf(row.out_distance)); // J' empty: reported unreachable
                    continue;
                }
                const double out = holder_mean_distance(g, row.id, params,
                                                        ClosenessDirection::Out);
                const double in = holder_mean_distance(g, row.id, params, ClosenessDirection::In);
                const double cross = crosscloseness(g, row.id, params);
                if (std::isinf(out))
                    CHECK(std::isinf(row.out_distance));
                else
                    CHECK(row.out_distance == doctest::Approx(out).epsilon(1e-12));
                if (std::isinf(in))
                    CHECK(std::isinf(row.in_distance));
                else
                    CHECK(row.in_distance == doctest::Approx(in).epsilon(1e-12));
                CHECK(row.cross_closeness == doctest::Approx(cross).epsilon(1e-12));
                CHECK(row.total_closeness ==
                      doctest::Approx(row.out_closeness + row.in_closeness + row.cross_closeness)
                          .epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("MINI-NOBEL total-closeness ranking matches scalar recomputation") {
    const auto g = ts::mini_nobel();
    const auto params = laureate_params(g);
    const auto report = closeness_report(g, params);

    std::vector<std::pair<double, std::string>> recomputed;
    for (const auto& id : g.ids()) {
        double total = 0;
        if (!(params.subset.size() == 1 && params.subset.contains(id))) {
            const double out = holder_mean_distance(g, id, params, ClosenessDirection::Out);
            const double in = holder_mean_distance(g, id, params, ClosenessDirection::In);
            total = (std::isinf(out) ? 0 : 1 / out) + (std::isinf(in) ? 0 : 1 / in) +
                    crosscloseness(g, id, params);
        }
        recomputed.emplace_back(-total, id);
    }
    std::sort(recomputed.begin(), recomputed.end());

    std::vector<std::pair<double, std::string>> reported;
    for (const auto& row : report.rows) reported.emplace_back(-row.total_closeness, row.id);
    std::sort(reported.begin(), reported.end());

    for (std::size_t k = 0; k < reported.size(); ++k) {
        CHECK(reported[k].second == recomputed[k].second);
        CHECK(reported[k].first == doctest::Approx(recomputed[k].first).epsilon(1e-12));
    }
}

TEST_CASE("report is bit-identical across thread counts") {
    std::mt19937 rng(506);
    const auto tiny = oracle::random_dag(rng, 60, 200);
    const auto g = ts::graph_for(tiny, rng);
    if (g.laureate_count() == 0) return;
    const auto params = laureate_params(g);
    ReportOptions one, eight;
    one.threads = 1;
    eight.threads = 8;
    const auto r1 = closeness_report(g, params, one);
    const auto r8 = closeness_report(g, params, eight);
    REQUIRE(r1.rows.size() == r8.rows.size());
    for (std::size_t k = 0; k < r1.rows.size(); ++k) {
        CHECK(r1.rows[k].id == r8.rows[k].id);
        // exact equality on purpose: scheduling must not leak into results
        CHECK(r1.rows[k].out_distance == r8.rows[k].out_distance);
        CHECK(r1.rows[k].in_distance == r8.rows[k].in_distance);
        CHECK(r1.rows[k].cross_distance == r8.rows[k].cross_distance);
        CHECK(r1.rows[k].total_closeness == r8.rows[k].total_closeness);
    }
}

TEST_CASE("closeness values are invariant under node relabeling") {
    std::mt19937 rng(507);
    const auto tiny = oracle::random_dag(rng, 30, 100);
    std::mt19937 rng_copy = rng; // same prize assignment for both labelings
    const auto g1 = ts::graph_for(tiny, rng);

    // relabel node i -> node_id(n-1-i), which reverses the index order
    auto relabel = [&](int i) { return ts::node_id(tiny.n - 1 - i); };
    std::vector<Scholar> scholars = ts::scholars_for(tiny, rng_copy);
    for (int i = 0; i < tiny.n; ++i) scholars[i].id = relabel(i);
    std::vector<Edge> edges;
    for (const auto& [a, b] : tiny.edges) edges.push_back({relabel(a), relabel(b)});
    const auto g2 = GenealogyGraph::build(std::move(scholars), edges);

    if (g1.laureate_count() == 0) return;
    HolderParams p1 = laureate_params(g1);
    HolderParams p2 = laureate_params(g2);
    const auto r1 = closeness_report(g1, p1);
    const auto r2 = closeness_report(g2, p2);
    std::map<std::string, const ClosenessRow*> by_id2;
    for (const auto& row : r2.rows) by_id2[row.id] = &row;
    for (int i = 0; i < tiny.n; ++i) {
        const auto& row1 = r1.rows[static_cast<std::size_t>(i)];
        REQUIRE(row1.id == ts::node_id(i));
        const auto& row2 = *by_id2.at(relabel(i));
        CHECK(row1.total_closeness == doctest::Approx(row2.total_closeness).epsilon(1e-12));
        CHECK(row1.out_closeness == doctest::Approx(row2.out_closeness).epsilon(1e-12));
        CHECK(row1.in_closeness == doctest::Approx(row2.in_closeness).epsilon(1e-12));
        CHECK(row1.cross_closeness == doctest::Approx(row2.cross_closeness).epsilon(1e-12));
    }
}

TEST_CASE("adding a shortcut edge never increases any shortest distance") {
    std::mt19937 rng(508);
    for (int trial = 0; trial < 10; ++trial) {
        auto tiny = oracle::random_dag(rng, 25, 60);
        const auto dist = oracle::all_pairs_distances(tiny);
        // find a reachable pair at distance >= 2 and wire it directly
        int from = -1, to = -1;
        for (int i = 0; i < tiny.n && from < 0; ++i)
            for (int j = 0; j < tiny.n; ++j)
                if (dist[i][j] >= 2 && dist[i][j] < oracle::kInf) {
                    from = i;
                    to = j;
                    break;
                }
        if (from < 0) continue;

        std::mt19937 rng_copy = rng;
        const auto before = ts::graph_for(tiny, rng);
        tiny.edges.emplace_back(from, to);
        const auto after = ts::graph_for(tiny, rng_copy);

        for (int i = 0; i < tiny.n; ++i) {
            const auto d_before =
                before.bfs_distances(static_cast<NodeIndex>(i), Direction::ToDescendants);
            const auto d_after =
                after.bfs_distances(static_cast<NodeIndex>(i), Direction::ToDescendants);
            for (int k = 0; k < tiny.n; ++k) {
                if (d_before[k] == kNoPath) continue;
                CHECK(d_after[k] <= d_before[k]);
            }
        }
    }
}

TEST_CASE("kinship neighborhood on PED-B") {
    const auto g = ts::ped_b();

    const auto sibs = kinship_neighborhood(g, "b1", 1);
    REQUIRE(sibs.size() == 1);
    CHECK(sibs[0].id == "b2");
    CHECK(sibs[0].n == 1);
    CHECK(sibs[0].h == 1.0);

    const auto kin = kinship_neighborhood(g, "k1", 2);
    REQUIRE(kin.size() == 1);
    CHECK(kin[0].id == "k2");
    CHECK(kin[0].n == 2);
    CHECK(kin[0].h == 0.5);

    CHECK_THROWS_AS(kinship_neighborhood(g, "b1", 0), InvalidArgumentError);
    CHECK_THROWS_AS(kinship_neighborhood(g, "zz", 1), UnknownIdError);
}

TEST_CASE("kinship neighborhood matches the brute-force double loop on MINI-NOBEL") {
    const auto g = ts::mini_nobel();
    const int max_n = 2;
    for (const auto& id : g.ids()) {
        std::map<std::string, std::pair<int, double>> expected;
        for (const auto& jid : g.ids()) {
            if (jid == id) continue;
            for (int n = 1; n <= max_n; ++n) {
                const double h = brute_h(g, id, jid, n);
                if (h > 0) {
                    expected.emplace(jid, std::make_pair(n, h));
                    break;
                }
            }
        }
        const auto got = kinship_neighborhood(g, id, max_n);
        REQUIRE(got.size() == expected.size());
        for (const auto& entry : got) {
            const auto it = expected.find(entry.id);
            REQUIRE(it != expected.end());
            CHECK(entry.n == it->second.first);
            CHECK(entry.h == doctest::Approx(it->second.second).epsilon(1e-12));
        }
    }
}

TEST_CASE("kinship lineage filter keeps laureates and their ancestors only") {
    const auto g = ts::mini_nobel();
    // s04 and s05 are half-siblings through s03
    const auto all = kinship_neighborhood(g, "s04", 2, false);
    const auto filtered = kinship_neighborhood(g, "s04", 2, true);
    CHECK(filtered.size() <= all.size());
    for (const auto& entry : filtered) {
        bool ok = !g.scholar(entry.id).prizes.empty();
        if (!ok)
            for (const auto& d : g.descendants(entry.id))
                if (!g.scholar(d).prizes.empty()) {
                    ok = true;
                    break;
                }
        CHECK(ok);
    }
}

TEST_CASE("exclude_self=false folds the zero self-distance into the mean") {
    const auto g = chain_ab_laureates();
    HolderParams p = laureate_params(g, 1.0);
    p.exclude_self = false;

    // b against J = {a, b}: distances {1, 0} -> arithmetic mean 0.5
    CHECK(holder_mean_distance(g, "b", p, ClosenessDirection::Out) ==
          doctest::Approx(0.5).epsilon(1e-12));
    // a sees its own 0 but b is not an ancestor of a: h > 0 gives +inf
    CHECK(std::isinf(holder_mean_distance(g, "a", p, ClosenessDirection::Out)));

    // the report path must agree with the direct operation for every node
    const auto report = closeness_report(g, p);
    for (const auto& row : report.rows) {
        const double want = holder_mean_distance(g, row.id, p, ClosenessDirection::Out);
        if (std::isinf(want))
            CHECK(std::isinf(row.out_distance));
        else
            CHECK(row.out_distance == doctest::Approx(want).epsilon(1e-12));
        const double want_cross = crosscloseness(g, row.id, p);
        if (std::isinf(want_cross))
            CHECK(std::isinf(row.cross_closeness));
        else
            CHECK(row.cross_closeness == doctest::Approx(want_cross).epsilon(1e-12));
    }

    // under h < 0 a zero distance collapses the mean to zero distance
    HolderParams neg = laureate_params(g, -1.0);
    neg.exclude_self = false;
    CHECK(holder_mean_distance(g, "b", neg, ClosenessDirection::Out) == 0.0);
}
