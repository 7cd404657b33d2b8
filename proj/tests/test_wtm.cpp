#include <doctest.h>

#include <algorithm>
#include <queue>
#include <random>
#include <sstream>

#include "sph/error.hpp"
#include "sph/wtm.hpp"

using sph::NodeId;
using sph::SpatialGraph;

namespace {

SpatialGraph complete(std::size_t n) {
    SpatialGraph g;
    for (std::size_t i = 0; i < n; ++i) g.add_node({0, 0});
    for (NodeId a = 0; a < n; ++a)
        for (NodeId b = a + 1; b < n; ++b) g.add_edge(a, b);
    return g;
}

SpatialGraph path3() {
    SpatialGraph g;
    for (int i = 0; i < 3; ++i) g.add_node({static_cast<double>(i), 0});
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    return g;
}

// Re-simulation that recounts infected neighbours from scratch every step,
// comparing by floating-point fraction away from exact ties.
std::vector<int> resimulate(const SpatialGraph& g, const std::vector<NodeId>& seeds, double threshold) {
    const std::size_t n = g.node_count();
    std::vector<int> t(n, -1);
    for (NodeId s : seeds) t[s] = 0;
    for (int step = 1;; ++step) {
        std::vector<NodeId> adopters;
        for (NodeId v = 0; v < n; ++v) {
            if (t[v] >= 0) continue;
            int deg = 0, inf = 0;
            for (const auto& e : g.edges()) {
                if (e.u != v && e.v != v) continue;
                ++deg;
                NodeId w = e.u == v ? e.v : e.u;
                inf += t[w] >= 0;
            }
            if (deg > 0 && static_cast<double>(inf) / deg >= threshold) adopters.push_back(v);
        }
        if (adopters.empty()) {
            for (auto& x : t)
                if (x < 0) x = step;
            return t;
        }
        for (NodeId v : adopters) t[v] = step;
    }
}

}  // namespace

TEST_CASE("K5 with one seed") {
    auto t = sph::run_wtm_from(complete(5), {0}, 0.18);
    CHECK(t.time == std::vector<int>{0, 1, 1, 1, 1});
    CHECK(t.never_infected_value == 2);
    CHECK(t.seed_count() == 1);
    auto net = sph::infection_subgraph(complete(5), t, 1);
    CHECK(net.graph.node_count() == 5);
    CHECK(net.graph.edge_count() == 10);
}

TEST_CASE("path a-b-c") {
    auto g = path3();
    auto t = sph::run_wtm_from(g, {0}, 0.18);
    CHECK(t.time == std::vector<int>{0, 1, 2});
    auto at0 = sph::infection_subgraph(g, t, 0);
    CHECK(at0.nodes == std::vector<NodeId>{0});
    CHECK(at0.graph.edge_count() == 0);
    auto at2 = sph::infection_subgraph(g, t, 2);
    CHECK(at2.graph.node_count() == 3);
    CHECK(at2.graph.edge_count() == 2);
}

TEST_CASE("disconnected nodes") {
    SpatialGraph g;
    g.add_node({0, 0});
    g.add_node({1, 1});
    auto t = sph::run_wtm_from(g, {0}, 0.5);
    CHECK(t.time == std::vector<int>{0, 1});
    CHECK(t.never_infected_value == 1);
    CHECK_FALSE(t.infected(1));
}

TEST_CASE("exact threshold boundary") {
    // Degree 50 with 9 infected neighbours: 9/50 = 0.18 exactly must adopt.
    SpatialGraph g;
    for (int i = 0; i < 51; ++i) g.add_node({0, 0});
    for (NodeId i = 1; i <= 50; ++i) g.add_edge(0, i);
    std::vector<NodeId> seeds;
    for (NodeId i = 1; i <= 9; ++i) seeds.push_back(i);
    auto t = sph::run_wtm_from(g, seeds, 0.18);
    CHECK(t.time[0] == 1);
    seeds.pop_back();
    auto u = sph::run_wtm_from(g, seeds, 0.18);
    CHECK_FALSE(u.infected(0));
}

TEST_CASE("seed count and full seeding") {
    auto g = sph::gen_lattice(10);
    auto t = sph::run_wtm(g, {0.05, 0.18, 3});
    CHECK(t.seed_count() == 5);
    auto all = sph::run_wtm(g, {1.0, 0.18, 3});
    CHECK(std::all_of(all.time.begin(), all.time.end(), [](int x) { return x == 0; }));
    CHECK(all.never_infected_value == 1);
    CHECK_THROWS_AS(sph::run_wtm(g, {1.5, 0.18, 3}), sph::Error);
}

TEST_CASE("property: threshold 0 infects within graph distance") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = sph::gen_rgg(60, 0.2, seed);
        auto t = sph::run_wtm(g, {0.05, 0.0, seed});
        auto adj = g.adjacency();
        std::vector<int> dist(g.node_count(), -1);
        std::queue<NodeId> q;
        for (NodeId v = 0; v < g.node_count(); ++v)
            if (t.time[v] == 0) {
                dist[v] = 0;
                q.push(v);
            }
        while (!q.empty()) {
            NodeId v = q.front();
            q.pop();
            for (NodeId w : adj[v])
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
        }
        for (NodeId v = 0; v < g.node_count(); ++v)
            if (dist[v] >= 0) {
                CHECK(t.infected(v));
                CHECK(t.time[v] <= dist[v]);
            }
    }
}

TEST_CASE("property: matches brute-force re-simulation and subgraphs are nested") {
    std::mt19937_64 rng(17);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        SpatialGraph g = seed % 2 ? sph::gen_rgg(80, 0.15, seed) : sph::gen_ws(60, 2, 0.2, seed);
        std::vector<NodeId> seeds;
        for (NodeId v = 0; v < g.node_count(); ++v)
            if (rng() % 12 == 0) seeds.push_back(v);
        const double threshold = 0.1037 + 0.0131 * static_cast<double>(seed % 7);  // no exact k/deg ties
        auto t = sph::run_wtm_from(g, seeds, threshold);
        CHECK(t.time == resimulate(g, seeds, threshold));
        std::size_t prev_nodes = 0, prev_edges = 0;
        for (int step = 0; step <= t.never_infected_value; ++step) {
            auto net = sph::infection_subgraph(g, t, step);
            CHECK(net.graph.node_count() >= prev_nodes);
            CHECK(net.graph.edge_count() >= prev_edges);
            for (NodeId v : net.nodes) CHECK(t.time[v] <= step);
            prev_nodes = net.graph.node_count();
            prev_edges = net.graph.edge_count();
        }
    }
}

TEST_CASE("times file round trip") {
    auto g = sph::gen_lattice(5);
    auto t = sph::run_wtm(g, {0.1, 0.3, 8});
    std::stringstream ss;
    sph::write_times(ss, t);
    auto back = sph::read_times(ss);
    CHECK(back.time == t.time);
    CHECK(back.never_infected_value == t.never_infected_value);

    std::istringstream no_trailer("node,time\n0,0\n1,2\n");
    auto nt = sph::read_times(no_trailer);
    CHECK(nt.never_infected_value == 3);
    std::istringstream gap("node,time\n0,0\n2,1\n");
    CHECK_THROWS_AS(sph::read_times(gap), sph::Error);
}
