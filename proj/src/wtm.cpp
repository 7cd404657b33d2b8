#include "sph/wtm.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "sph/error.hpp"

namespace sph {

namespace {

// Thresholds are compared as integers scaled by 1e9 so that, e.g., 0.18 * 50
// neighbours is exactly 9 rather than 9.000000000000002.
constexpr long long kThresholdScale = 1'000'000'000LL;

long long scaled_threshold(double threshold) {
    if (!(threshold >= 0.0 && threshold <= 1.0))
        throw Error(ErrorKind::InvalidArgument, "threshold must be in [0, 1]");
    return std::llround(threshold * static_cast<double>(kThresholdScale));
}

}  // namespace

std::size_t InfectionTimes::seed_count() const {
    return static_cast<std::size_t>(std::count(time.begin(), time.end(), 0));
}

InfectionTimes run_wtm_from(const SpatialGraph& graph, const std::vector<NodeId>& seeds, double threshold) {
    const std::size_t n = graph.node_count();
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "WTM needs a nonempty graph");
    const long long thr = scaled_threshold(threshold);
    const auto adj = graph.adjacency();

    constexpr int kUninfected = -1;
    std::vector<int> time(n, kUninfected);
    for (NodeId s : seeds) {
        if (s >= n) throw Error(ErrorKind::InvalidArgument, "seed id out of range");
        time[s] = 0;
    }

    std::vector<int> infected_nbrs(n, 0);
    std::vector<NodeId> frontier(seeds.begin(), seeds.end());
    std::vector<NodeId> adopters;
    int last = 0;
    for (int t = 1;; ++t) {
        // Counts reflect the state at the end of step t - 1.
        for (NodeId u : frontier)
            for (NodeId w : adj[u]) ++infected_nbrs[w];
        adopters.clear();
        for (NodeId v = 0; v < n; ++v) {
            if (time[v] != kUninfected || adj[v].empty()) continue;
            long long lhs = static_cast<long long>(infected_nbrs[v]) * kThresholdScale;
            long long rhs = thr * static_cast<long long>(adj[v].size());
            if (lhs >= rhs) adopters.push_back(v);
        }
        if (adopters.empty()) break;
        for (NodeId v : adopters) time[v] = t;
        last = t;
        frontier.swap(adopters);
    }

    InfectionTimes out;
    out.never_infected_value = last + 1;
    out.time.resize(n);
    for (std::size_t v = 0; v < n; ++v) out.time[v] = time[v] == kUninfected ? out.never_infected_value : time[v];
    return out;
}

InfectionTimes run_wtm(const SpatialGraph& graph, const WtmConfig& config) {
    const std::size_t n = graph.node_count();
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "WTM needs a nonempty graph");
    if (!(config.rho0 > 0.0 && config.rho0 <= 1.0))
        throw Error(ErrorKind::InvalidArgument, "rho0 must be in (0, 1]");
    auto seeds_wanted = static_cast<std::size_t>(std::lround(config.rho0 * static_cast<double>(n)));
    seeds_wanted = std::min(seeds_wanted, n);

    std::mt19937_64 rng(config.seed);
    std::vector<NodeId> ids(n);
    std::iota(ids.begin(), ids.end(), NodeId{0});
    for (std::size_t i = 0; i < seeds_wanted; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n - 1);
        std::swap(ids[i], ids[pick(rng)]);
    }
    ids.resize(seeds_wanted);
    std::sort(ids.begin(), ids.end());
    return run_wtm_from(graph, ids, config.threshold);
}

InfectionNetwork infection_subgraph(const SpatialGraph& graph, const InfectionTimes& times, int t) {
    if (t < 0) throw Error(ErrorKind::InvalidArgument, "time must be >= 0");
    if (times.time.size() != graph.node_count())
        throw Error(ErrorKind::InvalidArgument, "infection times do not cover the graph");
    InfectionNetwork net;
    std::vector<std::ptrdiff_t> remap(graph.node_count(), -1);
    for (NodeId v = 0; v < graph.node_count(); ++v) {
        if (times.time[v] > t) continue;
        remap[v] = static_cast<std::ptrdiff_t>(net.nodes.size());
        net.nodes.push_back(v);
        net.graph.add_node(graph.positions()[v]);
    }
    for (const Edge& e : graph.edges())
        if (remap[e.u] >= 0 && remap[e.v] >= 0)
            net.graph.add_edge(static_cast<NodeId>(remap[e.u]), static_cast<NodeId>(remap[e.v]));
    return net;
}

void write_times(std::ostream& out, const InfectionTimes& times) {
    std::ostringstream s;
    s << "node,time\n";
    for (std::size_t v = 0; v < times.time.size(); ++v) s << v << ',' << times.time[v] << '\n';
    s << "# never_infected_value=" << times.never_infected_value << '\n';
    out << s.str();
}

InfectionTimes read_times(std::istream& in) {
    InfectionTimes times;
    std::vector<std::pair<std::size_t, int>> rows;
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    int trailer = -1;
    const std::string key = "# never_infected_value=";
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(key, 0) == 0) {
            try {
                trailer = std::stoi(line.substr(key.size()));
            } catch (const std::logic_error&) {
                throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad never_infected_value");
            }
            continue;
        }
        if (line.empty() || line[0] == '#') continue;
        if (!header) {
            if (line != "node,time") throw Error(ErrorKind::Parse, "expected header 'node,time'");
            header = true;
            continue;
        }
        auto comma = line.find(',');
        try {
            if (comma == std::string::npos) throw std::invalid_argument(line);
            long long node = std::stoll(line.substr(0, comma));
            int t = std::stoi(line.substr(comma + 1));
            if (node < 0 || t < 0) throw std::invalid_argument(line);
            rows.emplace_back(static_cast<std::size_t>(node), t);
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected node,time");
        }
    }
    if (!header) throw Error(ErrorKind::Parse, "missing 'node,time' header");
    times.time.assign(rows.size(), -1);
    int max_t = 0;
    for (auto [node, t] : rows) {
        if (node >= rows.size() || times.time[node] != -1)
            throw Error(ErrorKind::Parse, "node ids must be 0..n-1, once each");
        times.time[node] = t;
        max_t = std::max(max_t, t);
    }
    times.never_infected_value = trailer >= 0 ? trailer : max_t + 1;
    if (max_t > times.never_infected_value)
        throw Error(ErrorKind::Parse, "time exceeds never_infected_value");
    return times;
}

}  // namespace sph
