#include "sph/adjacency.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace sph {

FilteredComplex node_value_filtration(const SpatialGraph& graph, std::span<const double> values) {
    const std::size_t n = graph.node_count();
    if (values.size() != n)
        throw Error(ErrorKind::MissingValue, "expected " + std::to_string(n) + " node values, got " +
                                                 std::to_string(values.size()));
    FilteredComplex complex;
    for (VertexId v = 0; v < n; ++v) {
        if (!std::isfinite(values[v]))
            throw Error(ErrorKind::MissingValue, "node " + std::to_string(v) + " has no finite value");
        complex.add_simplex(Simplex{v}, values[v]);
    }
    for (const Edge& e : graph.edges())
        complex.add_simplex(Simplex{e.u, e.v}, std::max(values[e.u], values[e.v]));

    // Each triangle u < v < w is found once from its smallest vertex.
    const auto adj = graph.adjacency();
    for (VertexId u = 0; u < n; ++u) {
        const auto& nu = adj[u];
        for (auto i = std::upper_bound(nu.begin(), nu.end(), u); i != nu.end(); ++i) {
            VertexId v = *i;
            const auto& nv = adj[v];
            for (auto j = i + 1; j != nu.end(); ++j) {
                VertexId w = *j;
                if (!std::binary_search(nv.begin(), nv.end(), w)) continue;
                complex.add_simplex(Simplex{u, v, w}, std::max({values[u], values[v], values[w]}));
            }
        }
    }
    return complex;
}

FilteredComplex node_value_filtration(const SpatialGraph& graph) {
    if (!graph.node_values()) throw Error(ErrorKind::MissingValue, "graph has no node values");
    return node_value_filtration(graph, *graph.node_values());
}

std::vector<double> min_incident_edge_values(const SpatialGraph& graph) {
    if (!graph.edge_values()) throw Error(ErrorKind::MissingValue, "graph has no edge values");
    const auto& g = *graph.edge_values();
    std::vector<double> f(graph.node_count(), std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < graph.edge_count(); ++i) {
        const Edge& e = graph.edges()[i];
        f[e.u] = std::min(f[e.u], g[i]);
        f[e.v] = std::min(f[e.v], g[i]);
    }
    for (std::size_t v = 0; v < f.size(); ++v)
        if (std::isinf(f[v]))
            throw Error(ErrorKind::IsolatedNode, "node " + std::to_string(v) + " has no incident edge");
    return f;
}

FilteredComplex edge_value_filtration(const SpatialGraph& graph) {
    const auto f = min_incident_edge_values(graph);
    return node_value_filtration(graph, f);
}

FilteredComplex wtm_filtration(const SpatialGraph& graph, const InfectionTimes& times) {
    if (times.time.size() != graph.node_count())
        throw Error(ErrorKind::MissingValue, "infection times do not cover every node");
    std::vector<double> f(times.time.begin(), times.time.end());
    return node_value_filtration(graph, f);
}

}  // namespace sph
