#pragma once

#include <span>
#include <vector>

#include "sph/complex.hpp"
#include "sph/graph.hpp"
#include "sph/wtm.hpp"

namespace sph {

/// Adjacency construction. Vertex v enters at f(v), an edge at the max of its
/// endpoints, and every 3-cycle of the graph is filled by a triangle at the
/// max of its edges. No higher cliques.
FilteredComplex node_value_filtration(const SpatialGraph& graph, std::span<const double> values);
/// Uses graph.node_values(); throws MissingValue when absent.
FilteredComplex node_value_filtration(const SpatialGraph& graph);

/// min over incident edges of the edge values, per node. Throws
/// MissingValue or IsolatedNode.
std::vector<double> min_incident_edge_values(const SpatialGraph& graph);

/// node_value_filtration driven by min_incident_edge_values.
FilteredComplex edge_value_filtration(const SpatialGraph& graph);

/// node_value_filtration with f = infection time; step t is the infection
/// network at time t.
FilteredComplex wtm_filtration(const SpatialGraph& graph, const InfectionTimes& times);

}  // namespace sph
