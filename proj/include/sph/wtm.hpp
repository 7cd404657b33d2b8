#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sph/graph.hpp"

namespace sph {

struct WtmConfig {
    double rho0 = 0.05;       ///< initially infected fraction
    double threshold = 0.18;  ///< infected-neighbour fraction needed to adopt
    std::uint64_t seed = 0;
};

/// Infection step of every node. Nodes that never adopt carry
/// never_infected_value = (last infection step) + 1.
struct InfectionTimes {
    std::vector<int> time;
    int never_infected_value = 1;

    bool infected(NodeId v) const { return time[v] < never_infected_value; }
    std::size_t seed_count() const;
};

/// Synchronous Watts threshold model. round(rho0 * n) seeds are drawn
/// uniformly without replacement; a node adopts at step t when
/// infected_neighbours >= threshold * degree held at step t - 1.
InfectionTimes run_wtm(const SpatialGraph& graph, const WtmConfig& config);

/// Same dynamics from an explicit seed set.
InfectionTimes run_wtm_from(const SpatialGraph& graph, const std::vector<NodeId>& seeds, double threshold);

/// Induced subgraph on nodes with time <= t, renumbered densely; `nodes[i]`
/// is the original id of subgraph node i.
struct InfectionNetwork {
    SpatialGraph graph;
    std::vector<NodeId> nodes;
};
InfectionNetwork infection_subgraph(const SpatialGraph& graph, const InfectionTimes& times, int t);

/// `node,time` table followed by a `# never_infected_value=<k>` trailer.
/// Without the trailer, never_infected_value is taken as max time + 1.
void write_times(std::ostream& out, const InfectionTimes& times);
InfectionTimes read_times(std::istream& in);

}  // namespace sph
