#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace sph {

using NodeId = std::uint32_t;

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// Undirected edge with u < v.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Nodes are numbered 0..n-1. Edges are kept sorted and unique; optional
/// scalar data lives in vectors parallel to nodes() and edges().
class SpatialGraph {
public:
    SpatialGraph() = default;
    explicit SpatialGraph(std::vector<Point2> positions);

    NodeId add_node(Point2 p);
    /// Throws InvalidArgument on self-loops, unknown endpoints or duplicates.
    void add_edge(NodeId a, NodeId b);
    void add_edge(NodeId a, NodeId b, double value);
    bool has_edge(NodeId a, NodeId b) const;

    std::size_t node_count() const noexcept { return positions_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Point2>& positions() const noexcept { return positions_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    /// Sorted neighbour lists.
    std::vector<std::vector<NodeId>> adjacency() const;

    const std::optional<std::vector<double>>& node_values() const noexcept { return node_values_; }
    const std::optional<std::vector<double>>& edge_values() const noexcept { return edge_values_; }
    void set_node_values(std::vector<double> values);
    /// Values indexed like edges().
    void set_edge_values(std::vector<double> values);
    void clear_node_values() { node_values_.reset(); }

private:
    std::size_t edge_index(Edge e) const;

    std::vector<Point2> positions_;
    std::vector<Edge> edges_;
    std::optional<std::vector<double>> node_values_;
    std::optional<std::vector<double>> edge_values_;
};

/// n uniform points on the unit square, edges between points at distance <= radius.
SpatialGraph gen_rgg(std::size_t n, double radius, std::uint64_t seed);

/// side x side grid on the unit square with 4-neighbour edges.
SpatialGraph gen_lattice(std::size_t side);

/// Ring lattice with k_each_side neighbours on each side, each edge rewired
/// with probability p (remove, then reconnect its lower-index endpoint to a
/// uniformly chosen non-neighbour). Nodes sit on the unit circle.
SpatialGraph gen_ws(std::size_t n, std::size_t k_each_side, double p, std::uint64_t seed);

/// Text format:
///   nodes <n>
///   <id> <x> <y> [value]      (n lines)
///   edges <m>
///   <u> <v> [value]           (m lines)
/// Values are all-or-none within a section.
void write_graph(std::ostream& out, const SpatialGraph& graph);
SpatialGraph read_graph(std::istream& in);

}  // namespace sph
