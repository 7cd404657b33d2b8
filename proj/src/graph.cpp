#include "sph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "sph/error.hpp"

namespace sph {

SpatialGraph::SpatialGraph(std::vector<Point2> positions) : positions_(std::move(positions)) {}

NodeId SpatialGraph::add_node(Point2 p) {
    positions_.push_back(p);
    if (node_values_) node_values_->push_back(0.0);
    return static_cast<NodeId>(positions_.size() - 1);
}

std::size_t SpatialGraph::edge_index(Edge e) const {
    return static_cast<std::size_t>(std::lower_bound(edges_.begin(), edges_.end(), e) - edges_.begin());
}

void SpatialGraph::add_edge(NodeId a, NodeId b) {
    if (a == b) throw Error(ErrorKind::InvalidArgument, "self-loop at node " + std::to_string(a));
    if (a >= node_count() || b >= node_count())
        throw Error(ErrorKind::InvalidArgument, "edge endpoint is not a node");
    Edge e{std::min(a, b), std::max(a, b)};
    std::size_t i = edge_index(e);
    if (i < edges_.size() && edges_[i] == e)
        throw Error(ErrorKind::InvalidArgument,
                    "duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    edges_.insert(edges_.begin() + static_cast<std::ptrdiff_t>(i), e);
    if (edge_values_) edge_values_->insert(edge_values_->begin() + static_cast<std::ptrdiff_t>(i), 0.0);
}

void SpatialGraph::add_edge(NodeId a, NodeId b, double value) {
    if (!edge_values_) edge_values_.emplace(edges_.size(), 0.0);
    add_edge(a, b);
    (*edge_values_)[edge_index(Edge{std::min(a, b), std::max(a, b)})] = value;
}

bool SpatialGraph::has_edge(NodeId a, NodeId b) const {
    Edge e{std::min(a, b), std::max(a, b)};
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<std::vector<NodeId>> SpatialGraph::adjacency() const {
    std::vector<std::vector<NodeId>> adj(node_count());
    for (const Edge& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return adj;
}

void SpatialGraph::set_node_values(std::vector<double> values) {
    if (values.size() != node_count())
        throw Error(ErrorKind::InvalidArgument, "node value count does not match node count");
    node_values_ = std::move(values);
}

void SpatialGraph::set_edge_values(std::vector<double> values) {
    if (values.size() != edge_count())
        throw Error(ErrorKind::InvalidArgument, "edge value count does not match edge count");
    edge_values_ = std::move(values);
}

SpatialGraph gen_rgg(std::size_t n, double radius, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "rgg needs n >= 1");
    if (!(radius > 0.0)) throw Error(ErrorKind::InvalidArgument, "rgg needs radius > 0");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Point2> pts(n);
    for (auto& p : pts) {
        p.x = unit(rng);
        p.y = unit(rng);
    }
    SpatialGraph g(pts);
    const double r2 = radius * radius;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) {
            double dx = pts[i].x - pts[j].x;
            double dy = pts[i].y - pts[j].y;
            if (dx * dx + dy * dy <= r2) g.add_edge(i, j);
        }
    return g;
}

SpatialGraph gen_lattice(std::size_t side) {
    if (side < 2) throw Error(ErrorKind::InvalidArgument, "lattice needs side >= 2");
    const double step = 1.0 / static_cast<double>(side - 1);
    std::vector<Point2> pts;
    pts.reserve(side * side);
    // node id = row * side + col
    for (std::size_t r = 0; r < side; ++r)
        for (std::size_t c = 0; c < side; ++c)
            pts.push_back({static_cast<double>(c) * step, static_cast<double>(r) * step});
    SpatialGraph g(std::move(pts));
    for (std::size_t r = 0; r < side; ++r)
        for (std::size_t c = 0; c < side; ++c) {
            auto id = static_cast<NodeId>(r * side + c);
            if (c + 1 < side) g.add_edge(id, id + 1);
            if (r + 1 < side) g.add_edge(id, static_cast<NodeId>(id + side));
        }
    return g;
}

SpatialGraph gen_ws(std::size_t n, std::size_t k_each_side, double p, std::uint64_t seed) {
    if (n <= 2 * k_each_side) throw Error(ErrorKind::InvalidArgument, "ws needs n > 2k");
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::InvalidArgument, "ws needs 0 <= p <= 1");
    std::vector<Point2> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
        double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
        pts[i] = {std::cos(theta), std::sin(theta)};
    }

    // Working adjacency as sorted sets; the graph is assembled at the end.
    std::vector<std::vector<NodeId>> adj(n);
    auto connected = [&](NodeId a, NodeId b) { return std::binary_search(adj[a].begin(), adj[a].end(), b); };
    auto link = [&](NodeId a, NodeId b) {
        adj[a].insert(std::lower_bound(adj[a].begin(), adj[a].end(), b), b);
        adj[b].insert(std::lower_bound(adj[b].begin(), adj[b].end(), a), a);
    };
    auto unlink = [&](NodeId a, NodeId b) {
        adj[a].erase(std::lower_bound(adj[a].begin(), adj[a].end(), b));
        adj[b].erase(std::lower_bound(adj[b].begin(), adj[b].end(), a));
    };

    for (std::size_t j = 1; j <= k_each_side; ++j)
        for (std::size_t i = 0; i < n; ++i) link(static_cast<NodeId>(i), static_cast<NodeId>((i + j) % n));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<NodeId> candidates;
    // Visit original ring edges in the same order as they were laid down.
    for (std::size_t j = 1; j <= k_each_side; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            if (!(coin(rng) < p)) continue;
            auto a = static_cast<NodeId>(i);
            auto b = static_cast<NodeId>((i + j) % n);
            NodeId source = std::min(a, b);
            NodeId other = std::max(a, b);
            candidates.clear();
            for (NodeId w = 0; w < n; ++w)
                if (w != source && !connected(source, w)) candidates.push_back(w);
            if (candidates.empty()) continue;  // source adjacent to everyone: keep the edge
            std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
            NodeId target = candidates[pick(rng)];
            unlink(source, other);
            link(source, target);
        }

    SpatialGraph g(std::move(pts));
    for (NodeId a = 0; a < n; ++a)
        for (NodeId b : adj[a])
            if (a < b) g.add_edge(a, b);
    return g;
}

void write_graph(std::ostream& out, const SpatialGraph& graph) {
    std::ostringstream s;
    s.precision(17);
    const auto& nv = graph.node_values();
    const auto& ev = graph.edge_values();
    s << "nodes " << graph.node_count() << '\n';
    for (std::size_t i = 0; i < graph.node_count(); ++i) {
        s << i << ' ' << graph.positions()[i].x << ' ' << graph.positions()[i].y;
        if (nv) s << ' ' << (*nv)[i];
        s << '\n';
    }
    s << "edges " << graph.edge_count() << '\n';
    for (std::size_t i = 0; i < graph.edge_count(); ++i) {
        s << graph.edges()[i].u << ' ' << graph.edges()[i].v;
        if (ev) s << ' ' << (*ev)[i];
        s << '\n';
    }
    out << s.str();
}

namespace {

// Reads the next non-comment, non-blank line split into tokens.
bool next_tokens(std::istream& in, std::vector<std::string>& tokens, std::size_t& lineno) {
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        tokens.clear();
        for (std::string t; ls >> t;) tokens.push_back(t);
        return true;
    }
    return false;
}

double parse_double(const std::string& s, std::size_t lineno) {
    try {
        std::size_t used = 0;
        double d = std::stod(s, &used);
        if (used == s.size() && std::isfinite(d)) return d;
    } catch (const std::logic_error&) {
    }
    throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad number '" + s + "'");
}

std::size_t parse_index(const std::string& s, std::size_t lineno) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used == s.size() && v >= 0) return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
    }
    throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad index '" + s + "'");
}

}  // namespace

SpatialGraph read_graph(std::istream& in) {
    std::vector<std::string> tok;
    std::size_t lineno = 0;
    if (!next_tokens(in, tok, lineno) || tok.size() != 2 || tok[0] != "nodes")
        throw Error(ErrorKind::Parse, "expected 'nodes <count>'");
    const std::size_t n = parse_index(tok[1], lineno);
    std::vector<Point2> pts(n);
    std::vector<bool> seen(n, false);
    std::vector<double> values(n, 0.0);
    int with_values = -1;
    for (std::size_t k = 0; k < n; ++k) {
        if (!next_tokens(in, tok, lineno) || (tok.size() != 3 && tok.size() != 4))
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected 'id x y [value]'");
        std::size_t id = parse_index(tok[0], lineno);
        if (id >= n || seen[id])
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": node ids must be 0..n-1, once each");
        seen[id] = true;
        pts[id] = {parse_double(tok[1], lineno), parse_double(tok[2], lineno)};
        int has = tok.size() == 4 ? 1 : 0;
        if (with_values >= 0 && has != with_values)
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": node values must be given for all nodes or none");
        with_values = has;
        if (has) values[id] = parse_double(tok[3], lineno);
    }
    SpatialGraph g(std::move(pts));
    if (with_values == 1) g.set_node_values(std::move(values));

    if (!next_tokens(in, tok, lineno) || tok.size() != 2 || tok[0] != "edges")
        throw Error(ErrorKind::Parse, "expected 'edges <count>'");
    const std::size_t m = parse_index(tok[1], lineno);
    std::vector<std::pair<Edge, double>> edges;
    with_values = -1;
    for (std::size_t k = 0; k < m; ++k) {
        if (!next_tokens(in, tok, lineno) || (tok.size() != 2 && tok.size() != 3))
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected 'u v [value]'");
        std::size_t a = parse_index(tok[0], lineno);
        std::size_t b = parse_index(tok[1], lineno);
        if (a >= n || b >= n || a == b)
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": invalid edge endpoints");
        int has = tok.size() == 3 ? 1 : 0;
        if (with_values >= 0 && has != with_values)
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": edge values must be given for all edges or none");
        with_values = has;
        Edge e{static_cast<NodeId>(std::min(a, b)), static_cast<NodeId>(std::max(a, b))};
        edges.push_back({e, has ? parse_double(tok[2], lineno) : 0.0});
    }
    if (next_tokens(in, tok, lineno))
        throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": trailing content");
    std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i].first == edges[i - 1].first)
            throw Error(ErrorKind::Parse, "duplicate edge " + std::to_string(edges[i].first.u) + "-" +
                                              std::to_string(edges[i].first.v));
    std::vector<double> ev;
    for (const auto& [e, val] : edges) {
        g.add_edge(e.u, e.v);  // appended in sorted order
        ev.push_back(val);
    }
    if (with_values == 1) g.set_edge_values(std::move(ev));
    return g;
}

}  // namespace sph
