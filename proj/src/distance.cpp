#include "sph/distance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>

namespace sph {

PersistenceDiagram cap_infinities(const PersistenceDiagram& diagram, double cap) {
    PersistenceDiagram out = diagram;
    for (auto& f : out.features) {
        const double finite_max = f.essential() ? f.birth : f.death;
        if (cap < finite_max)
            throw Error(ErrorKind::CapTooSmall, "cap " + std::to_string(cap) + " is below a finite diagram value " +
                                                    std::to_string(finite_max));
        if (f.essential()) f.death = cap;
    }
    out.max_filtration = std::max(out.max_filtration, cap);
    return out;
}

namespace {

double sup_distance(const DiagramPoint& p, const DiagramPoint& q) {
    return std::max(std::abs(p.birth - q.birth), std::abs(p.death - q.death));
}

double half_persistence(const DiagramPoint& p) { return (p.death - p.birth) / 2.0; }

// Hopcroft-Karp on a bipartite graph given by adjacency lists of the left side.
class BipartiteMatcher {
public:
    BipartiteMatcher(std::size_t left, std::size_t right) : adj_(left), match_l_(left), match_r_(right), dist_(left) {}

    void clear_edges() {
        for (auto& a : adj_) a.clear();
    }
    void add_edge(std::size_t l, std::size_t r) { adj_[l].push_back(r); }

    std::size_t max_matching() {
        std::fill(match_l_.begin(), match_l_.end(), kNone);
        std::fill(match_r_.begin(), match_r_.end(), kNone);
        std::size_t size = 0;
        while (bfs())
            for (std::size_t l = 0; l < adj_.size(); ++l)
                if (match_l_[l] == kNone && dfs(l)) ++size;
        return size;
    }

private:
    static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

    bool bfs() {
        std::queue<std::size_t> q;
        bool found = false;
        for (std::size_t l = 0; l < adj_.size(); ++l) {
            if (match_l_[l] == kNone) {
                dist_[l] = 0;
                q.push(l);
            } else {
                dist_[l] = kNone;
            }
        }
        while (!q.empty()) {
            std::size_t l = q.front();
            q.pop();
            for (std::size_t r : adj_[l]) {
                std::size_t next = match_r_[r];
                if (next == kNone) {
                    found = true;
                } else if (dist_[next] == kNone) {
                    dist_[next] = dist_[l] + 1;
                    q.push(next);
                }
            }
        }
        return found;
    }

    bool dfs(std::size_t l) {
        for (std::size_t r : adj_[l]) {
            std::size_t next = match_r_[r];
            if (next == kNone || (dist_[next] == dist_[l] + 1 && dfs(next))) {
                match_l_[l] = r;
                match_r_[r] = l;
                return true;
            }
        }
        dist_[l] = kNone;
        return false;
    }

    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::size_t> match_l_;
    std::vector<std::size_t> match_r_;
    std::vector<std::size_t> dist_;
};

std::vector<DiagramPoint> points_of(const PersistenceDiagram& d, int dimension) {
    std::vector<DiagramPoint> out;
    for (const auto& f : d.features) {
        if (f.dimension != dimension) continue;
        if (f.essential())
            throw Error(ErrorKind::InvalidArgument, "bottleneck needs capped diagrams (found an infinite death)");
        out.push_back({f.birth, f.death});
    }
    return out;
}

}  // namespace

double bottleneck(const std::vector<DiagramPoint>& a, const std::vector<DiagramPoint>& b) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    if (n + m == 0) return 0.0;

    std::vector<double> candidates{0.0};
    candidates.reserve(n * m + n + m + 1);
    for (const auto& p : a) candidates.push_back(half_persistence(p));
    for (const auto& q : b) candidates.push_back(half_persistence(q));
    for (const auto& p : a)
        for (const auto& q : b) candidates.push_back(sup_distance(p, q));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // Left: points of a, then diagonal images of b. Right: points of b, then
    // diagonal images of a.
    BipartiteMatcher matcher(n + m, n + m);
    auto feasible = [&](double delta) {
        matcher.clear_edges();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < m; ++j)
                if (sup_distance(a[i], b[j]) <= delta) matcher.add_edge(i, j);
            if (half_persistence(a[i]) <= delta) matcher.add_edge(i, m + i);
        }
        for (std::size_t j = 0; j < m; ++j) {
            if (half_persistence(b[j]) <= delta) matcher.add_edge(n + j, j);
            for (std::size_t i = 0; i < n; ++i) matcher.add_edge(n + j, m + i);
        }
        return matcher.max_matching() == n + m;
    };

    // Smallest feasible candidate; the largest always is.
    std::size_t lo = 0;
    std::size_t hi = candidates.size() - 1;
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (feasible(candidates[mid])) hi = mid;
        else lo = mid + 1;
    }
    return candidates[lo];
}

double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b, int dimension) {
    if (dimension != 0 && dimension != 1) throw Error(ErrorKind::InvalidArgument, "dimension must be 0 or 1");
    return bottleneck(points_of(a, dimension), points_of(b, dimension));
}

double shared_cap(const std::vector<PersistenceDiagram>& diagrams) {
    double top = 0.0;
    for (const auto& d : diagrams)
        for (const auto& f : d.features) top = std::max(top, f.essential() ? f.birth : f.death);
    return top + 1.0;
}

DistanceMatrix pairwise_matrix(const std::vector<PersistenceDiagram>& diagrams, const std::vector<std::string>& labels,
                               const std::vector<int>& dimensions) {
    if (diagrams.size() < 2) throw Error(ErrorKind::InvalidArgument, "need at least two diagrams");
    if (labels.size() != diagrams.size()) throw Error(ErrorKind::InvalidArgument, "one label per diagram required");
    if (dimensions.empty()) throw Error(ErrorKind::InvalidArgument, "no dimensions requested");
    const double cap = shared_cap(diagrams);
    std::vector<PersistenceDiagram> capped;
    capped.reserve(diagrams.size());
    for (const auto& d : diagrams) capped.push_back(cap_infinities(d, cap));

    const std::size_t n = diagrams.size();
    DistanceMatrix m{labels, std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0))};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double d = 0.0;
            for (int dim : dimensions) d = std::max(d, bottleneck(capped[i], capped[j], dim));
            m.entries[i][j] = m.entries[j][i] = d;
        }
    return m;
}

void write_matrix(std::ostream& out, const DistanceMatrix& m) {
    for (const auto& l : m.labels)
        if (l.empty() || l.find_first_of(",\n\r") != std::string::npos)
            throw Error(ErrorKind::InvalidArgument, "matrix labels must be nonempty and free of commas/newlines");
    std::ostringstream s;
    for (const auto& l : m.labels) s << ',' << l;
    s << '\n';
    char buf[64];
    for (std::size_t i = 0; i < m.size(); ++i) {
        s << m.labels[i];
        for (std::size_t j = 0; j < m.size(); ++j) {
            std::snprintf(buf, sizeof buf, "%.9g", m.entries[i][j]);
            s << ',' << buf;
        }
        s << '\n';
    }
    out << s.str();
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

}  // namespace

DistanceMatrix read_matrix(std::istream& in) {
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        rows.push_back(split_csv(line));
    }
    if (rows.empty()) throw Error(ErrorKind::Parse, "empty matrix file");
    DistanceMatrix m;
    m.labels.assign(rows[0].begin() + (rows[0].empty() ? 0 : 1), rows[0].end());
    const std::size_t n = m.labels.size();
    if (rows.size() != n + 1) throw Error(ErrorKind::Parse, "matrix must have one row per label");
    m.entries.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        const auto& r = rows[i + 1];
        if (r.size() != n + 1 || r[0] != m.labels[i])
            throw Error(ErrorKind::Parse, "row " + std::to_string(i + 1) + " does not match the label header");
        for (std::size_t j = 0; j < n; ++j) {
            try {
                std::size_t used = 0;
                m.entries[i][j] = std::stod(r[j + 1], &used);
                if (used != r[j + 1].size()) throw std::invalid_argument(r[j + 1]);
            } catch (const std::logic_error&) {
                throw Error(ErrorKind::Parse, "bad matrix entry '" + r[j + 1] + "'");
            }
            if (!std::isfinite(m.entries[i][j]) || m.entries[i][j] < 0.0)
                throw Error(ErrorKind::Parse, "matrix entries must be finite and nonnegative");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (m.entries[i][i] != 0.0) throw Error(ErrorKind::Parse, "matrix diagonal must be zero");
        for (std::size_t j = 0; j < i; ++j)
            if (m.entries[i][j] != m.entries[j][i]) throw Error(ErrorKind::Parse, "matrix must be symmetric");
    }
    return m;
}

}  // namespace sph
