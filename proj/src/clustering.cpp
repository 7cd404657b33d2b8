#include "sph/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace sph {

Dendrogram average_linkage(const DistanceMatrix& m) {
    const std::size_t n = m.size();
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "clustering needs at least two items");
    if (m.entries.size() != n) throw Error(ErrorKind::InvalidArgument, "matrix is not square");

    struct Cluster {
        std::size_t id;
        std::size_t min_leaf;
        std::size_t size;
    };
    std::vector<Cluster> active;
    for (std::size_t i = 0; i < n; ++i) active.push_back({i, i, 1});
    // Sum of leaf distances between active clusters, indexed by position in `active`.
    std::vector<std::vector<double>> sums = m.entries;

    Dendrogram out;
    out.n_leaves = n;
    out.labels = m.labels;
    double previous = 0.0;
    while (active.size() > 1) {
        std::size_t best_i = 0;
        std::size_t best_j = 1;
        double best = std::numeric_limits<double>::infinity();
        std::pair<std::size_t, std::size_t> best_key{n, n};
        for (std::size_t i = 0; i < active.size(); ++i)
            for (std::size_t j = i + 1; j < active.size(); ++j) {
                double avg = sums[i][j] / static_cast<double>(active[i].size * active[j].size);
                std::pair<std::size_t, std::size_t> key{std::min(active[i].min_leaf, active[j].min_leaf),
                                                        std::max(active[i].min_leaf, active[j].min_leaf)};
                if (avg < best || (avg == best && key < best_key)) {
                    best = avg;
                    best_key = key;
                    best_i = i;
                    best_j = j;
                }
            }

        double height = best;
        if (height < previous) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "merge %zu: height %.9g below previous %.9g, clamped",
                          out.merges.size(), height, previous);
            out.warnings.emplace_back(buf);
            height = previous;
        }
        previous = height;

        const Cluster& ci = active[best_i];
        const Cluster& cj = active[best_j];
        Cluster merged{n + out.merges.size(), std::min(ci.min_leaf, cj.min_leaf), ci.size + cj.size};
        out.merges.push_back({std::min(ci.id, cj.id), std::max(ci.id, cj.id), height, merged.size});

        // Fold j into i, then drop j.
        for (std::size_t k = 0; k < active.size(); ++k) {
            if (k == best_i || k == best_j) continue;
            sums[best_i][k] += sums[best_j][k];
            sums[k][best_i] = sums[best_i][k];
        }
        active[best_i] = merged;
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(best_j));
        sums.erase(sums.begin() + static_cast<std::ptrdiff_t>(best_j));
        for (auto& row : sums) row.erase(row.begin() + static_cast<std::ptrdiff_t>(best_j));
    }
    return out;
}

std::vector<int> cut(const Dendrogram& dendrogram, std::size_t k) {
    const std::size_t n = dendrogram.n_leaves;
    if (k < 1 || k > n) throw Error(ErrorKind::InvalidK, "k must be in [1, " + std::to_string(n) + "]");
    if (dendrogram.merges.size() + 1 != n) throw Error(ErrorKind::InvalidArgument, "dendrogram is incomplete");

    // Union-find over cluster ids, applying only the first n - k merges.
    std::vector<std::size_t> parent(2 * n - 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n - k; ++i) {
        const Merge& mg = dendrogram.merges[i];
        std::size_t created = n + i;
        parent[find(mg.a)] = created;
        parent[find(mg.b)] = created;
    }
    std::vector<int> label(n, -1);
    std::vector<std::ptrdiff_t> root_label(2 * n - 1, -1);
    int next = 0;
    for (std::size_t leaf = 0; leaf < n; ++leaf) {
        std::size_t r = find(leaf);
        if (root_label[r] < 0) root_label[r] = next++;
        label[leaf] = static_cast<int>(root_label[r]);
    }
    return label;
}

void write_dendrogram(std::ostream& out, const Dendrogram& d) {
    std::ostringstream s;
    s << "leaves " << d.n_leaves << '\n';
    for (std::size_t i = 0; i < d.n_leaves; ++i)
        s << i << ' ' << (i < d.labels.size() ? d.labels[i] : std::to_string(i)) << '\n';
    s << "merges " << d.merges.size() << '\n';
    char buf[64];
    for (const Merge& mg : d.merges) {
        std::snprintf(buf, sizeof buf, "%.17g", mg.height);
        s << mg.a << ' ' << mg.b << ' ' << buf << ' ' << mg.size << '\n';
    }
    out << s.str();
}

Dendrogram read_dendrogram(std::istream& in) {
    Dendrogram d;
    std::string line;
    std::string word;
    auto next_line = [&]() {
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty() && line[0] != '#') return true;
        }
        return false;
    };
    if (!next_line()) throw Error(ErrorKind::Parse, "empty dendrogram file");
    {
        std::istringstream ls(line);
        if (!(ls >> word >> d.n_leaves) || word != "leaves" || d.n_leaves < 1)
            throw Error(ErrorKind::Parse, "expected 'leaves <n>'");
    }
    d.labels.resize(d.n_leaves);
    for (std::size_t i = 0; i < d.n_leaves; ++i) {
        std::size_t idx = 0;
        if (!next_line()) throw Error(ErrorKind::Parse, "missing leaf lines");
        std::istringstream ls(line);
        if (!(ls >> idx) || idx != i) throw Error(ErrorKind::Parse, "leaf lines must be numbered 0..n-1 in order");
        std::string label;
        std::getline(ls >> std::ws, label);
        d.labels[i] = label;
    }
    std::size_t count = 0;
    if (!next_line()) throw Error(ErrorKind::Parse, "missing 'merges' section");
    {
        std::istringstream ls(line);
        if (!(ls >> word >> count) || word != "merges" || count + 1 != d.n_leaves)
            throw Error(ErrorKind::Parse, "expected 'merges <n-1>'");
    }
    for (std::size_t i = 0; i < count; ++i) {
        Merge mg;
        if (!next_line()) throw Error(ErrorKind::Parse, "missing merge lines");
        std::istringstream ls(line);
        if (!(ls >> mg.a >> mg.b >> mg.height >> mg.size) || mg.a >= d.n_leaves + i || mg.b >= d.n_leaves + i ||
            mg.a == mg.b)
            throw Error(ErrorKind::Parse, "bad merge line: " + line);
        d.merges.push_back(mg);
    }
    return d;
}

void write_assignment(std::ostream& out, const std::vector<std::string>& labels, const std::vector<int>& clusters) {
    if (labels.size() != clusters.size()) throw Error(ErrorKind::InvalidArgument, "one cluster per label required");
    std::ostringstream s;
    s << "label,cluster\n";
    for (std::size_t i = 0; i < labels.size(); ++i) s << labels[i] << ',' << clusters[i] << '\n';
    out << s.str();
}

}  // namespace sph
