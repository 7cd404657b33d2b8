#include "sph/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

namespace sph {

namespace {

// Union-find whose representative is always the smallest (oldest) index.
class ElderUnionFind {
public:
    explicit ElderUnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Attaches the younger root below the older one.
    void link(std::size_t older, std::size_t younger) { parent_[younger] = older; }

private:
    std::vector<std::size_t> parent_;
};

using Column = std::vector<std::size_t>;

// Z/2 addition of sorted columns.
void add_into(Column& target, const Column& source, Column& scratch) {
    scratch.clear();
    std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                  std::back_inserter(scratch));
    target.swap(scratch);
}

void emit(PersistenceDiagram& out, int dim, double birth, double death) {
    if (birth == death) return;
    out.features.push_back({dim, birth, death});
}

}  // namespace

std::vector<PersistenceFeature> PersistenceDiagram::in_dimension(int dimension) const {
    std::vector<PersistenceFeature> out;
    for (const auto& f : features)
        if (f.dimension == dimension) out.push_back(f);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.birth != b.birth ? a.birth < b.birth : a.death < b.death;
    });
    return out;
}

void PersistenceDiagram::normalize() {
    std::sort(features.begin(), features.end(), [](const auto& a, const auto& b) {
        if (a.dimension != b.dimension) return a.dimension < b.dimension;
        if (a.birth != b.birth) return a.birth < b.birth;
        return a.death < b.death;
    });
}

PersistenceDiagram compute_persistence(const FilteredComplex& complex) {
    const std::vector<FilteredSimplex> order = complex.canonical_order();
    const std::size_t n = order.size();

    PersistenceDiagram diagram;
    diagram.max_filtration = complex.max_value();

    // position of each simplex in the filtration order
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i)
        position[static_cast<std::size_t>(complex.find(order[i].simplex))] = i;
    auto pos_of = [&](const Simplex& s) { return position[static_cast<std::size_t>(complex.find(s))]; };

    ElderUnionFind components(n);
    std::vector<bool> paired(n, false);
    std::vector<bool> cycle_creator(n, false);

    // Edges: H0 deaths and H1 births.
    for (std::size_t j = 0; j < n; ++j) {
        const Simplex& s = order[j].simplex;
        if (s.dimension() != 1) continue;
        std::size_t ru = components.find(pos_of(Simplex{s[0]}));
        std::size_t rv = components.find(pos_of(Simplex{s[1]}));
        if (ru == rv) {
            cycle_creator[j] = true;
            continue;
        }
        std::size_t older = std::min(ru, rv);
        std::size_t younger = std::max(ru, rv);
        components.link(older, younger);
        paired[younger] = true;
        paired[j] = true;
        emit(diagram, 0, order[younger].value, order[j].value);
    }

    // Triangles: H1 deaths.
    std::vector<std::ptrdiff_t> pivot_owner(n, -1);
    std::vector<Column> reduced(n);
    Column column;
    Column scratch;
    for (std::size_t j = 0; j < n; ++j) {
        const Simplex& s = order[j].simplex;
        if (s.dimension() != 2) continue;
        column.clear();
        for (const Simplex& f : s.facets()) column.push_back(pos_of(f));
        std::sort(column.begin(), column.end());
        while (!column.empty() && pivot_owner[column.back()] >= 0)
            add_into(column, reduced[static_cast<std::size_t>(pivot_owner[column.back()])], scratch);
        if (column.empty()) continue;  // creates an H2 class; not reported
        std::size_t low = column.back();
        pivot_owner[low] = static_cast<std::ptrdiff_t>(j);
        paired[low] = true;
        paired[j] = true;
        emit(diagram, 1, order[low].value, order[j].value);
        reduced[j] = column;
    }

    for (std::size_t j = 0; j < n; ++j) {
        if (paired[j]) continue;
        int dim = order[j].simplex.dimension();
        if (dim == 0 || (dim == 1 && cycle_creator[j]))
            diagram.features.push_back({dim, order[j].value, kInfinity});
    }
    diagram.normalize();
    return diagram;
}

BettiNumbers betti_numbers(const PersistenceDiagram& diagram, double t) {
    BettiNumbers b;
    for (const auto& f : diagram.features) {
        if (!(f.birth <= t && t < f.death)) continue;
        if (f.dimension == 0) ++b.b0;
        else if (f.dimension == 1) ++b.b1;
    }
    return b;
}

std::size_t feature_count(const PersistenceDiagram& diagram, int dimension) {
    return static_cast<std::size_t>(std::count_if(diagram.features.begin(), diagram.features.end(),
        [dimension](const PersistenceFeature& f) { return f.dimension == dimension; }));
}

std::size_t essential_count(const PersistenceDiagram& diagram, int dimension) {
    return static_cast<std::size_t>(std::count_if(diagram.features.begin(), diagram.features.end(),
        [dimension](const PersistenceFeature& f) { return f.dimension == dimension && f.essential(); }));
}

void write_diagram(std::ostream& out, const PersistenceDiagram& diagram) {
    std::ostringstream s;
    s.precision(17);
    s << "dim,birth,death\n";
    for (const auto& f : diagram.features) {
        s << f.dimension << ',' << f.birth << ',';
        if (f.essential()) s << "inf";
        else s << f.death;
        s << '\n';
    }
    out << s.str();
}

PersistenceDiagram read_diagram(std::istream& in) {
    PersistenceDiagram diagram;
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!header) {
            if (line != "dim,birth,death")
                throw Error(ErrorKind::Parse, "expected header 'dim,birth,death'");
            header = true;
            continue;
        }
        std::istringstream ls(line);
        std::string dim_s, birth_s, death_s;
        if (!std::getline(ls, dim_s, ',') || !std::getline(ls, birth_s, ',') || !std::getline(ls, death_s))
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected dim,birth,death");
        PersistenceFeature f;
        try {
            std::size_t used = 0;
            f.dimension = std::stoi(dim_s, &used);
            if (used != dim_s.size()) throw std::invalid_argument(dim_s);
            f.birth = std::stod(birth_s, &used);
            if (used != birth_s.size()) throw std::invalid_argument(birth_s);
            if (death_s == "inf") {
                f.death = kInfinity;
            } else {
                f.death = std::stod(death_s, &used);
                if (used != death_s.size()) throw std::invalid_argument(death_s);
            }
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": malformed number");
        }
        if (f.dimension < 0 || f.dimension > 1 || !std::isfinite(f.birth) || f.death < f.birth)
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": invalid feature");
        diagram.max_filtration = std::max(diagram.max_filtration, f.birth);
        if (!f.essential()) diagram.max_filtration = std::max(diagram.max_filtration, f.death);
        diagram.features.push_back(f);
    }
    if (!header) throw Error(ErrorKind::Parse, "empty diagram file (missing header)");
    return diagram;
}

}  // namespace sph
