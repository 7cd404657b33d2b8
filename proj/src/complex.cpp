#include "sph/complex.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace sph {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MissingFace: return "MissingFace";
        case ErrorKind::MonotonicityViolation: return "MonotonicityViolation";
        case ErrorKind::Duplicate: return "Duplicate";
        case ErrorKind::InvalidSimplex: return "InvalidSimplex";
        case ErrorKind::InvalidComplex: return "InvalidComplex";
        case ErrorKind::MissingValue: return "MissingValue";
        case ErrorKind::IsolatedNode: return "IsolatedNode";
        case ErrorKind::EmptyForeground: return "EmptyForeground";
        case ErrorKind::CapTooSmall: return "CapTooSmall";
        case ErrorKind::InvalidK: return "InvalidK";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

Simplex::Simplex(std::initializer_list<VertexId> vertices)
    : Simplex(std::span<const VertexId>(vertices.begin(), vertices.size())) {}

Simplex::Simplex(std::span<const VertexId> vertices) {
    if (vertices.empty() || vertices.size() > 3)
        throw Error(ErrorKind::InvalidSimplex, "simplex must have 1 to 3 vertices");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i > 0 && vertices[i] <= vertices[i - 1])
            throw Error(ErrorKind::InvalidSimplex, "simplex vertex ids must be strictly increasing");
        v_[i] = vertices[i];
    }
    size_ = static_cast<std::uint8_t>(vertices.size());
}

Simplex Simplex::from_unsorted(std::span<const VertexId> vertices) {
    std::array<VertexId, 3> tmp{};
    if (vertices.empty() || vertices.size() > 3)
        throw Error(ErrorKind::InvalidSimplex, "simplex must have 1 to 3 vertices");
    std::copy(vertices.begin(), vertices.end(), tmp.begin());
    std::sort(tmp.begin(), tmp.begin() + vertices.size());
    return Simplex(std::span<const VertexId>(tmp.data(), vertices.size()));
}

std::vector<Simplex> Simplex::facets() const {
    std::vector<Simplex> out;
    if (size_ < 2) return out;
    for (std::size_t skip = 0; skip < size_; ++skip) {
        std::array<VertexId, 2> f{};
        std::size_t k = 0;
        for (std::size_t i = 0; i < size_; ++i)
            if (i != skip) f[k++] = v_[i];
        out.emplace_back(std::span<const VertexId>(f.data(), k));
    }
    return out;
}

std::string Simplex::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < size_; ++i) {
        if (i) s += ",";
        s += std::to_string(v_[i]);
    }
    return s + "}";
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) noexcept {
    return std::lexicographical_compare_three_way(a.v_.begin(), a.v_.begin() + a.size_,
                                                  b.v_.begin(), b.v_.begin() + b.size_);
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ s.size();
    for (VertexId v : s.vertices()) {
        h ^= v;
        h *= 0x100000001b3ULL;
        h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
}

void FilteredComplex::add_unchecked(const Simplex& s, double value) {
    if (s.size() == 0) throw Error(ErrorKind::InvalidSimplex, "empty simplex");
    if (!(value >= 0.0) || !std::isfinite(value))
        throw Error(ErrorKind::InvalidArgument,
                    "filtration value of " + s.to_string() + " must be finite and >= 0");
    auto [it, inserted] = index_.emplace(s, simplices_.size());
    if (!inserted) throw Error(ErrorKind::Duplicate, "simplex " + s.to_string() + " already present");
    simplices_.push_back({s, value});
    if (s.dimension() == 0) ++vertex_count_;
}

void FilteredComplex::add_simplex(const Simplex& s, double value) {
    if (contains(s)) throw Error(ErrorKind::Duplicate, "simplex " + s.to_string() + " already present");
    for (const Simplex& f : s.facets()) {
        auto i = find(f);
        if (i < 0)
            throw Error(ErrorKind::MissingFace,
                        "face " + f.to_string() + " of " + s.to_string() + " is missing");
        if (simplices_[static_cast<std::size_t>(i)].value > value)
            throw Error(ErrorKind::MonotonicityViolation,
                        "face " + f.to_string() + " enters after " + s.to_string());
    }
    add_unchecked(s, value);
}

std::ptrdiff_t FilteredComplex::find(const Simplex& s) const {
    auto it = index_.find(s);
    return it == index_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

double FilteredComplex::value_of(const Simplex& s) const {
    auto i = find(s);
    if (i < 0) throw Error(ErrorKind::MissingFace, "simplex " + s.to_string() + " not in complex");
    return simplices_[static_cast<std::size_t>(i)].value;
}

std::size_t FilteredComplex::count(int dimension) const {
    return static_cast<std::size_t>(std::count_if(simplices_.begin(), simplices_.end(),
        [dimension](const FilteredSimplex& fs) { return fs.simplex.dimension() == dimension; }));
}

double FilteredComplex::max_value() const {
    double m = 0.0;
    for (const auto& fs : simplices_) m = std::max(m, fs.value);
    return m;
}

std::vector<Violation> FilteredComplex::validate() const {
    std::vector<Violation> out;
    for (const auto& fs : simplices_) {
        for (const Simplex& f : fs.simplex.facets()) {
            auto i = find(f);
            if (i < 0) {
                out.push_back({ErrorKind::MissingFace, fs.simplex, f,
                               "face " + f.to_string() + " of " + fs.simplex.to_string() + " is missing"});
            } else if (simplices_[static_cast<std::size_t>(i)].value > fs.value) {
                out.push_back({ErrorKind::MonotonicityViolation, fs.simplex, f,
                               "face " + f.to_string() + " enters after " + fs.simplex.to_string()});
            }
        }
    }
    return out;
}

std::vector<FilteredSimplex> FilteredComplex::canonical_order() const {
    auto violations = validate();
    if (!violations.empty())
        throw Error(ErrorKind::InvalidComplex, "invalid complex: " + violations.front().message);
    std::vector<FilteredSimplex> order = simplices_;
    std::sort(order.begin(), order.end(), [](const FilteredSimplex& a, const FilteredSimplex& b) {
        if (a.value != b.value) return a.value < b.value;
        if (a.simplex.dimension() != b.simplex.dimension())
            return a.simplex.dimension() < b.simplex.dimension();
        return a.simplex < b.simplex;
    });
    return order;
}

void write_complex(std::ostream& out, const FilteredComplex& complex) {
    auto order = complex.validate().empty() ? complex.canonical_order() : complex.simplices();
    std::ostringstream line;
    line.precision(17);
    for (const auto& fs : order) {
        line.str("");
        line << fs.simplex.dimension();
        for (VertexId v : fs.simplex.vertices()) line << ' ' << v;
        line << ' ' << fs.value << '\n';
        out << line.str();
    }
}

FilteredComplex read_complex(std::istream& in) {
    FilteredComplex complex;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        int dim = -1;
        if (!(ls >> dim) || dim < 0 || dim > 2)
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad dimension");
        std::array<VertexId, 3> v{};
        for (int i = 0; i <= dim; ++i) {
            long long id = -1;
            if (!(ls >> id) || id < 0)
                throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": bad vertex id");
            v[static_cast<std::size_t>(i)] = static_cast<VertexId>(id);
        }
        double value = 0.0;
        if (!(ls >> value))
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": missing value");
        std::string rest;
        if (ls >> rest)
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": trailing input");
        complex.add_unchecked(Simplex::from_unsorted({v.data(), static_cast<std::size_t>(dim + 1)}), value);
    }
    return complex;
}

}  // namespace sph
