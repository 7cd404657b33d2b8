#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sph/error.hpp"

namespace sph {

using VertexId = std::uint32_t;

/// A 0-, 1- or 2-simplex given by its strictly increasing vertex ids.
class Simplex {
public:
    Simplex() = default;
    Simplex(std::initializer_list<VertexId> vertices);
    explicit Simplex(std::span<const VertexId> vertices);

    /// Sorts the ids first; throws InvalidSimplex on repeats or bad length.
    static Simplex from_unsorted(std::span<const VertexId> vertices);

    int dimension() const noexcept { return static_cast<int>(size_) - 1; }
    std::size_t size() const noexcept { return size_; }
    VertexId operator[](std::size_t i) const noexcept { return v_[i]; }
    std::span<const VertexId> vertices() const noexcept { return {v_.data(), size_}; }

    /// Codimension-one faces, empty for a vertex.
    std::vector<Simplex> facets() const;

    std::string to_string() const;

    friend bool operator==(const Simplex& a, const Simplex& b) noexcept {
        return a.size_ == b.size_ && a.v_ == b.v_;
    }
    /// Lexicographic on the vertex list.
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) noexcept;

private:
    std::array<VertexId, 3> v_{0, 0, 0};
    std::uint8_t size_ = 0;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

struct FilteredSimplex {
    Simplex simplex;
    double value = 0.0;
    friend bool operator==(const FilteredSimplex&, const FilteredSimplex&) = default;
};

struct Violation {
    ErrorKind kind;  // MissingFace or MonotonicityViolation
    Simplex simplex;
    Simplex face;
    std::string message;
};

/// Simplices of dimension <= 2 with filtration values. Closure and face
/// monotonicity hold for anything built through add_simplex; complexes built
/// with add_unchecked are checked by validate().
class FilteredComplex {
public:
    FilteredComplex() = default;

    void add_simplex(const Simplex& s, double value);
    /// Inserts without face checks; duplicates are still rejected.
    void add_unchecked(const Simplex& s, double value);

    bool contains(const Simplex& s) const { return index_.count(s) != 0; }
    /// Index into simplices(), or -1.
    std::ptrdiff_t find(const Simplex& s) const;
    double value_of(const Simplex& s) const;

    const std::vector<FilteredSimplex>& simplices() const noexcept { return simplices_; }
    std::size_t size() const noexcept { return simplices_.size(); }
    bool empty() const noexcept { return simplices_.empty(); }
    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t count(int dimension) const;
    double max_value() const;

    std::vector<Violation> validate() const;

    /// Sorted by (value, dimension, vertex list); throws InvalidComplex when
    /// validate() reports anything.
    std::vector<FilteredSimplex> canonical_order() const;

private:
    std::vector<FilteredSimplex> simplices_;
    std::unordered_map<Simplex, std::size_t, SimplexHash> index_;
    std::size_t vertex_count_ = 0;
};

/// Text format, one simplex per line: `dim v0 [v1 [v2]] value`. Lines starting
/// with '#' and blank lines are skipped.
void write_complex(std::ostream& out, const FilteredComplex& complex);
FilteredComplex read_complex(std::istream& in);

}  // namespace sph
