#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <vector>

#include "sph/complex.hpp"

namespace sph {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct PersistenceFeature {
    int dimension = 0;
    double birth = 0.0;
    double death = kInfinity;

    bool essential() const noexcept { return death == kInfinity; }
    double persistence() const noexcept { return death - birth; }

    friend bool operator==(const PersistenceFeature&, const PersistenceFeature&) = default;
};

struct BettiNumbers {
    int b0 = 0;
    int b1 = 0;
    friend bool operator==(const BettiNumbers&, const BettiNumbers&) = default;
};

/// Multiset of (dimension, birth, death) points. Zero-persistence pairs are
/// never stored.
struct PersistenceDiagram {
    std::vector<PersistenceFeature> features;
    /// Largest finite filtration value of the source complex.
    double max_filtration = 0.0;

    /// Features of one dimension, sorted by (birth, death).
    std::vector<PersistenceFeature> in_dimension(int dimension) const;
    /// Sorts features by (dimension, birth, death) so equal multisets compare equal.
    void normalize();
};

/// Z/2 persistence of the sublevel-set filtration in canonical order.
/// H0 columns are reduced with a union-find that keeps the oldest vertex as
/// the root of each component; the lowest row of a reduced edge column is
/// exactly the younger of the two roots it joins. Triangle columns are reduced
/// explicitly. Throws InvalidComplex.
PersistenceDiagram compute_persistence(const FilteredComplex& complex);

/// Features with birth <= t < death, per dimension.
BettiNumbers betti_numbers(const PersistenceDiagram& diagram, double t);

/// Finite and essential features of the given dimension.
std::size_t feature_count(const PersistenceDiagram& diagram, int dimension);
std::size_t essential_count(const PersistenceDiagram& diagram, int dimension);

/// `dim,birth,death` table, `inf` for essential features.
void write_diagram(std::ostream& out, const PersistenceDiagram& diagram);
/// max_filtration is reconstructed as the largest finite coordinate.
PersistenceDiagram read_diagram(std::istream& in);

}  // namespace sph
