#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sph/persistence.hpp"

namespace sph {

/// Replaces every infinite death by `cap`. Throws CapTooSmall when cap is
/// below some finite coordinate of the diagram.
PersistenceDiagram cap_infinities(const PersistenceDiagram& diagram, double cap);

/// Exact bottleneck distance between the dimension-`dimension` parts of two
/// capped diagrams, under the sup norm with diagonal matching allowed.
double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b, int dimension);

/// Point sets form of the same computation; points are (birth, death).
struct DiagramPoint {
    double birth = 0.0;
    double death = 0.0;
};
double bottleneck(const std::vector<DiagramPoint>& a, const std::vector<DiagramPoint>& b);

/// Symmetric matrix with zero diagonal and a label per row.
struct DistanceMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> entries;

    std::size_t size() const noexcept { return labels.size(); }
    double operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }
};

/// Cap shared by a collection: 1 + the largest finite coordinate of any diagram.
double shared_cap(const std::vector<PersistenceDiagram>& diagrams);

/// Entry (i, j) is the max over `dimensions` of the bottleneck distance after
/// capping every diagram with shared_cap(diagrams).
DistanceMatrix pairwise_matrix(const std::vector<PersistenceDiagram>& diagrams,
                               const std::vector<std::string>& labels,
                               const std::vector<int>& dimensions = {0, 1});

/// Labels in the first row and column, entries with 9 significant digits.
void write_matrix(std::ostream& out, const DistanceMatrix& m);
/// Validates squareness, symmetry and the zero diagonal.
DistanceMatrix read_matrix(std::istream& in);

}  // namespace sph
