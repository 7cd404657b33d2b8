#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "sph/distance.hpp"

namespace sph {

/// One agglomeration step. Leaves are clusters 0..n-1; the cluster created by
/// merge i has id n + i.
struct Merge {
    std::size_t a = 0;
    std::size_t b = 0;
    double height = 0.0;
    std::size_t size = 0;
};

struct Dendrogram {
    std::size_t n_leaves = 0;
    std::vector<std::string> labels;
    std::vector<Merge> merges;
    /// Height inversions that were clamped to the previous height.
    std::vector<std::string> warnings;
};

/// UPGMA: repeatedly merges the pair of clusters with the smallest mean
/// leaf-to-leaf distance. Ties go to the pair whose (smallest leaf, smallest
/// leaf) is lexicographically first.
Dendrogram average_linkage(const DistanceMatrix& m);

/// Flat clustering obtained by undoing the last k - 1 merges. Cluster ids are
/// numbered 0..k-1 by each cluster's smallest leaf. Throws InvalidK.
std::vector<int> cut(const Dendrogram& dendrogram, std::size_t k);

/// Text format:
///   leaves <n>
///   <i> <label>        (n lines)
///   merges <n-1>
///   <a> <b> <height> <size>
void write_dendrogram(std::ostream& out, const Dendrogram& d);
Dendrogram read_dendrogram(std::istream& in);

/// `label,cluster` table.
void write_assignment(std::ostream& out, const std::vector<std::string>& labels, const std::vector<int>& clusters);

}  // namespace sph
