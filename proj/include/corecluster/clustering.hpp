#pragma once

#include <cstdint>
#include <vector>

#include "corecluster/graph.hpp"

namespace corecluster {

/// A partition of a vertex set: one label per vertex, labels dense in
/// 0..cluster_count-1 with no empty clusters.
struct Clustering {
  std::vector<int> assignment;
  int cluster_count = 0;
};

/// Throws std::invalid_argument if the partition invariants are broken
/// (label out of range, empty cluster, unassigned vertex).
void validate_clustering(const Clustering& c);

/// Relabels arbitrary labels to dense 0..k-1 in order of first occurrence.
Clustering compact_labels(const std::vector<int>& raw);

std::vector<std::int64_t> cluster_sizes(const Clustering& c);

/// Clusters as sorted vertex sets, indexed by label.
std::vector<VertexSet> clusters_of(const Clustering& c);

}  // namespace corecluster
