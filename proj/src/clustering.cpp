#include "corecluster/clustering.hpp"

#include <stdexcept>
#include <unordered_map>

namespace corecluster {

void validate_clustering(const Clustering& c) {
  if (c.cluster_count < 0) throw std::invalid_argument("negative cluster count");
  if (!c.assignment.empty() && c.cluster_count == 0)
    throw std::invalid_argument("vertices present but no clusters");
  std::vector<std::int64_t> sizes(static_cast<std::size_t>(c.cluster_count), 0);
  for (int label : c.assignment) {
    if (label < 0 || label >= c.cluster_count) throw std::invalid_argument("cluster label out of range");
    ++sizes[static_cast<std::size_t>(label)];
  }
  for (std::int64_t s : sizes)
    if (s == 0) throw std::invalid_argument("empty cluster");
}

Clustering compact_labels(const std::vector<int>& raw) {
  Clustering out;
  out.assignment.reserve(raw.size());
  std::unordered_map<int, int> remap;
  for (int label : raw) {
    auto [it, inserted] = remap.emplace(label, static_cast<int>(remap.size()));
    out.assignment.push_back(it->second);
  }
  out.cluster_count = static_cast<int>(remap.size());
  return out;
}

std::vector<std::int64_t> cluster_sizes(const Clustering& c) {
  std::vector<std::int64_t> sizes(static_cast<std::size_t>(c.cluster_count), 0);
  for (int label : c.assignment) ++sizes[static_cast<std::size_t>(label)];
  return sizes;
}

std::vector<VertexSet> clusters_of(const Clustering& c) {
  std::vector<VertexSet> sets(static_cast<std::size_t>(c.cluster_count));
  for (std::size_t v = 0; v < c.assignment.size(); ++v)
    sets[static_cast<std::size_t>(c.assignment[v])].push_back(static_cast<VertexId>(v));
  return sets;
}

}  // namespace corecluster
