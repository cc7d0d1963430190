#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "corecluster/clustering.hpp"
#include "corecluster/graph.hpp"

namespace corecluster {

/// Reads a whitespace-separated edge list: two non-negative integers per
/// line, `#` comments and blank lines ignored. An empty file yields the
/// empty graph. Parse errors report the 1-based line number.
Graph read_edge_list(const std::string& path);
Graph read_edge_list(std::istream& in, const std::string& name);

/// Clustering file contents in the external id space: one
/// "vertex<TAB>cluster" line per vertex.
struct LabeledClustering {
  std::vector<ExternalId> vertices;
  std::vector<int> labels;
};

LabeledClustering read_clustering_file(const std::string& path);

std::string format_clustering(const Graph& g, const Clustering& c);
void write_clustering(const std::string& path, const Graph& g, const Clustering& c);

/// Maps file labels onto the graph's internal vertex order. Every graph
/// vertex must be labeled; unknown vertices and conflicting duplicates are
/// errors.
Clustering clustering_for_graph(const LabeledClustering& file, const Graph& g);

/// Aligns two clustering files over the same external vertex set (e.g.
/// ground truth vs. prediction) without a graph.
std::pair<Clustering, Clustering> align_clusterings(const LabeledClustering& a,
                                                    const LabeledClustering& b);

/// Write-temp-then-rename so readers never observe a partial file.
void atomic_write_file(const std::string& path, const std::string& content);

/// Harness parallelism cap from CORECLUSTER_THREADS (default 1).
int harness_threads();

}  // namespace corecluster
