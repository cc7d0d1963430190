#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace corecluster {

using VertexId = std::int32_t;
using ExternalId = std::int64_t;

/// Sorted list of distinct internal vertex ids.
using VertexSet = std::vector<VertexId>;

struct InducedSubgraph;

/// Immutable simple undirected graph in CSR form.
///
/// Internal ids are dense 0..n-1; the original external id of every vertex
/// is retained so that all file output can be expressed in the caller's id
/// space. Neighbor lists are sorted, free of self-loops and duplicates, and
/// the handshake identity (sum of degrees == 2m) holds by construction.
class Graph {
public:
  Graph() = default;

  VertexId vertex_count() const { return n_; }
  std::int64_t edge_count() const { return m_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  VertexId degree(VertexId v) const { return static_cast<VertexId>(offsets_[v + 1] - offsets_[v]); }
  bool has_edge(VertexId u, VertexId v) const;

  ExternalId external_id(VertexId v) const { return external_ids_[v]; }
  const std::vector<ExternalId>& external_ids() const { return external_ids_; }

  std::int64_t self_loops_dropped() const { return self_loops_dropped_; }
  std::int64_t duplicates_dropped() const { return duplicates_dropped_; }

  /// All edges as (u, v) pairs with u < v, in ascending order.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  /// Builds a graph over exactly n internal vertices 0..n-1 (external ids are
  /// the identity). Self-loops and duplicate edges are dropped and counted.
  static Graph from_edges(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edges);

private:
  VertexId n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::int64_t> offsets_{0};
  std::vector<VertexId> adjacency_;
  std::vector<ExternalId> external_ids_;
  std::int64_t self_loops_dropped_ = 0;
  std::int64_t duplicates_dropped_ = 0;

  friend Graph build_graph(const std::vector<std::pair<ExternalId, ExternalId>>& edges);
  friend struct InducedSubgraph;
  friend InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
};

/// Builds a graph from edges over arbitrary non-negative external ids.
/// Vertices are every id that appears in the input (including endpoints of
/// dropped self-loops), compacted to 0..n-1 in ascending external-id order.
Graph build_graph(const std::vector<std::pair<ExternalId, ExternalId>>& edges);

struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> vertices;  // new id -> original id; equals the sorted input set
};

/// Induced subgraph on S. Throws std::out_of_range for invalid ids;
/// S must be sorted and duplicate-free.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// (2 * triangles through v) / (deg(v) * (deg(v) - 1)); 0 when deg(v) <= 1.
double local_clustering_coefficient(const Graph& g, VertexId v);

/// Arithmetic mean of the local coefficients over all vertices.
/// Throws std::invalid_argument on the empty graph.
double global_clustering_coefficient(const Graph& g);

/// Component label per vertex (labels dense, ordered by smallest member id)
/// plus the component count.
std::pair<std::vector<int>, int> connected_components(const Graph& g);

}  // namespace corecluster
