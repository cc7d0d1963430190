#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "corecluster/cluster_algos.hpp"
#include "corecluster/degeneracy.hpp"
#include "corecluster/graph.hpp"

namespace corecluster {

/// What to do with vertices whose span is zero (no neighbor in any cluster).
enum class SpanZeroPolicy {
  singleton_components,  // connected components of the leftover set become new clusters
  literal_argspan,       // each joins the current minimum-size cluster
};

struct SelectionParams {
  double alpha = 0.7;  // neighbor-majority threshold, must exceed 0.5
  int beta = 2;        // minimum degree for the criterion
  int min_cluster_input = 3;
  SpanZeroPolicy span_zero_policy = SpanZeroPolicy::singleton_components;

  void validate() const;
};

/// Mutable family of disjoint clusters over the active subgraph of g — the
/// (G, F, V) candidate triple with the pending set V managed by the caller.
/// "Active" vertices are those of the current core; degrees and neighbor
/// overlaps are always taken within the active subgraph.
class ClusterFamily {
public:
  explicit ClusterFamily(const Graph& g);

  const Graph& graph() const { return *graph_; }

  void activate(VertexId v);
  void activate(const VertexSet& vs);
  void activate_all();
  bool active(VertexId v) const { return active_[static_cast<std::size_t>(v)]; }

  /// Degree of v within the active subgraph.
  int active_degree(VertexId v) const;

  int cluster_count() const { return static_cast<int>(clusters_.size()); }
  std::int64_t cluster_size(int c) const { return static_cast<std::int64_t>(clusters_[static_cast<std::size_t>(c)].size()); }
  const std::vector<std::vector<VertexId>>& clusters() const { return clusters_; }

  /// -1 while unassigned.
  int cluster_of(VertexId v) const { return assignment_[static_cast<std::size_t>(v)]; }

  /// Members must be active and unassigned. Returns the new cluster index.
  int add_cluster(const std::vector<VertexId>& members);
  void add_to_cluster(VertexId v, int cluster);

private:
  const Graph* graph_;
  std::vector<bool> active_;
  std::vector<int> assignment_;
  std::vector<std::vector<VertexId>> clusters_;
};

/// The certificate cluster of v: the unique cluster holding at least an
/// alpha fraction of v's (active) neighbors, provided v has at least beta of
/// them. Empty when the criterion fails.
std::optional<int> criterion(const ClusterFamily& family, VertexId v, const SelectionParams& params);

struct SpanResult {
  std::int64_t span = 0;
  std::optional<int> argspan;
};

/// span = max neighbor overlap with any cluster; argspan = the smallest
/// cluster attaining it (ties by lowest index). A zero span yields an empty
/// argspan under singleton_components and the minimum-size cluster under
/// literal_argspan (still empty if there are no clusters).
SpanResult span_of(const ClusterFamily& family, VertexId v,
                   SpanZeroPolicy policy = SpanZeroPolicy::singleton_components);

/// Places every vertex of s into the family, highest span first (batches of
/// equal span; spans recomputed between batches). A zero-span batch is
/// resolved by the span-zero policy.
void assign(ClusterFamily& family, const VertexSet& s, SpanZeroPolicy policy);

struct SelectOutcome {
  VertexSet unassigned;        // S_i: vertices left for the base algorithm
  std::int64_t absorbed = 0;   // moved by the criterion fixpoint
  std::int64_t assigned = 0;   // routed through assign()
};

/// Two-phase selection: criterion fixpoint over the pending set, then the
/// neighbors-of-clusters split; the leftover set is returned unless the
/// far set is empty or independent, in which case everything is assigned.
SelectOutcome select(ClusterFamily& family, const VertexSet& pending, const SelectionParams& params);

struct LayerTrace {
  VertexId rank = 0;
  std::int64_t layer_size = 0;  // |V_i|
  std::int64_t selected = 0;    // |S_i|
  std::int64_t absorbed = 0;
  std::int64_t assigned = 0;
  int clusters_created = 0;
  double base_seconds = 0.0;
};

struct CoreClusterTrace {
  std::vector<LayerTrace> layers;  // rank k down to 0
  VertexId degeneracy_k = 0;
  std::int64_t vertex_count = 0;
  double decomposition_seconds = 0.0;
  double total_seconds = 0.0;
};

struct AccelerationStats {
  std::int64_t n_max = 0;        // largest base-algorithm input
  double rho_g = 1.0;            // max n/|S_i|; empty S_i of a nonempty layer counts as size 1
  double mu_g = 1.0;             // max n/|V_i| over nonempty layers
  double predicted_bound = 0.0;  // (k+1) * n_max^3
};

struct CoreClusterResult {
  Clustering clustering;
  CoreClusterTrace trace;
};

/// Runs the base algorithm on the densest core, then walks the core
/// expansion sequence, absorbing each layer into the existing clusters via
/// select() and clustering whatever remains. The result partitions V(G).
CoreClusterResult corecluster(const Graph& g, const ClusterAlgorithm& base,
                              const SelectionParams& params, std::uint64_t seed);

AccelerationStats acceleration_stats(const CoreClusterTrace& trace);

}  // namespace corecluster
