#include "corecluster/corecluster.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <stdexcept>

namespace corecluster {

void SelectionParams::validate() const {
  if (!(alpha > 0.5) || alpha > 1.0)
    throw std::invalid_argument("alpha must lie in (0.5, 1]");
  if (beta < 1) throw std::invalid_argument("beta must be a positive integer");
  if (min_cluster_input < 1) throw std::invalid_argument("min_cluster_input must be positive");
}

ClusterFamily::ClusterFamily(const Graph& g)
    : graph_(&g),
      active_(static_cast<std::size_t>(g.vertex_count()), false),
      assignment_(static_cast<std::size_t>(g.vertex_count()), -1) {}

void ClusterFamily::activate(VertexId v) { active_[static_cast<std::size_t>(v)] = true; }

void ClusterFamily::activate(const VertexSet& vs) {
  for (VertexId v : vs) activate(v);
}

void ClusterFamily::activate_all() { active_.assign(active_.size(), true); }

int ClusterFamily::active_degree(VertexId v) const {
  int d = 0;
  for (VertexId u : graph_->neighbors(v))
    if (active_[static_cast<std::size_t>(u)]) ++d;
  return d;
}

int ClusterFamily::add_cluster(const std::vector<VertexId>& members) {
  if (members.empty()) throw std::invalid_argument("clusters must be nonempty");
  const int index = static_cast<int>(clusters_.size());
  for (VertexId v : members) {
    if (v < 0 || v >= graph_->vertex_count()) throw std::out_of_range("vertex id out of range");
    if (!active_[static_cast<std::size_t>(v)]) throw std::invalid_argument("inactive vertex in cluster");
    if (assignment_[static_cast<std::size_t>(v)] >= 0)
      throw std::invalid_argument("vertex already clustered");
    assignment_[static_cast<std::size_t>(v)] = index;
  }
  clusters_.push_back(members);
  return index;
}

void ClusterFamily::add_to_cluster(VertexId v, int cluster) {
  if (v < 0 || v >= graph_->vertex_count()) throw std::out_of_range("vertex id out of range");
  if (cluster < 0 || cluster >= cluster_count()) throw std::out_of_range("cluster index out of range");
  if (assignment_[static_cast<std::size_t>(v)] >= 0)
    throw std::invalid_argument("vertex already clustered");
  assignment_[static_cast<std::size_t>(v)] = cluster;
  clusters_[static_cast<std::size_t>(cluster)].push_back(v);
}

std::optional<int> criterion(const ClusterFamily& family, VertexId v, const SelectionParams& params) {
  const Graph& g = family.graph();
  int degree = 0;
  std::vector<std::pair<int, int>> overlap;  // (cluster, count), small and sparse
  for (VertexId u : g.neighbors(v)) {
    if (!family.active(u)) continue;
    ++degree;
    const int c = family.cluster_of(u);
    if (c < 0) continue;
    bool found = false;
    for (auto& [cluster, count] : overlap)
      if (cluster == c) {
        ++count;
        found = true;
        break;
      }
    if (!found) overlap.emplace_back(c, 1);
  }
  if (degree < params.beta) return std::nullopt;
  for (const auto& [cluster, count] : overlap)
    if (static_cast<double>(count) >= params.alpha * static_cast<double>(degree))
      return cluster;  // unique because alpha > 0.5
  return std::nullopt;
}

SpanResult span_of(const ClusterFamily& family, VertexId v, SpanZeroPolicy policy) {
  const Graph& g = family.graph();
  std::vector<std::pair<int, std::int64_t>> overlap;
  for (VertexId u : g.neighbors(v)) {
    if (!family.active(u)) continue;
    const int c = family.cluster_of(u);
    if (c < 0) continue;
    bool found = false;
    for (auto& [cluster, count] : overlap)
      if (cluster == c) {
        ++count;
        found = true;
        break;
      }
    if (!found) overlap.emplace_back(c, 1);
  }

  SpanResult result;
  for (const auto& [cluster, count] : overlap) result.span = std::max(result.span, count);
  if (result.span > 0) {
    for (const auto& [cluster, count] : overlap) {
      if (count != result.span) continue;
      if (!result.argspan || family.cluster_size(cluster) < family.cluster_size(*result.argspan) ||
          (family.cluster_size(cluster) == family.cluster_size(*result.argspan) && cluster < *result.argspan))
        result.argspan = cluster;
    }
    return result;
  }
  if (policy == SpanZeroPolicy::literal_argspan && family.cluster_count() > 0) {
    int smallest = 0;
    for (int c = 1; c < family.cluster_count(); ++c)
      if (family.cluster_size(c) < family.cluster_size(smallest)) smallest = c;
    result.argspan = smallest;
  }
  return result;
}

namespace {

// Connected components of the active subgraph restricted to s (sorted),
// discovered in ascending id order.
std::vector<std::vector<VertexId>> components_within(const ClusterFamily& family, const VertexSet& s) {
  const Graph& g = family.graph();
  std::vector<bool> in_s(static_cast<std::size_t>(g.vertex_count()), false);
  for (VertexId v : s) in_s[static_cast<std::size_t>(v)] = true;

  std::vector<bool> visited(static_cast<std::size_t>(g.vertex_count()), false);
  std::vector<std::vector<VertexId>> components;
  for (VertexId start : s) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    std::vector<VertexId> component;
    std::queue<VertexId> queue;
    visited[static_cast<std::size_t>(start)] = true;
    queue.push(start);
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop();
      component.push_back(v);
      for (VertexId u : g.neighbors(v)) {
        if (!in_s[static_cast<std::size_t>(u)] || visited[static_cast<std::size_t>(u)]) continue;
        if (!family.active(u)) continue;
        visited[static_cast<std::size_t>(u)] = true;
        queue.push(u);
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

}  // namespace

void assign(ClusterFamily& family, const VertexSet& s, SpanZeroPolicy policy) {
  std::vector<VertexId> remaining = s;
  while (!remaining.empty()) {
    std::int64_t max_span = 0;
    std::vector<std::int64_t> spans(remaining.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      spans[i] = span_of(family, remaining[i], policy).span;
      max_span = std::max(max_span, spans[i]);
    }

    if (max_span == 0) {
      if (policy == SpanZeroPolicy::singleton_components || family.cluster_count() == 0) {
        for (const auto& component : components_within(family, remaining))
          family.add_cluster(component);
      } else {
        for (VertexId v : remaining) {
          const SpanResult sr = span_of(family, v, policy);
          family.add_to_cluster(v, *sr.argspan);
        }
      }
      return;
    }

    std::vector<VertexId> batch, rest;
    for (std::size_t i = 0; i < remaining.size(); ++i)
      (spans[i] == max_span ? batch : rest).push_back(remaining[i]);
    for (VertexId v : batch) {
      // argspan re-evaluated at placement time: earlier placements in the
      // batch may change cluster sizes
      const SpanResult sr = span_of(family, v, policy);
      family.add_to_cluster(v, sr.argspan ? *sr.argspan : 0);
    }
    remaining = std::move(rest);
  }
}

SelectOutcome select(ClusterFamily& family, const VertexSet& pending, const SelectionParams& params) {
  params.validate();
  SelectOutcome outcome;

  // Phase 1: criterion fixpoint, ascending id, until a pass makes no change.
  std::vector<VertexId> todo = pending;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<VertexId> still_pending;
    for (VertexId v : todo) {
      if (auto certificate = criterion(family, v, params)) {
        family.add_to_cluster(v, *certificate);
        ++outcome.absorbed;
        changed = true;
      } else {
        still_pending.push_back(v);
      }
    }
    todo = std::move(still_pending);
  }

  // Phase 2: split by adjacency to the existing clusters.
  VertexSet near, far;
  for (VertexId v : todo) {
    bool adjacent = false;
    for (VertexId u : family.graph().neighbors(v)) {
      if (family.active(u) && family.cluster_of(u) >= 0) {
        adjacent = true;
        break;
      }
    }
    (adjacent ? near : far).push_back(v);
  }

  bool far_independent = true;
  {
    std::vector<bool> in_far(static_cast<std::size_t>(family.graph().vertex_count()), false);
    for (VertexId v : far) in_far[static_cast<std::size_t>(v)] = true;
    for (VertexId v : far) {
      for (VertexId u : family.graph().neighbors(v)) {
        if (family.active(u) && in_far[static_cast<std::size_t>(u)]) {
          far_independent = false;
          break;
        }
      }
      if (!far_independent) break;
    }
  }

  if (far.empty() || far_independent) {
    assign(family, near, params.span_zero_policy);
    assign(family, far, params.span_zero_policy);
    outcome.assigned = static_cast<std::int64_t>(near.size() + far.size());
    return outcome;
  }

  outcome.unassigned.reserve(near.size() + far.size());
  outcome.unassigned.insert(outcome.unassigned.end(), near.begin(), near.end());
  outcome.unassigned.insert(outcome.unassigned.end(), far.begin(), far.end());
  std::sort(outcome.unassigned.begin(), outcome.unassigned.end());
  return outcome;
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Clusters the leftover set of one layer: the base algorithm when it is
// large enough, otherwise its connected components.
int cluster_leftover(ClusterFamily& family, const VertexSet& leftover, const ClusterAlgorithm& base,
                     int min_cluster_input, std::uint64_t seed, VertexId rank, double* base_seconds) {
  if (leftover.empty()) return 0;
  int created = 0;
  if (static_cast<int>(leftover.size()) >= min_cluster_input) {
    const auto started = std::chrono::steady_clock::now();
    const InducedSubgraph sub = induced_subgraph(family.graph(), leftover);
    Clustering local;
    try {
      local = base.cluster(sub.graph, seed);
    } catch (const std::exception& e) {
      throw std::runtime_error("base algorithm failed on layer " + std::to_string(rank) + ": " + e.what());
    }
    *base_seconds += seconds_since(started);
    validate_clustering(local);
    std::vector<std::vector<VertexId>> members(static_cast<std::size_t>(local.cluster_count));
    for (std::size_t i = 0; i < local.assignment.size(); ++i)
      members[static_cast<std::size_t>(local.assignment[i])].push_back(sub.vertices[i]);
    for (const auto& cluster : members) {
      family.add_cluster(cluster);
      ++created;
    }
  } else {
    for (const auto& component : components_within(family, leftover)) {
      family.add_cluster(component);
      ++created;
    }
  }
  return created;
}

}  // namespace

CoreClusterResult corecluster(const Graph& g, const ClusterAlgorithm& base,
                              const SelectionParams& params, std::uint64_t seed) {
  params.validate();
  const VertexId n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("cannot cluster the empty graph");

  const auto run_started = std::chrono::steady_clock::now();
  CoreClusterResult result;

  const auto decomp_started = std::chrono::steady_clock::now();
  const CoreDecomposition decomp = core_decomposition(g);
  result.trace.decomposition_seconds = seconds_since(decomp_started);
  result.trace.degeneracy_k = decomp.degeneracy_k;
  result.trace.vertex_count = n;

  ClusterFamily family(g);
  const VertexId k = decomp.degeneracy_k;

  for (VertexId rank = k; rank >= 0; --rank) {
    const VertexSet& layer = decomp.layers[static_cast<std::size_t>(rank)];
    family.activate(layer);

    LayerTrace trace;
    trace.rank = rank;
    trace.layer_size = static_cast<std::int64_t>(layer.size());

    VertexSet leftover;
    if (rank == k) {
      leftover = layer;  // S_k = V_k: nothing to select against yet
    } else {
      const SelectOutcome outcome = select(family, layer, params);
      trace.absorbed = outcome.absorbed;
      trace.assigned = outcome.assigned;
      leftover = outcome.unassigned;
    }
    trace.selected = static_cast<std::int64_t>(leftover.size());
    trace.clusters_created = cluster_leftover(family, leftover, base, params.min_cluster_input,
                                              seed, rank, &trace.base_seconds);
    result.trace.layers.push_back(trace);
    if (rank == 0) break;
  }

  result.clustering.assignment.resize(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) {
    const int c = family.cluster_of(v);
    if (c < 0) throw std::logic_error("vertex left unclustered");
    result.clustering.assignment[static_cast<std::size_t>(v)] = c;
  }
  result.clustering.cluster_count = family.cluster_count();
  validate_clustering(result.clustering);

  // conservation: absorbed + assigned + |S_i| = |V_i| on every layer
  for (const LayerTrace& layer : result.trace.layers)
    if (layer.absorbed + layer.assigned + layer.selected != layer.layer_size)
      throw std::logic_error("layer bookkeeping does not balance");

  result.trace.total_seconds = seconds_since(run_started);
  return result;
}

AccelerationStats acceleration_stats(const CoreClusterTrace& trace) {
  AccelerationStats stats;
  const double n = static_cast<double>(trace.vertex_count);
  for (const LayerTrace& layer : trace.layers) {
    if (layer.layer_size == 0) continue;
    stats.mu_g = std::max(stats.mu_g, n / static_cast<double>(layer.layer_size));
    // an empty S_i means the selection absorbed the whole layer; it counts
    // as the smallest possible base input so that rho_g stays finite and
    // dominates mu_g layerwise
    const double selected = layer.selected > 0 ? static_cast<double>(layer.selected) : 1.0;
    stats.rho_g = std::max(stats.rho_g, n / selected);
    stats.n_max = std::max(stats.n_max, layer.selected);
  }
  if (stats.rho_g < stats.mu_g) throw std::logic_error("rho_g must dominate mu_g");
  const double n_max = static_cast<double>(stats.n_max);
  stats.predicted_bound = static_cast<double>(trace.degeneracy_k + 1) * n_max * n_max * n_max;
  return stats;
}

}  // namespace corecluster
