#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "corecluster/cluster_algos.hpp"

namespace corecluster {

namespace {

Clustering singletons(VertexId n) {
  Clustering c;
  c.assignment.resize(static_cast<std::size_t>(n));
  std::iota(c.assignment.begin(), c.assignment.end(), 0);
  c.cluster_count = n;
  return c;
}

}  // namespace

Clustering fast_greedy_modularity(const Graph& g) {
  const VertexId n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("cannot cluster the empty graph");
  const double m = static_cast<double>(g.edge_count());
  if (m == 0) return singletons(n);

  // e[c][d]: fraction of edge endpoints between communities c and d
  // (e[c][c] counts intra edges once); a[c]: endpoint fraction of c.
  // ΔQ for merging c,d = 2 (e[c][d] - a[c] a[d]).
  std::vector<std::map<int, double>> e(static_cast<std::size_t>(n));
  std::vector<double> a(static_cast<std::size_t>(n), 0.0);
  for (VertexId v = 0; v < n; ++v) {
    a[v] = static_cast<double>(g.degree(v)) / (2.0 * m);
    for (VertexId u : g.neighbors(v))
      if (u != v) e[v][u] = 1.0 / (2.0 * m);
  }

  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  double q = 0.0;
  for (VertexId v = 0; v < n; ++v) q -= a[v] * a[v];

  double best_q = q;
  int best_step = 0;
  std::vector<std::pair<int, int>> merges;  // (absorbing community, absorbed community)

  for (;;) {
    int from = -1, into = -1;
    double best_gain = -std::numeric_limits<double>::infinity();
    for (VertexId c = 0; c < n; ++c) {
      if (!alive[c]) continue;
      for (const auto& [d, ecd] : e[c]) {
        if (d <= c) continue;
        const double gain = 2.0 * (ecd - a[c] * a[d]);
        if (gain > best_gain) {
          best_gain = gain;
          into = c;
          from = d;
        }
      }
    }
    if (into < 0) break;  // no connected pair left

    // merge `from` into `into`
    for (const auto& [d, efd] : e[from]) {
      if (d == into) {
        q += 2.0 * efd;  // intra fraction gained twice (both directions)
        continue;
      }
      e[into][d] += efd;
      e[d][into] += efd;
      e[d].erase(from);
    }
    q -= 2.0 * a[into] * a[from];
    e[into].erase(from);
    a[into] += a[from];
    e[from].clear();
    a[from] = 0.0;
    alive[from] = false;
    merges.emplace_back(into, from);

    if (q > best_q + 1e-12) {
      best_q = q;
      best_step = static_cast<int>(merges.size());
    }
  }

  // replay the merge prefix of peak modularity
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int s = 0; s < best_step; ++s)
    parent[static_cast<std::size_t>(find(merges[static_cast<std::size_t>(s)].second))] =
        find(merges[static_cast<std::size_t>(s)].first);

  std::vector<int> raw(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) raw[v] = find(v);
  Clustering result = compact_labels(raw);
  validate_clustering(result);
  return result;
}

namespace {

// Weighted multigraph for the coarsening levels: adjacency with edge weights
// plus per-vertex self-loop weight (twice the collapsed intra weight).
struct WeightedGraph {
  std::vector<std::vector<std::pair<int, double>>> adj;
  std::vector<double> self_weight;
  double total_weight_2 = 0.0;  // sum of strengths == 2W

  int size() const { return static_cast<int>(adj.size()); }
  double strength(int v) const {
    double s = self_weight[static_cast<std::size_t>(v)];
    for (const auto& [u, w] : adj[static_cast<std::size_t>(v)]) s += w;
    return s;
  }
};

WeightedGraph lift(const Graph& g) {
  WeightedGraph wg;
  wg.adj.resize(static_cast<std::size_t>(g.vertex_count()));
  wg.self_weight.assign(static_cast<std::size_t>(g.vertex_count()), 0.0);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (VertexId u : g.neighbors(v)) wg.adj[v].emplace_back(u, 1.0);
  wg.total_weight_2 = 2.0 * static_cast<double>(g.edge_count());
  return wg;
}

// One pass of local moves; returns the community per vertex and whether any
// vertex moved.
bool local_moves(const WeightedGraph& wg, std::vector<int>& community, std::mt19937_64& rng) {
  const int n = wg.size();
  std::vector<double> community_strength(static_cast<std::size_t>(n), 0.0);
  for (int v = 0; v < n; ++v) community_strength[static_cast<std::size_t>(community[v])] += wg.strength(v);

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  const double m2 = wg.total_weight_2;
  bool any_move = false;
  bool moved = true;
  std::vector<double> weight_to(static_cast<std::size_t>(n), 0.0);
  while (moved) {
    moved = false;
    for (int v : order) {
      const int old_c = community[static_cast<std::size_t>(v)];
      const double k_v = wg.strength(v);

      std::vector<int> touched;
      for (const auto& [u, w] : wg.adj[static_cast<std::size_t>(v)]) {
        const int c = community[static_cast<std::size_t>(u)];
        if (weight_to[static_cast<std::size_t>(c)] == 0.0) touched.push_back(c);
        weight_to[static_cast<std::size_t>(c)] += w;
      }

      community_strength[static_cast<std::size_t>(old_c)] -= k_v;
      int best_c = old_c;
      double best_gain = weight_to[static_cast<std::size_t>(old_c)] -
                         k_v * community_strength[static_cast<std::size_t>(old_c)] / m2;
      for (int c : touched) {
        if (c == old_c) continue;
        const double gain = weight_to[static_cast<std::size_t>(c)] -
                            k_v * community_strength[static_cast<std::size_t>(c)] / m2;
        // strict improvement only; equal-gain candidates prefer the lower id
        // among themselves but never displace the current community
        if (gain > best_gain + 1e-12 || (best_c != old_c && gain > best_gain - 1e-12 && c < best_c)) {
          best_gain = gain;
          best_c = c;
        }
      }
      community[static_cast<std::size_t>(v)] = best_c;
      community_strength[static_cast<std::size_t>(best_c)] += k_v;
      if (best_c != old_c) {
        moved = true;
        any_move = true;
      }

      for (int c : touched) weight_to[static_cast<std::size_t>(c)] = 0.0;
      weight_to[static_cast<std::size_t>(old_c)] = 0.0;
    }
  }
  return any_move;
}

WeightedGraph coarsen(const WeightedGraph& wg, const std::vector<int>& dense_community) {
  int groups = 0;
  for (int c : dense_community) groups = std::max(groups, c + 1);

  WeightedGraph out;
  out.adj.resize(static_cast<std::size_t>(groups));
  out.self_weight.assign(static_cast<std::size_t>(groups), 0.0);
  out.total_weight_2 = wg.total_weight_2;

  std::vector<std::map<int, double>> edges(static_cast<std::size_t>(groups));
  for (int v = 0; v < wg.size(); ++v) {
    const int cv = dense_community[static_cast<std::size_t>(v)];
    out.self_weight[static_cast<std::size_t>(cv)] += wg.self_weight[static_cast<std::size_t>(v)];
    for (const auto& [u, w] : wg.adj[static_cast<std::size_t>(v)]) {
      const int cu = dense_community[static_cast<std::size_t>(u)];
      if (cu == cv)
        out.self_weight[static_cast<std::size_t>(cv)] += w;  // both directions accumulate 2x intra
      else
        edges[static_cast<std::size_t>(cv)][cu] += w;
    }
  }
  for (int c = 0; c < groups; ++c)
    for (const auto& [d, w] : edges[static_cast<std::size_t>(c)])
      out.adj[static_cast<std::size_t>(c)].emplace_back(d, w);
  return out;
}

}  // namespace

Clustering multilevel_modularity(const Graph& g, std::uint64_t seed) {
  const VertexId n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("cannot cluster the empty graph");
  if (g.edge_count() == 0) return singletons(n);

  std::mt19937_64 rng(seed);
  WeightedGraph level = lift(g);
  std::vector<int> vertex_to_community(static_cast<std::size_t>(n));
  std::iota(vertex_to_community.begin(), vertex_to_community.end(), 0);

  for (;;) {
    std::vector<int> community(static_cast<std::size_t>(level.size()));
    std::iota(community.begin(), community.end(), 0);
    const bool improved = local_moves(level, community, rng);

    // densify community ids in first-occurrence-by-vertex order
    std::vector<int> remap(static_cast<std::size_t>(level.size()), -1);
    int next = 0;
    for (int& c : community) {
      if (remap[static_cast<std::size_t>(c)] < 0) remap[static_cast<std::size_t>(c)] = next++;
      c = remap[static_cast<std::size_t>(c)];
    }

    for (int& c : vertex_to_community) c = community[static_cast<std::size_t>(c)];
    if (!improved || next == level.size()) break;
    level = coarsen(level, community);
  }

  Clustering result = compact_labels(vertex_to_community);
  validate_clustering(result);
  return result;
}

}  // namespace corecluster
