// Test-only oracles, kept independent of the library code paths they check.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "corecluster/graph.hpp"

namespace oracles {

using corecluster::Graph;
using corecluster::VertexId;

// Coreness by definition: for each threshold i, repeatedly delete vertices of
// degree < i; a vertex's coreness is the largest i it survives.
inline std::vector<VertexId> naive_peeling_coreness(const Graph& g) {
  const VertexId n = g.vertex_count();
  std::vector<VertexId> coreness(static_cast<std::size_t>(n), 0);
  for (VertexId threshold = 1;; ++threshold) {
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    bool removed = true;
    while (removed) {
      removed = false;
      for (VertexId v = 0; v < n; ++v) {
        if (!alive[static_cast<std::size_t>(v)]) continue;
        int degree = 0;
        for (VertexId u : g.neighbors(v))
          if (alive[static_cast<std::size_t>(u)]) ++degree;
        if (degree < threshold) {
          alive[static_cast<std::size_t>(v)] = false;
          removed = true;
        }
      }
    }
    bool any = false;
    for (VertexId v = 0; v < n; ++v) {
      if (alive[static_cast<std::size_t>(v)]) {
        coreness[static_cast<std::size_t>(v)] = threshold;
        any = true;
      }
    }
    if (!any) break;
  }
  return coreness;
}

// Survivors of peeling G[subset] at the given threshold.
inline std::vector<VertexId> peel_survivors(const Graph& g, std::vector<VertexId> subset, VertexId threshold) {
  std::set<VertexId> alive(subset.begin(), subset.end());
  bool removed = true;
  while (removed) {
    removed = false;
    for (auto it = alive.begin(); it != alive.end();) {
      int degree = 0;
      for (VertexId u : g.neighbors(*it))
        if (alive.count(u)) ++degree;
      if (degree < threshold) {
        it = alive.erase(it);
        removed = true;
      } else {
        ++it;
      }
    }
  }
  return {alive.begin(), alive.end()};
}

inline Graph erdos_renyi(VertexId n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (coin(rng) < p) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

// Direct-formula NMI over label vectors, written independently of the
// library implementation (map-based contingency, long-form sums).
inline double nmi_direct(const std::vector<int>& a, const std::vector<int>& b) {
  const double n = static_cast<double>(a.size());
  std::map<int, double> pa, pb;
  std::map<std::pair<int, int>, double> joint;
  for (std::size_t i = 0; i < a.size(); ++i) {
    pa[a[i]] += 1.0;
    pb[b[i]] += 1.0;
    joint[{a[i], b[i]}] += 1.0;
  }
  double mi = 0.0;
  for (const auto& [key, count] : joint) {
    const double pxy = count / n;
    const double px = pa[key.first] / n;
    const double py = pb[key.second] / n;
    mi += pxy * std::log(pxy / (px * py));
  }
  double ha = 0.0, hb = 0.0;
  for (const auto& [label, count] : pa) ha -= (count / n) * std::log(count / n);
  for (const auto& [label, count] : pb) hb -= (count / n) * std::log(count / n);
  if (ha + hb == 0.0) return 1.0;
  return mi / ((ha + hb) / 2.0);
}

// cut(S, V \ S) by plain edge enumeration.
inline std::int64_t cut_size(const Graph& g, const std::set<VertexId>& s) {
  std::int64_t cut = 0;
  for (const auto& [u, v] : g.edges())
    if (s.count(u) != s.count(v)) ++cut;
  return cut;
}

// Same, but with every edge incident to `excluded` removed first — the cut
// of the graph before a new vertex arrives.
inline std::int64_t cut_size_excluding(const Graph& g, const std::set<VertexId>& s, VertexId excluded) {
  std::int64_t cut = 0;
  for (const auto& [u, v] : g.edges()) {
    if (u == excluded || v == excluded) continue;
    if (s.count(u) != s.count(v)) ++cut;
  }
  return cut;
}

inline double modularity_direct(const Graph& g, const std::vector<int>& labels) {
  const double m = static_cast<double>(g.edge_count());
  std::map<int, double> intra, degree_sum;
  for (VertexId v = 0; v < g.vertex_count(); ++v) degree_sum[labels[static_cast<std::size_t>(v)]] += g.degree(v);
  for (const auto& [u, v] : g.edges())
    if (labels[static_cast<std::size_t>(u)] == labels[static_cast<std::size_t>(v)])
      intra[labels[static_cast<std::size_t>(u)]] += 1.0;
  double q = 0.0;
  for (const auto& [label, d] : degree_sum) q += intra[label] / m - (d / (2.0 * m)) * (d / (2.0 * m));
  return q;
}

// Best modularity over all set partitions (restricted growth strings);
// tractable to n around 10.
inline std::pair<double, std::vector<int>> exhaustive_best_modularity(const Graph& g) {
  const VertexId n = g.vertex_count();
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  std::vector<int> best;
  double best_q = -1.0;
  // enumerate restricted growth strings: labels[0] = 0, labels[i] <= max+1
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  for (;;) {
    const double q = modularity_direct(g, rgs);
    if (q > best_q) {
      best_q = q;
      best = rgs;
    }
    // next string
    int i = static_cast<int>(n) - 1;
    for (; i > 0; --i) {
      int max_prefix = 0;
      for (int j = 0; j < i; ++j) max_prefix = std::max(max_prefix, rgs[static_cast<std::size_t>(j)]);
      if (rgs[static_cast<std::size_t>(i)] <= max_prefix) {
        ++rgs[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < static_cast<int>(n); ++j) rgs[static_cast<std::size_t>(j)] = 0;
        break;
      }
    }
    if (i == 0) break;
  }
  return {best_q, best};
}

// Heavy-tailed test graph: each new vertex attaches to `out` existing
// vertices chosen proportional to degree (repeats collapse).
inline Graph preferential_attachment(VertexId n, int out, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<VertexId> endpoint_pool;  // one entry per edge endpoint
  for (VertexId v = 0; v + 1 < static_cast<VertexId>(out) + 1 && v + 1 < n; ++v) {
    edges.emplace_back(v, v + 1);
    endpoint_pool.push_back(v);
    endpoint_pool.push_back(v + 1);
  }
  for (VertexId v = static_cast<VertexId>(out) + 1; v < n; ++v) {
    for (int e = 0; e < out; ++e) {
      const VertexId target = endpoint_pool[rng() % endpoint_pool.size()];
      if (target == v) continue;
      edges.emplace_back(v, target);
      endpoint_pool.push_back(v);
      endpoint_pool.push_back(target);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace oracles
