#include "corecluster/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace corecluster {

bool Graph::has_edge(VertexId u, VertexId v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (VertexId u = 0; u < n_; ++u)
    for (VertexId v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::from_edges(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  Graph g;
  g.n_ = n;
  g.external_ids_.resize(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) g.external_ids_[v] = v;

  std::vector<std::pair<VertexId, VertexId>> undirected;
  undirected.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::out_of_range("edge endpoint out of range");
    if (u == v) {
      ++g.self_loops_dropped_;
      continue;
    }
    if (u > v) std::swap(u, v);
    undirected.emplace_back(u, v);
  }
  std::sort(undirected.begin(), undirected.end());
  const auto last = std::unique(undirected.begin(), undirected.end());
  g.duplicates_dropped_ = static_cast<std::int64_t>(undirected.end() - last);
  undirected.erase(last, undirected.end());
  g.m_ = static_cast<std::int64_t>(undirected.size());

  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [u, v] : undirected) {
    ++g.offsets_[static_cast<std::size_t>(u) + 1];
    ++g.offsets_[static_cast<std::size_t>(v) + 1];
  }
  for (std::size_t i = 1; i < g.offsets_.size(); ++i) g.offsets_[i] += g.offsets_[i - 1];

  g.adjacency_.resize(static_cast<std::size_t>(2 * g.m_));
  std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : undirected) {
    g.adjacency_[static_cast<std::size_t>(cursor[u]++)] = v;
    g.adjacency_[static_cast<std::size_t>(cursor[v]++)] = u;
  }
  for (VertexId v = 0; v < n; ++v)
    std::sort(g.adjacency_.begin() + g.offsets_[v], g.adjacency_.begin() + g.offsets_[v + 1]);
  return g;
}

Graph build_graph(const std::vector<std::pair<ExternalId, ExternalId>>& edges) {
  std::vector<ExternalId> ids;
  ids.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0) throw std::invalid_argument("vertex ids must be non-negative");
    ids.push_back(u);
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  std::unordered_map<ExternalId, VertexId> to_internal;
  to_internal.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) to_internal.emplace(ids[i], static_cast<VertexId>(i));

  std::vector<std::pair<VertexId, VertexId>> internal;
  internal.reserve(edges.size());
  for (const auto& [u, v] : edges) internal.emplace_back(to_internal.at(u), to_internal.at(v));

  Graph g = Graph::from_edges(static_cast<VertexId>(ids.size()), internal);
  g.external_ids_ = std::move(ids);
  return g;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  const VertexId n = g.vertex_count();
  std::vector<VertexId> to_sub(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const VertexId v = s[i];
    if (v < 0 || v >= n) throw std::out_of_range("vertex id out of range");
    if (i > 0 && s[i] <= s[i - 1]) throw std::invalid_argument("vertex set must be sorted and unique");
    to_sub[static_cast<std::size_t>(v)] = static_cast<VertexId>(i);
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v : s)
    for (VertexId u : g.neighbors(v))
      if (v < u && to_sub[static_cast<std::size_t>(u)] >= 0)
        edges.emplace_back(to_sub[static_cast<std::size_t>(v)], to_sub[static_cast<std::size_t>(u)]);

  InducedSubgraph result;
  result.graph = Graph::from_edges(static_cast<VertexId>(s.size()), edges);
  result.vertices = s;
  for (std::size_t i = 0; i < s.size(); ++i)
    result.graph.external_ids_[i] = g.external_id(s[i]);
  return result;
}

double local_clustering_coefficient(const Graph& g, VertexId v) {
  if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex id out of range");
  const auto nb = g.neighbors(v);
  const std::int64_t d = static_cast<std::int64_t>(nb.size());
  if (d <= 1) return 0.0;
  std::int64_t links = 0;
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (g.has_edge(nb[i], nb[j])) ++links;
  return 2.0 * static_cast<double>(links) / (static_cast<double>(d) * static_cast<double>(d - 1));
}

double global_clustering_coefficient(const Graph& g) {
  const VertexId n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("clustering coefficient of the empty graph is undefined");
  double sum = 0.0;
  for (VertexId v = 0; v < n; ++v) sum += local_clustering_coefficient(g, v);
  return sum / static_cast<double>(n);
}

std::pair<std::vector<int>, int> connected_components(const Graph& g) {
  const VertexId n = g.vertex_count();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int count = 0;
  std::queue<VertexId> queue;
  for (VertexId start = 0; start < n; ++start) {
    if (label[static_cast<std::size_t>(start)] >= 0) continue;
    label[static_cast<std::size_t>(start)] = count;
    queue.push(start);
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop();
      for (VertexId u : g.neighbors(v)) {
        if (label[static_cast<std::size_t>(u)] < 0) {
          label[static_cast<std::size_t>(u)] = count;
          queue.push(u);
        }
      }
    }
    ++count;
  }
  return {std::move(label), count};
}

}  // namespace corecluster
