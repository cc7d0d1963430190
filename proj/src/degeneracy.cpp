#include "corecluster/degeneracy.hpp"

#include <algorithm>
#include <stdexcept>

namespace corecluster {

CoreDecomposition core_decomposition(const Graph& g) {
  const VertexId n = g.vertex_count();
  CoreDecomposition out;
  out.coreness.assign(static_cast<std::size_t>(n), 0);
  if (n == 0) {
    out.layers.assign(1, {});
    return out;
  }

  // Batagelj-Zaversnik bucket sort: vert holds vertices ordered by current
  // degree, pos/bin track positions and bucket starts. The initial counting
  // sort is stable in vertex id, so equal-degree vertices start in ascending
  // id order.
  std::vector<VertexId> degree(static_cast<std::size_t>(n));
  VertexId max_degree = 0;
  for (VertexId v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    max_degree = std::max(max_degree, degree[v]);
  }

  std::vector<VertexId> bin(static_cast<std::size_t>(max_degree) + 2, 0);
  for (VertexId v = 0; v < n; ++v) ++bin[degree[v] + 1];
  for (std::size_t d = 1; d < bin.size(); ++d) bin[d] += bin[d - 1];

  std::vector<VertexId> vert(static_cast<std::size_t>(n));
  std::vector<VertexId> pos(static_cast<std::size_t>(n));
  std::vector<VertexId> start(bin.begin(), bin.end() - 1);
  for (VertexId v = 0; v < n; ++v) {
    pos[v] = start[degree[v]]++;
    vert[pos[v]] = v;
  }

  for (VertexId idx = 0; idx < n; ++idx) {
    const VertexId v = vert[idx];
    out.coreness[v] = degree[v];
    for (VertexId u : g.neighbors(v)) {
      if (degree[u] > degree[v]) {
        // swap u with the first vertex of its bucket, then shrink the bucket
        const VertexId du = degree[u];
        const VertexId pu = pos[u];
        const VertexId pw = bin[du];
        const VertexId w = vert[pw];
        if (u != w) {
          pos[u] = pw;
          vert[pu] = w;
          pos[w] = pu;
          vert[pw] = u;
        }
        ++bin[du];
        --degree[u];
      }
    }
  }

  out.degeneracy_k = *std::max_element(out.coreness.begin(), out.coreness.end());
  out.layers.assign(static_cast<std::size_t>(out.degeneracy_k) + 1, {});
  for (VertexId v = 0; v < n; ++v) out.layers[out.coreness[v]].push_back(v);
  return out;
}

VertexSet k_core(const Graph& g, const CoreDecomposition& decomp, VertexId i) {
  if (i < 0 || i > decomp.degeneracy_k) throw std::out_of_range("core rank out of range");
  VertexSet core;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (decomp.coreness[v] >= i) core.push_back(v);
  return core;
}

std::vector<VertexSet> core_expansion_sequence(const CoreDecomposition& decomp) {
  return {decomp.layers.rbegin(), decomp.layers.rend()};
}

}  // namespace corecluster
