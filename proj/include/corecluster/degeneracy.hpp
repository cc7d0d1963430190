#pragma once

#include <vector>

#include "corecluster/graph.hpp"

namespace corecluster {

/// Result of peeling a graph: coreness per vertex, the degeneracy k, and the
/// layers V_0..V_k (layers[i] = vertices of coreness exactly i, sorted).
/// The i-core is the union of layers i..k and induces a subgraph of minimum
/// degree >= i, maximal with that property.
struct CoreDecomposition {
  std::vector<VertexId> coreness;
  VertexId degeneracy_k = 0;
  std::vector<VertexSet> layers;  // indexed by rank 0..degeneracy_k
};

/// Bucket-based peeling in O(n + m). Vertices of equal degree are peeled in
/// ascending id order.
CoreDecomposition core_decomposition(const Graph& g);

/// Vertices of coreness >= i, sorted. Throws std::out_of_range unless
/// 0 <= i <= degeneracy_k.
VertexSet k_core(const Graph& g, const CoreDecomposition& decomp, VertexId i);

/// Layers ordered from the densest down: V_k, V_{k-1}, ..., V_0.
/// Empty layers are preserved.
std::vector<VertexSet> core_expansion_sequence(const CoreDecomposition& decomp);

}  // namespace corecluster
