#pragma once

#include <cstdint>
#include <vector>

#include "corecluster/clustering.hpp"
#include "corecluster/graph.hpp"

namespace corecluster {

/// Planted-partition benchmark parameters: every vertex draws a target
/// degree uniformly from [min_degree, max_degree] and keeps a 1-mu fraction
/// of its stubs inside its community.
struct GeneratorParams {
  VertexId n = 0;
  int min_degree = 1;
  int max_degree = 1;
  double mu = 0.0;                        // mixing fraction in [0, 1)
  std::vector<VertexId> community_sizes;  // empty = auto sizing
  std::uint64_t seed = 0;
};

/// Equal split into max(2, round(n / 125)) communities, remainders spread
/// over the first few.
std::vector<VertexId> auto_community_sizes(VertexId n);

struct GeneratedBenchmark {
  Graph graph;
  Clustering truth;
  double realized_mu = 0.0;     // inter-community edges / m
  std::int64_t dropped_stubs = 0;
};

/// Seeded configuration-model matching with rejection of self-loops and
/// multi-edges; residual unmatched stubs are dropped and counted. Throws
/// std::invalid_argument on infeasible parameters and std::runtime_error
/// when more than 10% of the stubs cannot be matched.
GeneratedBenchmark generate(const GeneratorParams& params);

}  // namespace corecluster
