#include "corecluster/benchgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace corecluster {

std::vector<VertexId> auto_community_sizes(VertexId n) {
  const VertexId count = std::max<VertexId>(2, static_cast<VertexId>(std::llround(n / 125.0)));
  std::vector<VertexId> sizes(static_cast<std::size_t>(count), n / count);
  for (VertexId r = 0; r < n % count; ++r) ++sizes[static_cast<std::size_t>(r)];
  return sizes;
}

namespace {

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (~bound + 1) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

template <typename T>
void shuffle_stubs(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[static_cast<std::size_t>(bounded(rng, i))]);
}

// Pairs stubs into simple edges over several reshuffle rounds; leftovers
// that keep colliding (self pairs, existing edges, same-community pairs when
// cross_only) are dropped.
std::int64_t match_stubs(std::vector<VertexId> stubs, std::mt19937_64& rng,
                         const std::vector<int>& community, bool cross_only,
                         std::set<std::pair<VertexId, VertexId>>& edges) {
  constexpr int kMaxRounds = 40;
  for (int round = 0; round < kMaxRounds && stubs.size() >= 2; ++round) {
    shuffle_stubs(stubs, rng);
    std::vector<VertexId> leftover;
    if (stubs.size() % 2 == 1) {
      leftover.push_back(stubs.back());
      stubs.pop_back();
    }
    bool progress = false;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      VertexId u = stubs[i], v = stubs[i + 1];
      if (u == v || (cross_only && community[static_cast<std::size_t>(u)] == community[static_cast<std::size_t>(v)])) {
        leftover.push_back(u);
        leftover.push_back(v);
        continue;
      }
      if (u > v) std::swap(u, v);
      if (!edges.insert({u, v}).second) {
        leftover.push_back(u);
        leftover.push_back(v);
        continue;
      }
      progress = true;
    }
    stubs = std::move(leftover);
    if (!progress) break;
  }
  return static_cast<std::int64_t>(stubs.size());
}

}  // namespace

GeneratedBenchmark generate(const GeneratorParams& params) {
  const VertexId n = params.n;
  if (n < 2) throw std::invalid_argument("generator needs at least 2 vertices");
  if (params.min_degree < 1 || params.min_degree > params.max_degree || params.max_degree >= n)
    throw std::invalid_argument("degree bounds must satisfy 1 <= min <= max < n");
  if (params.mu < 0.0 || params.mu >= 1.0) throw std::invalid_argument("mu must lie in [0, 1)");

  std::vector<VertexId> sizes = params.community_sizes.empty() ? auto_community_sizes(n) : params.community_sizes;
  const VertexId total = std::accumulate(sizes.begin(), sizes.end(), VertexId{0});
  if (total != n) throw std::invalid_argument("community sizes must sum to n");
  for (VertexId size : sizes) {
    if (size <= 0) throw std::invalid_argument("community sizes must be positive");
    if (static_cast<double>(size) <= static_cast<double>(params.max_degree) * (1.0 - params.mu))
      throw std::invalid_argument("infeasible: community of size " + std::to_string(size) +
                                  " cannot host internal degree up to " +
                                  std::to_string(params.max_degree * (1.0 - params.mu)));
  }

  std::vector<int> community(static_cast<std::size_t>(n));
  {
    VertexId v = 0;
    for (std::size_t c = 0; c < sizes.size(); ++c)
      for (VertexId j = 0; j < sizes[c]; ++j) community[static_cast<std::size_t>(v++)] = static_cast<int>(c);
  }

  std::mt19937_64 rng(params.seed);
  const std::uint64_t span = static_cast<std::uint64_t>(params.max_degree - params.min_degree) + 1;

  std::vector<std::vector<VertexId>> internal_stubs(sizes.size());
  std::vector<VertexId> external_stubs;
  std::int64_t total_stubs = 0;
  for (VertexId v = 0; v < n; ++v) {
    const int degree = params.min_degree + static_cast<int>(bounded(rng, span));
    const int internal = static_cast<int>(std::ceil((1.0 - params.mu) * degree));
    total_stubs += degree;
    for (int s = 0; s < internal; ++s)
      internal_stubs[static_cast<std::size_t>(community[static_cast<std::size_t>(v)])].push_back(v);
    for (int s = internal; s < degree; ++s) external_stubs.push_back(v);
  }

  std::set<std::pair<VertexId, VertexId>> edges;
  std::int64_t dropped = 0;
  for (auto& stubs : internal_stubs) dropped += match_stubs(std::move(stubs), rng, community, false, edges);
  dropped += match_stubs(std::move(external_stubs), rng, community, true, edges);

  if (dropped * 10 > total_stubs)
    throw std::runtime_error("stub matching failed: " + std::to_string(dropped) + " of " +
                             std::to_string(total_stubs) +
                             " stubs unmatched; the degree bounds are too dense for the community sizes");

  std::vector<std::pair<VertexId, VertexId>> edge_list(edges.begin(), edges.end());
  std::int64_t inter = 0;
  for (const auto& [u, v] : edge_list)
    if (community[static_cast<std::size_t>(u)] != community[static_cast<std::size_t>(v)]) ++inter;

  GeneratedBenchmark out;
  out.graph = Graph::from_edges(n, edge_list);
  out.truth.assignment = community;
  out.truth.cluster_count = static_cast<int>(sizes.size());
  out.dropped_stubs = dropped;
  out.realized_mu = edge_list.empty() ? 0.0 : static_cast<double>(inter) / static_cast<double>(edge_list.size());
  return out;
}

}  // namespace corecluster
