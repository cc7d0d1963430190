#pragma once

#include <cstdint>
#include <vector>

#include "corecluster/clustering.hpp"
#include "corecluster/graph.hpp"

namespace corecluster {

/// Joint counts |omega_k ∩ c_j| of two partitions over the same vertex set.
struct ContingencyTable {
  std::vector<std::vector<std::int64_t>> counts;  // [predicted][truth]
  std::vector<std::int64_t> row_marginals;
  std::vector<std::int64_t> col_marginals;
  std::int64_t total = 0;
};

ContingencyTable contingency_table(const Clustering& predicted, const Clustering& truth);

/// Normalized mutual information I / ((H1 + H2) / 2), natural log,
/// 0 log 0 = 0. Returns 1.0 when both partitions are single-cluster.
/// Throws std::invalid_argument on mismatched vertex sets.
double nmi(const Clustering& predicted, const Clustering& truth);

/// phi(S) = cut(S, ~S) / min(a(S), a(~S)) with a(S) the total degree of S.
/// Throws std::invalid_argument when S is empty or the whole vertex set.
double conductance(const Graph& g, const VertexSet& s);

struct ClusterConductance {
  int cluster = 0;
  std::int64_t size = 0;
  double phi = 0.0;
  bool whole_component = false;  // zero cut; excluded from binned means
};

struct ConductanceBin {
  int bin = 0;  // floor(log_base(size))
  std::int64_t count = 0;
  std::int64_t excluded = 0;
  double mean_phi = 0.0;  // over non-excluded members; 0 when none
};

struct ConductanceReport {
  double bin_base = 2.0;
  std::vector<ClusterConductance> per_cluster;
  std::vector<ConductanceBin> bins;  // ascending bin index
};

/// Per-cluster conductance plus log-binned means over cluster sizes.
/// Clusters with zero cut (whole connected components) are flagged and left
/// out of the bin means.
ConductanceReport conductance_report(const Graph& g, const Clustering& c, double bin_base = 2.0);

/// Newman-Girvan modularity Q = sum_c (e_c/m - (d_c/2m)^2), resolution 1.
/// Throws std::invalid_argument on an edgeless graph.
double modularity(const Graph& g, const Clustering& c);

/// Cut increase when v joins cluster: |N(v)| - |N(v) ∩ cluster|.
/// Throws std::invalid_argument if v is already a member.
std::int64_t delta_cut(const Graph& g, const VertexSet& cluster, VertexId v);

}  // namespace corecluster
