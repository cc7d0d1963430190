#include "corecluster/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace corecluster {

ContingencyTable contingency_table(const Clustering& predicted, const Clustering& truth) {
  if (predicted.assignment.size() != truth.assignment.size())
    throw std::invalid_argument("clusterings cover different vertex sets");
  ContingencyTable t;
  t.total = static_cast<std::int64_t>(predicted.assignment.size());
  t.counts.assign(static_cast<std::size_t>(predicted.cluster_count),
                  std::vector<std::int64_t>(static_cast<std::size_t>(truth.cluster_count), 0));
  t.row_marginals.assign(static_cast<std::size_t>(predicted.cluster_count), 0);
  t.col_marginals.assign(static_cast<std::size_t>(truth.cluster_count), 0);
  for (std::size_t v = 0; v < predicted.assignment.size(); ++v) {
    const int r = predicted.assignment[v];
    const int c = truth.assignment[v];
    ++t.counts[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    ++t.row_marginals[static_cast<std::size_t>(r)];
    ++t.col_marginals[static_cast<std::size_t>(c)];
  }
  return t;
}

namespace {

double entropy(const std::vector<std::int64_t>& marginals, double n) {
  double h = 0.0;
  for (std::int64_t count : marginals) {
    if (count == 0) continue;
    const double p = static_cast<double>(count) / n;
    h -= p * std::log(p);
  }
  return h;
}

}  // namespace

double nmi(const Clustering& predicted, const Clustering& truth) {
  const ContingencyTable t = contingency_table(predicted, truth);
  if (t.total == 0) throw std::invalid_argument("empty clusterings");
  const double n = static_cast<double>(t.total);

  double mutual_information = 0.0;
  for (std::size_t r = 0; r < t.counts.size(); ++r) {
    for (std::size_t c = 0; c < t.counts[r].size(); ++c) {
      const std::int64_t joint = t.counts[r][c];
      if (joint == 0) continue;
      mutual_information +=
          static_cast<double>(joint) / n *
          std::log(n * static_cast<double>(joint) /
                   (static_cast<double>(t.row_marginals[r]) * static_cast<double>(t.col_marginals[c])));
    }
  }

  const double denom = (entropy(t.row_marginals, n) + entropy(t.col_marginals, n)) / 2.0;
  if (denom == 0.0) return 1.0;  // both single-cluster: identical partitions
  const double value = mutual_information / denom;
  return std::clamp(value, 0.0, 1.0);
}

double conductance(const Graph& g, const VertexSet& s) {
  const VertexId n = g.vertex_count();
  if (s.empty()) throw std::invalid_argument("conductance of the empty set is undefined");
  if (static_cast<VertexId>(s.size()) == n)
    throw std::invalid_argument("conductance of the full vertex set is undefined");

  std::vector<bool> in_s(static_cast<std::size_t>(n), false);
  for (VertexId v : s) {
    if (v < 0 || v >= n) throw std::out_of_range("vertex id out of range");
    in_s[static_cast<std::size_t>(v)] = true;
  }

  std::int64_t cut = 0;
  std::int64_t vol_s = 0;
  for (VertexId v : s) {
    vol_s += g.degree(v);
    for (VertexId u : g.neighbors(v))
      if (!in_s[static_cast<std::size_t>(u)]) ++cut;
  }
  const std::int64_t vol_rest = 2 * g.edge_count() - vol_s;
  const std::int64_t denom = std::min(vol_s, vol_rest);
  if (denom == 0) return cut == 0 ? 0.0 : 1.0;
  return static_cast<double>(cut) / static_cast<double>(denom);
}

ConductanceReport conductance_report(const Graph& g, const Clustering& c, double bin_base) {
  if (bin_base <= 1.0) throw std::invalid_argument("bin base must exceed 1");
  validate_clustering(c);
  if (static_cast<VertexId>(c.assignment.size()) != g.vertex_count())
    throw std::invalid_argument("clustering does not cover the graph");

  ConductanceReport report;
  report.bin_base = bin_base;

  const std::vector<VertexSet> sets = clusters_of(c);
  for (int label = 0; label < c.cluster_count; ++label) {
    const VertexSet& members = sets[static_cast<std::size_t>(label)];
    ClusterConductance entry;
    entry.cluster = label;
    entry.size = static_cast<std::int64_t>(members.size());

    std::int64_t cut = 0;
    for (VertexId v : members)
      for (VertexId u : g.neighbors(v))
        if (c.assignment[static_cast<std::size_t>(u)] != label) ++cut;

    entry.whole_component = (cut == 0);
    entry.phi = (entry.whole_component || static_cast<VertexId>(members.size()) == g.vertex_count())
                    ? 0.0
                    : conductance(g, members);
    report.per_cluster.push_back(entry);
  }

  std::map<int, ConductanceBin> bins;
  for (const ClusterConductance& entry : report.per_cluster) {
    const int key = static_cast<int>(std::floor(std::log(static_cast<double>(entry.size)) / std::log(bin_base)));
    ConductanceBin& bin = bins[key];
    bin.bin = key;
    if (entry.whole_component) {
      ++bin.excluded;
    } else {
      ++bin.count;
      bin.mean_phi += entry.phi;
    }
  }
  for (auto& [key, bin] : bins) {
    if (bin.count > 0) bin.mean_phi /= static_cast<double>(bin.count);
    report.bins.push_back(bin);
  }
  return report;
}

double modularity(const Graph& g, const Clustering& c) {
  if (g.edge_count() == 0) throw std::invalid_argument("modularity of an edgeless graph is undefined");
  if (static_cast<VertexId>(c.assignment.size()) != g.vertex_count())
    throw std::invalid_argument("clustering does not cover the graph");

  const double m = static_cast<double>(g.edge_count());
  std::vector<std::int64_t> intra(static_cast<std::size_t>(c.cluster_count), 0);
  std::vector<std::int64_t> degree_sum(static_cast<std::size_t>(c.cluster_count), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const int label = c.assignment[static_cast<std::size_t>(v)];
    degree_sum[static_cast<std::size_t>(label)] += g.degree(v);
    for (VertexId u : g.neighbors(v))
      if (v < u && c.assignment[static_cast<std::size_t>(u)] == label)
        ++intra[static_cast<std::size_t>(label)];
  }

  double q = 0.0;
  for (int label = 0; label < c.cluster_count; ++label) {
    const double e = static_cast<double>(intra[static_cast<std::size_t>(label)]) / m;
    const double d = static_cast<double>(degree_sum[static_cast<std::size_t>(label)]) / (2.0 * m);
    q += e - d * d;
  }
  return q;
}

std::int64_t delta_cut(const Graph& g, const VertexSet& cluster, VertexId v) {
  if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex id out of range");
  if (std::binary_search(cluster.begin(), cluster.end(), v))
    throw std::invalid_argument("vertex is already a member of the cluster");
  std::int64_t overlap = 0;
  for (VertexId u : g.neighbors(v))
    if (std::binary_search(cluster.begin(), cluster.end(), u)) ++overlap;
  return static_cast<std::int64_t>(g.degree(v)) - overlap;
}

}  // namespace corecluster
