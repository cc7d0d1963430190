#include "corecluster/analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "corecluster/cluster_algos.hpp"

namespace corecluster {

SinTheta sin_theta(const Eigen::MatrixXd& u1, const Eigen::MatrixXd& u2) {
  if (u1.rows() != u2.rows() || u1.cols() != u2.cols())
    throw std::invalid_argument("subspace bases must share a shape");
  if (u1.cols() == 0 || u1.rows() < u1.cols())
    throw std::invalid_argument("bases must be n x rho with rho in [1, n]");
  for (Eigen::Index c = 0; c < u1.cols(); ++c) {
    if (std::abs(u1.col(c).norm() - 1.0) > 1e-6 || std::abs(u2.col(c).norm() - 1.0) > 1e-6)
      throw std::invalid_argument("basis columns must be unit length");
  }

  // The singular values of (I - U1 U1^T) U2 are the sines of the canonical
  // angles directly. Going through the cosines (SVD of U1^T U2) squares away
  // half the precision near angle zero and cannot certify the <= 1e-8
  // trivial-perturbation regime.
  const Eigen::MatrixXd residual = u2 - u1 * (u1.transpose() * u2);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(residual);
  Eigen::VectorXd sigma = svd.singularValues();
  for (Eigen::Index i = 0; i < sigma.size(); ++i) sigma[i] = std::clamp(sigma[i], 0.0, 1.0);

  SinTheta result;
  result.frobenius = sigma.norm();
  result.spectral = sigma[0];  // singular values come largest first
  return result;
}

CoreTransitionReport core_transition_report(const Graph& g, const CoreDecomposition& decomp,
                                            int rank, std::optional<int> rho_opt,
                                            int dense_solver_limit) {
  if (rank < 0 || rank + 1 > decomp.degeneracy_k)
    throw std::out_of_range("transition rank out of range");

  const VertexSet core_i = k_core(g, decomp, rank);
  const VertexSet core_next = k_core(g, decomp, rank + 1);
  if (core_next.empty()) throw std::invalid_argument("empty core");

  const InducedSubgraph sub_i = induced_subgraph(g, core_i);
  const InducedSubgraph sub_next = induced_subgraph(g, core_next);

  const Eigen::MatrixXd lap_i = normalized_laplacian(sub_i.graph, dense_solver_limit);
  const Eigen::MatrixXd lap_next = normalized_laplacian(sub_next.graph, dense_solver_limit);

  // rows/cols of the (i+1)-core inside the i-core Laplacian; both cores are
  // sorted so the (i+1)-core is a subsequence of the i-core
  std::vector<Eigen::Index> positions;
  positions.reserve(core_next.size());
  {
    std::size_t j = 0;
    for (std::size_t idx = 0; idx < core_i.size(); ++idx) {
      if (j < core_next.size() && core_i[idx] == core_next[j]) {
        positions.push_back(static_cast<Eigen::Index>(idx));
        ++j;
      }
    }
    if (j != core_next.size()) throw std::logic_error("core nesting violated");
  }

  const Eigen::Index n_next = static_cast<Eigen::Index>(core_next.size());
  Eigen::MatrixXd lap_hat(n_next, n_next);
  for (Eigen::Index r = 0; r < n_next; ++r)
    for (Eigen::Index c = 0; c < n_next; ++c) lap_hat(r, c) = lap_i(positions[r], positions[c]);

  CoreTransitionReport report;
  report.rank = rank;
  report.n_next = n_next;

  // edges dropped in the transition: i-core edges with exactly one endpoint
  // in the (i+1)-core
  std::vector<std::pair<VertexId, VertexId>> dropped;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (decomp.coreness[v] < rank) continue;
    for (VertexId u : g.neighbors(v)) {
      if (v >= u || decomp.coreness[u] < rank) continue;
      const bool v_in = decomp.coreness[v] >= rank + 1;
      const bool u_in = decomp.coreness[u] >= rank + 1;
      if (v_in != u_in) dropped.emplace_back(v, u);
    }
  }
  report.delta_edges = static_cast<std::int64_t>(dropped.size());

  // literal reading: the union of edge neighborhoods (via either endpoint,
  // the dropped edge included) within the i-core
  {
    std::set<std::pair<VertexId, VertexId>> touched;
    auto add_incident = [&](VertexId x) {
      for (VertexId w : g.neighbors(x))
        if (decomp.coreness[w] >= rank)
          touched.insert({std::min(x, w), std::max(x, w)});
    };
    for (const auto& [x, y] : dropped) {
      add_incident(x);
      add_incident(y);
    }
    report.ji_edges = static_cast<std::int64_t>(touched.size());
  }

  const Eigen::MatrixXd delta = lap_hat - lap_next;
  std::int64_t changed_entries = 0;
  for (Eigen::Index r = 0; r < n_next; ++r)
    for (Eigen::Index c = 0; c < n_next; ++c)
      if (std::abs(delta(r, c)) > 1e-15) ++changed_entries;
  report.ji_entries = changed_entries;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver_hat(lap_hat);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver_next(lap_next);
  if (solver_hat.info() != Eigen::Success || solver_next.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed");

  int rho;
  if (rho_opt.has_value()) {
    rho = *rho_opt;
    if (rho < 1 || rho > static_cast<int>(n_next))
      throw std::invalid_argument("rho out of range for this transition");
  } else {
    const Eigen::VectorXd& values = solver_next.eigenvalues();
    rho = eigengap_cluster_count({values.data(), static_cast<std::size_t>(values.size())});
  }
  report.rho = rho;

  const SinTheta measured = sin_theta(solver_hat.eigenvectors().leftCols(rho),
                                      solver_next.eigenvectors().leftCols(rho));
  report.measured_frobenius = measured.frobenius;
  report.measured_spectral = measured.spectral;

  if (rho < static_cast<int>(n_next))
    report.eigengap = solver_next.eigenvalues()[rho] - solver_hat.eigenvalues()[rho - 1];

  const int k = decomp.degeneracy_k;
  report.applicable = rank >= 1 && rho < static_cast<int>(n_next) && report.eigengap > 0.0;
  if (report.applicable) {
    const double scale = static_cast<double>(k - rank) /
                         (static_cast<double>(rank) * static_cast<double>(k) * report.eigengap);
    report.bound_frobenius = std::sqrt(static_cast<double>(report.ji_entries)) * scale;
    report.bound_spectral = std::sqrt(static_cast<double>(n_next)) * scale;
  }
  return report;
}

std::vector<CcProfilePoint> cc_vs_core_profile(const Graph& g, const CoreDecomposition& decomp) {
  const VertexId k = decomp.degeneracy_k;
  if (k < 1) throw std::invalid_argument("profile requires degeneracy >= 1");

  std::vector<CcProfilePoint> profile;
  profile.reserve(static_cast<std::size_t>(k) + 1);
  for (VertexId i = 0; i <= k; ++i) {
    const VertexSet core = k_core(g, decomp, i);
    const InducedSubgraph sub = induced_subgraph(g, core);

    CcProfilePoint point;
    point.normalized_index = static_cast<double>(i) / static_cast<double>(k);
    double induced = 0.0, original = 0.0;
    for (std::size_t idx = 0; idx < core.size(); ++idx) {
      induced += local_clustering_coefficient(sub.graph, static_cast<VertexId>(idx));
      original += local_clustering_coefficient(g, core[idx]);
    }
    if (!core.empty()) {
      induced /= static_cast<double>(core.size());
      original /= static_cast<double>(core.size());
    }
    point.mean_cc_induced = induced;
    point.mean_cc_original = original;
    profile.push_back(point);
  }
  return profile;
}

DegeneracyCcBound degeneracy_cc_bound_check(const Graph& g) {
  const VertexId n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("empty graph");

  VertexId d_max = 0;
  for (VertexId v = 0; v < n; ++v) d_max = std::max(d_max, g.degree(v));

  double sum_cc = 0.0;
  for (VertexId v = 0; v < n; ++v) sum_cc += local_clustering_coefficient(g, v);

  DegeneracyCcBound result;
  result.degeneracy_k = core_decomposition(g).degeneracy_k;
  const double gamma = std::pow(static_cast<double>(d_max), 2.0 / 3.0) / (2.0 * static_cast<double>(n));
  result.gamma_sum_cc = gamma * sum_cc;
  result.holds = static_cast<double>(result.degeneracy_k) >= result.gamma_sum_cc;
  return result;
}

}  // namespace corecluster
