#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <vector>

#include "corecluster/degeneracy.hpp"
#include "corecluster/graph.hpp"

namespace corecluster {

struct SinTheta {
  double frobenius = 0.0;
  double spectral = 0.0;
};

/// Distance between the column spaces of two orthonormal n x rho matrices:
/// the singular values of U1^T U2 are the cosines of the canonical angles;
/// returns (sqrt(rho - sum sigma^2), sqrt(1 - sigma_min^2)). Singular values
/// are clamped to [0, 1] against roundoff. Throws std::invalid_argument on a
/// shape mismatch or when a column norm deviates from 1 by more than 1e-6.
SinTheta sin_theta(const Eigen::MatrixXd& u1, const Eigen::MatrixXd& u2);

/// Perturbation audit of one core transition i -> i+1: compares the bottom
/// rho eigenspace of the i-core Laplacian restricted to the (i+1)-core
/// against the (i+1)-core's own, and evaluates the matching perturbation
/// bounds. `applicable` is false when the eigengap is nonpositive or i = 0;
/// no bound is asserted then.
struct CoreTransitionReport {
  int rank = 0;                   // i
  Eigen::Index n_next = 0;        // size of the (i+1)-core
  std::int64_t delta_edges = 0;   // edges dropped between the cores
  std::int64_t ji_entries = 0;    // changed Laplacian entries
  std::int64_t ji_edges = 0;      // union of edge neighborhoods of the dropped edges
  int rho = 1;
  double eigengap = 0.0;
  bool applicable = false;
  double measured_frobenius = 0.0;
  double measured_spectral = 0.0;
  double bound_frobenius = 0.0;
  double bound_spectral = 0.0;
};

CoreTransitionReport core_transition_report(const Graph& g, const CoreDecomposition& decomp,
                                            int rank, std::optional<int> rho = {},
                                            int dense_solver_limit = 4000);

/// Mean local clustering coefficient of every i-core, i = 0..k, computed
/// both within the induced core and in the original graph. Emits exactly
/// k + 1 points with the core index normalized to [0, 1].
struct CcProfilePoint {
  double normalized_index = 0.0;
  double mean_cc_induced = 0.0;
  double mean_cc_original = 0.0;
};

std::vector<CcProfilePoint> cc_vs_core_profile(const Graph& g, const CoreDecomposition& decomp);

/// Checks k >= gamma * sum_v C_v with gamma = d_max^(2/3) / (2n).
/// Informational: failure is a finding, not an error.
struct DegeneracyCcBound {
  VertexId degeneracy_k = 0;
  double gamma_sum_cc = 0.0;
  bool holds = false;
};

DegeneracyCcBound degeneracy_cc_bound_check(const Graph& g);

}  // namespace corecluster
