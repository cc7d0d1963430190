#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "corecluster/clustering.hpp"
#include "corecluster/graph.hpp"

namespace corecluster {

/// Raised when an input exceeds a configured capacity (e.g. the dense
/// eigensolver limit). Callers should not retry with the same input.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpectralConfig {
  std::optional<int> rho;       // forced cluster count; empty = eigengap choice
  int max_eigen_index = 50;     // cap on eigenvalue indices examined for the gap
  int dense_solver_limit = 4000;
  int kmeans_max_iters = 100;
  int kmeans_restarts = 5;
  std::uint64_t seed = 0;
};

/// L = I - D^{-1/2} W D^{-1/2}. Rows and columns of isolated vertices are
/// entirely zero, including the diagonal. Throws CapacityError when
/// n > dense_solver_limit.
Eigen::MatrixXd normalized_laplacian(const Graph& g, int dense_solver_limit = 4000);

/// Picks the cluster count from the largest gap between consecutive
/// eigenvalues (ascending input): 1-based index i maximizing
/// lambda_{i+1} - lambda_i over i <= max_eigen_index, first maximum wins.
/// Returns 1 when fewer than two eigenvalues are given or the largest gap
/// is below 1e-8.
int eigengap_cluster_count(std::span<const double> eigenvalues, int max_eigen_index = 50);

/// k-means++ seeding followed by Lloyd iterations, best of `restarts`
/// restarts by within-cluster sum of squares. Deterministic per seed.
/// Returns one center index per row. Throws std::invalid_argument if
/// k > number of rows.
std::vector<int> kmeans_pp(const Eigen::MatrixXd& points, int k, std::uint64_t seed,
                           int max_iters = 100, int restarts = 5);

/// NJW spectral clustering: rows of the bottom-rho eigenvector matrix of the
/// normalized Laplacian, row-normalized (zero rows kept zero), clustered by
/// kmeans_pp. Graphs with n <= 2 or n < rho fall back to connected
/// components.
Clustering spectral_cluster(const Graph& g, const SpectralConfig& cfg = {});

/// Agglomerative modularity optimization: merge the connected cluster pair
/// of maximum modularity gain, return the partition of peak modularity along
/// the merge path. An edgeless graph yields singletons.
Clustering fast_greedy_modularity(const Graph& g);

/// Louvain-style optimization: local moves to the neighbor community of
/// maximum modularity gain until a fixpoint, then coarsening, repeated until
/// stable. Vertex visitation order is shuffled by the seed.
Clustering multilevel_modularity(const Graph& g, std::uint64_t seed);

/// One cluster per connected component.
Clustering components_clustering(const Graph& g);

/// Contract for any clustering routine usable as the base algorithm of the
/// core-driven framework: deterministic per (graph, seed), total over
/// nonempty graphs.
class ClusterAlgorithm {
public:
  virtual ~ClusterAlgorithm() = default;
  virtual std::string name() const = 0;
  virtual Clustering cluster(const Graph& g, std::uint64_t seed) const = 0;
};

/// Factory for the built-in algorithms: "spectral", "fastgreedy",
/// "multilevel". Throws std::invalid_argument for unknown names.
std::unique_ptr<ClusterAlgorithm> make_algorithm(const std::string& name,
                                                 const SpectralConfig& cfg = {});

}  // namespace corecluster
