#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "corecluster/cluster_algos.hpp"

namespace corecluster {

Eigen::MatrixXd normalized_laplacian(const Graph& g, int dense_solver_limit) {
  const VertexId n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("normalized Laplacian of the empty graph is undefined");
  if (n > dense_solver_limit)
    throw CapacityError("graph exceeds the dense eigensolver limit (" +
                        std::to_string(n) + " > " + std::to_string(dense_solver_limit) + " vertices)");

  Eigen::VectorXd inv_sqrt_deg(n);
  for (VertexId v = 0; v < n; ++v) {
    const VertexId d = g.degree(v);
    inv_sqrt_deg[v] = d > 0 ? 1.0 / std::sqrt(static_cast<double>(d)) : 0.0;
  }

  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) > 0) lap(v, v) = 1.0;
    for (VertexId u : g.neighbors(v)) lap(v, u) = -inv_sqrt_deg[v] * inv_sqrt_deg[u];
  }
  return lap;
}

int eigengap_cluster_count(std::span<const double> eigenvalues, int max_eigen_index) {
  if (eigenvalues.size() < 2) return 1;
  const int last = std::min<int>(static_cast<int>(eigenvalues.size()) - 1, max_eigen_index);
  int best_index = 1;
  double best_gap = -1.0;
  for (int i = 1; i <= last; ++i) {
    const double gap = eigenvalues[i] - eigenvalues[i - 1];
    if (gap > best_gap) {
      best_gap = gap;
      best_index = i;
    }
  }
  return best_gap < 1e-8 ? 1 : best_index;
}

namespace {

// Lemire-style bounded draw; avoids distribution implementation differences.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

struct KmeansRun {
  std::vector<int> labels;
  double wcss = std::numeric_limits<double>::infinity();
};

KmeansRun lloyd_once(const Eigen::MatrixXd& points, int k, std::mt19937_64& rng, int max_iters) {
  const Eigen::Index n = points.rows();

  // k-means++ seeding: first center uniform, the rest proportional to the
  // squared distance to the nearest chosen center.
  Eigen::MatrixXd centers(k, points.cols());
  Eigen::VectorXd dist2 = Eigen::VectorXd::Constant(n, std::numeric_limits<double>::infinity());
  std::vector<bool> chosen(static_cast<std::size_t>(n), false);
  Eigen::Index first = static_cast<Eigen::Index>(bounded(rng, static_cast<std::uint64_t>(n)));
  centers.row(0) = points.row(first);
  chosen[static_cast<std::size_t>(first)] = true;
  for (int c = 1; c < k; ++c) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double d = (points.row(i) - centers.row(c - 1)).squaredNorm();
      if (d < dist2[i]) dist2[i] = d;
    }
    const double total = dist2.sum();
    Eigen::Index pick = -1;
    if (total > 0.0) {
      const double target = std::ldexp(static_cast<double>(rng() >> 11), -53) * total;
      double acc = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        acc += dist2[i];
        if (acc >= target) {
          pick = i;
          break;
        }
      }
      if (pick < 0) pick = n - 1;
    } else {
      // all remaining points coincide with a center; take the first unchosen
      for (Eigen::Index i = 0; i < n; ++i)
        if (!chosen[static_cast<std::size_t>(i)]) {
          pick = i;
          break;
        }
      if (pick < 0) pick = static_cast<Eigen::Index>(bounded(rng, static_cast<std::uint64_t>(n)));
    }
    centers.row(c) = points.row(pick);
    chosen[static_cast<std::size_t>(pick)] = true;
  }

  KmeansRun run;
  run.labels.assign(static_cast<std::size_t>(n), 0);
  std::vector<int> counts(static_cast<std::size_t>(k), 0);
  for (int iter = 0; iter < max_iters; ++iter) {
    bool changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      int best = 0;
      double best_d = (points.row(i) - centers.row(0)).squaredNorm();
      for (int c = 1; c < k; ++c) {
        const double d = (points.row(i) - centers.row(c)).squaredNorm();
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      if (run.labels[static_cast<std::size_t>(i)] != best) {
        run.labels[static_cast<std::size_t>(i)] = best;
        changed = true;
      }
    }
    if (!changed && iter > 0) break;

    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, points.cols());
    std::fill(counts.begin(), counts.end(), 0);
    for (Eigen::Index i = 0; i < n; ++i) {
      sums.row(run.labels[static_cast<std::size_t>(i)]) += points.row(i);
      ++counts[static_cast<std::size_t>(run.labels[static_cast<std::size_t>(i)])];
    }
    for (int c = 0; c < k; ++c)  // emptied centers keep their previous position
      if (counts[static_cast<std::size_t>(c)] > 0)
        centers.row(c) = sums.row(c) / static_cast<double>(counts[static_cast<std::size_t>(c)]);
  }

  run.wcss = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    run.wcss += (points.row(i) - centers.row(run.labels[static_cast<std::size_t>(i)])).squaredNorm();
  return run;
}

}  // namespace

std::vector<int> kmeans_pp(const Eigen::MatrixXd& points, int k, std::uint64_t seed,
                           int max_iters, int restarts) {
  const Eigen::Index n = points.rows();
  if (k <= 0) throw std::invalid_argument("cluster count must be positive");
  if (k > n) throw std::invalid_argument("cluster count exceeds point count");
  if (k == n) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = static_cast<int>(i);
    return labels;
  }

  KmeansRun best;
  for (int r = 0; r < std::max(restarts, 1); ++r) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(r) * 0x9e3779b97f4a7c15ULL);
    KmeansRun run = lloyd_once(points, k, rng, max_iters);
    if (run.wcss < best.wcss) best = std::move(run);
  }
  return best.labels;
}

Clustering components_clustering(const Graph& g) {
  auto [labels, count] = connected_components(g);
  Clustering c;
  c.assignment = std::move(labels);
  c.cluster_count = count;
  return c;
}

Clustering spectral_cluster(const Graph& g, const SpectralConfig& cfg) {
  const VertexId n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("cannot cluster the empty graph");

  const Eigen::MatrixXd lap = normalized_laplacian(g, cfg.dense_solver_limit);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  const Eigen::VectorXd& values = solver.eigenvalues();  // ascending

  int rho;
  if (cfg.rho.has_value()) {
    rho = *cfg.rho;
    if (rho < 1) throw std::invalid_argument("forced cluster count must be positive");
  } else {
    rho = eigengap_cluster_count({values.data(), static_cast<std::size_t>(values.size())},
                                 cfg.max_eigen_index);
  }

  // k-means degenerates on tiny inputs; components are the honest answer.
  if (n <= 2 || n < rho) return components_clustering(g);

  Eigen::MatrixXd embedding = solver.eigenvectors().leftCols(rho);
  for (Eigen::Index i = 0; i < embedding.rows(); ++i) {
    const double norm = embedding.row(i).norm();
    if (norm > 0.0) embedding.row(i) /= norm;
  }

  const std::vector<int> labels =
      kmeans_pp(embedding, rho, cfg.seed, cfg.kmeans_max_iters, cfg.kmeans_restarts);
  Clustering result = compact_labels(labels);
  validate_clustering(result);
  return result;
}

namespace {

struct SpectralAlgorithm final : ClusterAlgorithm {
  SpectralConfig cfg;
  explicit SpectralAlgorithm(SpectralConfig c) : cfg(c) {}
  std::string name() const override { return "spectral"; }
  Clustering cluster(const Graph& g, std::uint64_t seed) const override {
    SpectralConfig local = cfg;
    local.seed = seed;
    return spectral_cluster(g, local);
  }
};

struct FastGreedyAlgorithm final : ClusterAlgorithm {
  std::string name() const override { return "fastgreedy"; }
  Clustering cluster(const Graph& g, std::uint64_t) const override {
    return fast_greedy_modularity(g);
  }
};

struct MultilevelAlgorithm final : ClusterAlgorithm {
  std::string name() const override { return "multilevel"; }
  Clustering cluster(const Graph& g, std::uint64_t seed) const override {
    return multilevel_modularity(g, seed);
  }
};

}  // namespace

std::unique_ptr<ClusterAlgorithm> make_algorithm(const std::string& name, const SpectralConfig& cfg) {
  if (name == "spectral") return std::make_unique<SpectralAlgorithm>(cfg);
  if (name == "fastgreedy") return std::make_unique<FastGreedyAlgorithm>();
  if (name == "multilevel") return std::make_unique<MultilevelAlgorithm>();
  throw std::invalid_argument("unknown algorithm: " + name);
}

}  // namespace corecluster
