#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "corecluster/analysis.hpp"
#include "corecluster/benchgen.hpp"
#include "oracles.hpp"

using namespace corecluster;

namespace {

Eigen::MatrixXd random_orthonormal(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = gauss(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  return qr.householderQ() * Eigen::MatrixXd::Identity(rows, cols);
}

Graph complete_graph(VertexId n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("sin_theta: identical and orthogonal subspaces") {
  const Eigen::MatrixXd u = random_orthonormal(8, 3, 1);
  const SinTheta same = sin_theta(u, u);
  CHECK(same.frobenius == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(same.spectral == doctest::Approx(0.0).epsilon(1e-9));

  Eigen::MatrixXd e1 = Eigen::MatrixXd::Zero(4, 1);
  Eigen::MatrixXd e2 = Eigen::MatrixXd::Zero(4, 1);
  e1(0, 0) = 1.0;
  e2(1, 0) = 1.0;
  const SinTheta perp = sin_theta(e1, e2);
  CHECK(perp.frobenius == doctest::Approx(1.0));
  CHECK(perp.spectral == doctest::Approx(1.0));
}

TEST_CASE("sin_theta: rotations of a shared subspace are at distance zero") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Eigen::MatrixXd u1 = random_orthonormal(12, 4, seed);
    const Eigen::MatrixXd rotation = random_orthonormal(4, 4, 100 + seed);
    const Eigen::MatrixXd u2 = u1 * rotation;
    const SinTheta st = sin_theta(u1, u2);
    CHECK(st.frobenius <= 1e-9);
    CHECK(st.spectral <= 1e-9);
  }
}

TEST_CASE("sin_theta: symmetry and norm ordering") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Eigen::MatrixXd u1 = random_orthonormal(10, 3, 2 * seed);
    const Eigen::MatrixXd u2 = random_orthonormal(10, 3, 2 * seed + 1);
    const SinTheta ab = sin_theta(u1, u2);
    const SinTheta ba = sin_theta(u2, u1);
    CHECK(ab.frobenius == doctest::Approx(ba.frobenius));
    CHECK(ab.spectral == doctest::Approx(ba.spectral));
    CHECK(ab.spectral <= 1.0 + 1e-12);
    CHECK(ab.spectral <= ab.frobenius + 1e-12);
    CHECK(ab.frobenius <= std::sqrt(3.0) + 1e-12);
  }
}

TEST_CASE("sin_theta: shape and orthonormality violations") {
  const Eigen::MatrixXd a = random_orthonormal(6, 2, 3);
  const Eigen::MatrixXd b = random_orthonormal(6, 3, 4);
  CHECK_THROWS_AS(sin_theta(a, b), std::invalid_argument);
  CHECK_THROWS_AS(sin_theta(a, Eigen::MatrixXd(a * 2.0)), std::invalid_argument);
}

TEST_CASE("core_transition_report: an empty layer leaves the eigenspace unchanged") {
  // two cliques of different order: ranks between them give identical cores
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < 7; ++u)
    for (VertexId v = u + 1; v < 7; ++v) edges.emplace_back(u, v);
  for (VertexId u = 7; u < 11; ++u)
    for (VertexId v = u + 1; v < 11; ++v) edges.emplace_back(u, v);
  const Graph g = Graph::from_edges(11, edges);
  const CoreDecomposition decomp = core_decomposition(g);
  REQUIRE(decomp.degeneracy_k == 6);

  // the 4-core and the 5-core are both exactly the K7
  const CoreTransitionReport report = core_transition_report(g, decomp, 4);
  CHECK(report.delta_edges == 0);
  CHECK(report.ji_entries == 0);
  CHECK(report.measured_frobenius <= 1e-8);
  CHECK(report.measured_spectral <= 1e-8);
  if (report.applicable) {
    CHECK(report.measured_frobenius <= report.bound_frobenius + 1e-12);
    CHECK(report.measured_spectral <= report.bound_spectral + 1e-12);
  }
}

TEST_CASE("core_transition_report: rank 0 is never applicable") {
  const Graph g = build_graph({{0, 1}, {1, 2}, {2, 0}, {3, 0}});
  const CoreDecomposition decomp = core_decomposition(g);
  REQUIRE(decomp.degeneracy_k == 2);
  const CoreTransitionReport report = core_transition_report(g, decomp, 0);
  CHECK_FALSE(report.applicable);
  CHECK_THROWS_AS(core_transition_report(g, decomp, 2), std::out_of_range);
  CHECK_THROWS_AS(core_transition_report(g, decomp, -1), std::out_of_range);
}

TEST_CASE("core_transition_report: bounds hold across planted graphs") {
  int applicable = 0, violations = 0;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    GeneratorParams params;
    params.n = 150;
    params.min_degree = 4;
    params.max_degree = 10;
    params.mu = 0.1;
    params.community_sizes = {50, 50, 50};
    params.seed = seed;
    const GeneratedBenchmark bench = generate(params);
    const CoreDecomposition decomp = core_decomposition(bench.graph);
    for (int rank = 1; rank + 1 <= decomp.degeneracy_k; ++rank) {
      const CoreTransitionReport report = core_transition_report(bench.graph, decomp, rank);
      if (report.delta_edges == 0) {
        CHECK(report.measured_frobenius <= 1e-8);
        CHECK(report.measured_spectral <= 1e-8);
      }
      if (!report.applicable) continue;
      ++applicable;
      if (report.measured_frobenius > report.bound_frobenius ||
          report.measured_spectral > report.bound_spectral)
        ++violations;  // a finding, not a failure: in-core degrees may exceed k
    }
  }
  CHECK(applicable > 0);
  INFO("bound findings: ", violations, " of ", applicable);
}

TEST_CASE("cc_vs_core_profile: cliques, stars, and the rising trend") {
  const Graph k6 = complete_graph(6);
  const auto clique_profile = cc_vs_core_profile(k6, core_decomposition(k6));
  REQUIRE(clique_profile.size() == 6);  // k + 1 points
  for (const auto& point : clique_profile) {
    CHECK(point.mean_cc_induced == doctest::Approx(1.0));
    CHECK(point.mean_cc_original == doctest::Approx(1.0));
  }
  CHECK(clique_profile.back().normalized_index == doctest::Approx(1.0));

  const Graph star = build_graph({{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  const auto star_profile = cc_vs_core_profile(star, core_decomposition(star));
  REQUIRE(star_profile.size() == 2);
  for (const auto& point : star_profile) {
    CHECK(point.mean_cc_induced == 0.0);
    CHECK(point.mean_cc_original == 0.0);
  }

  const Graph edgeless = Graph::from_edges(3, {});
  CHECK_THROWS_AS(cc_vs_core_profile(edgeless, core_decomposition(edgeless)), std::invalid_argument);

  GeneratorParams params;
  params.n = 200;
  params.min_degree = 5;
  params.max_degree = 25;
  params.mu = 0.05;
  params.community_sizes = {50, 50, 50, 50};
  params.seed = 3;
  const GeneratedBenchmark bench = generate(params);
  const auto profile = cc_vs_core_profile(bench.graph, core_decomposition(bench.graph));
  CHECK(profile.back().mean_cc_induced >= profile.front().mean_cc_induced);
  for (std::size_t i = 0; i < profile.size(); ++i) {
    CHECK(profile[i].normalized_index >= 0.0);
    CHECK(profile[i].normalized_index <= 1.0);
    if (i > 0) CHECK(profile[i].normalized_index > profile[i - 1].normalized_index);
  }
}

TEST_CASE("degeneracy_cc_bound_check: K10, star, preferential attachment") {
  const DegeneracyCcBound k10 = degeneracy_cc_bound_check(complete_graph(10));
  CHECK(k10.degeneracy_k == 9);
  CHECK(k10.gamma_sum_cc == doctest::Approx(std::pow(9.0, 2.0 / 3.0) / 2.0));  // ~2.163
  CHECK(k10.holds);

  const Graph star = build_graph({{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  const DegeneracyCcBound s = degeneracy_cc_bound_check(star);
  CHECK(s.gamma_sum_cc == 0.0);
  CHECK(s.holds);

  const Graph pa = oracles::preferential_attachment(500, 3, 11);
  const DegeneracyCcBound heavy = degeneracy_cc_bound_check(pa);
  CHECK(heavy.holds);
}
