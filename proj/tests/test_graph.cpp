#include <doctest.h>

#include <set>

#include "corecluster/graph.hpp"
#include "oracles.hpp"

using namespace corecluster;

namespace {

Graph triangle() { return build_graph({{0, 1}, {1, 2}, {2, 0}}); }

}  // namespace

TEST_CASE("build_graph: triangle") {
  const Graph g = triangle();
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  for (VertexId v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
}

TEST_CASE("build_graph: self-loops dropped, vertices kept") {
  const Graph g = build_graph({{5, 5}, {5, 7}});
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.self_loops_dropped() == 1);
  CHECK(g.external_id(0) == 5);
  CHECK(g.external_id(1) == 7);
}

TEST_CASE("build_graph: duplicates collapse") {
  const Graph g = build_graph({{0, 1}, {1, 0}, {0, 1}});
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.duplicates_dropped() == 2);
}

TEST_CASE("build_graph: sparse external ids compacted in order") {
  const Graph g = build_graph({{100, 3}, {3, 50}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.external_id(0) == 3);
  CHECK(g.external_id(1) == 50);
  CHECK(g.external_id(2) == 100);
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(0, 1));
  CHECK(!g.has_edge(1, 2));
}

TEST_CASE("build_graph: negative ids rejected") {
  CHECK_THROWS_AS(build_graph({{-1, 2}}), std::invalid_argument);
}

TEST_CASE("handshake identity on random graphs") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = oracles::erdos_renyi(60, 0.1, seed);
    std::int64_t total = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
    CHECK(total == 2 * g.edge_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      for (VertexId u : g.neighbors(v)) CHECK(g.has_edge(u, v));
  }
}

TEST_CASE("induced_subgraph: edge of a triangle") {
  const auto sub = induced_subgraph(triangle(), {0, 1});
  CHECK(sub.graph.vertex_count() == 2);
  CHECK(sub.graph.edge_count() == 1);
  CHECK(sub.vertices == VertexSet{0, 1});
}

TEST_CASE("induced_subgraph: full vertex set is the identity") {
  const Graph g = oracles::erdos_renyi(40, 0.15, 7);
  VertexSet all(static_cast<std::size_t>(g.vertex_count()));
  for (VertexId v = 0; v < g.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
  const auto sub = induced_subgraph(g, all);
  CHECK(sub.graph.edge_count() == g.edge_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(sub.graph.degree(v) == g.degree(v));
}

TEST_CASE("induced_subgraph: matches brute-force edge filter") {
  const Graph g = oracles::erdos_renyi(50, 0.2, 11);
  VertexSet s;
  for (VertexId v = 0; v < 50; v += 2)
    if (s.size() < 20) s.push_back(v);

  std::set<std::pair<VertexId, VertexId>> expected;
  std::set<VertexId> member(s.begin(), s.end());
  for (const auto& [u, v] : g.edges())
    if (member.count(u) && member.count(v)) expected.insert({u, v});

  const auto sub = induced_subgraph(g, s);
  std::set<std::pair<VertexId, VertexId>> actual;
  for (const auto& [u, v] : sub.graph.edges())
    actual.insert({std::min(sub.vertices[u], sub.vertices[v]), std::max(sub.vertices[u], sub.vertices[v])});
  CHECK(actual == expected);
}

TEST_CASE("induced_subgraph: invalid ids rejected") {
  CHECK_THROWS_AS(induced_subgraph(triangle(), {0, 9}), std::out_of_range);
  CHECK_THROWS_AS(induced_subgraph(triangle(), {1, 0}), std::invalid_argument);
}

TEST_CASE("local clustering coefficient: hand cases") {
  // star S5: center 0
  const Graph star = build_graph({{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  CHECK(local_clustering_coefficient(star, 0) == 0.0);
  CHECK(local_clustering_coefficient(star, 1) == 0.0);  // degree 1

  const Graph k4 = build_graph({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  for (VertexId v = 0; v < 4; ++v) CHECK(local_clustering_coefficient(k4, v) == 1.0);

  const Graph cycle = build_graph({{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  for (VertexId v = 0; v < 4; ++v) CHECK(local_clustering_coefficient(cycle, v) == 0.0);
}

TEST_CASE("global clustering coefficient: K5, path, and triple-count oracle") {
  std::vector<std::pair<VertexId, VertexId>> k5_edges;
  for (VertexId u = 0; u < 5; ++u)
    for (VertexId v = u + 1; v < 5; ++v) k5_edges.emplace_back(u, v);
  CHECK(global_clustering_coefficient(Graph::from_edges(5, k5_edges)) == 1.0);

  const Graph path = build_graph({{0, 1}, {1, 2}, {2, 3}});
  CHECK(global_clustering_coefficient(path) == 0.0);

  // independent per-vertex triangle enumeration
  const Graph g = oracles::erdos_renyi(100, 0.1, 3);
  double expected = 0.0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto nb = g.neighbors(v);
    const double d = static_cast<double>(nb.size());
    if (d <= 1.0) continue;
    std::int64_t triangles = 0;
    for (VertexId a : nb)
      for (VertexId b : nb)
        if (a < b && g.has_edge(a, b)) ++triangles;
    expected += 2.0 * static_cast<double>(triangles) / (d * (d - 1.0));
  }
  expected /= static_cast<double>(g.vertex_count());
  CHECK(global_clustering_coefficient(g) == doctest::Approx(expected).epsilon(1e-12));

  CHECK_THROWS_AS(global_clustering_coefficient(Graph{}), std::invalid_argument);
}

TEST_CASE("local coefficients stay in [0,1] and average to the global") {
  const Graph g = oracles::erdos_renyi(80, 0.08, 5);
  double sum = 0.0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const double cc = local_clustering_coefficient(g, v);
    CHECK(cc >= 0.0);
    CHECK(cc <= 1.0);
    sum += cc;
  }
  CHECK(global_clustering_coefficient(g) ==
        doctest::Approx(sum / static_cast<double>(g.vertex_count())).epsilon(1e-12));
}

TEST_CASE("connected components label by discovery order") {
  const Graph g = build_graph({{0, 1}, {2, 3}, {4, 4}});
  const auto [labels, count] = connected_components(g);
  CHECK(count == 3);  // {0,1}, {2,3}, isolated 4
  CHECK(labels[0] == labels[1]);
  CHECK(labels[2] == labels[3]);
  CHECK(labels[0] != labels[2]);
  CHECK(labels[4] == 2);
}
