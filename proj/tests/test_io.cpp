#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "corecluster/io.hpp"

using namespace corecluster;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const std::filesystem::path path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::trunc);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("read_edge_list: plain, comments, blanks") {
  std::istringstream in("0 1\n1 2\n");
  const Graph g = read_edge_list(in, "test");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);

  std::istringstream commented("# comment\n\n3 7\n");
  const Graph h = read_edge_list(commented, "test");
  CHECK(h.vertex_count() == 2);
  CHECK(h.edge_count() == 1);
  CHECK(h.external_id(0) == 3);
  CHECK(h.external_id(1) == 7);
}

TEST_CASE("read_edge_list: dirty input is cleaned with counts") {
  std::istringstream in("0 1\n1 0\n2 2\n1 2\n");
  const Graph g = read_edge_list(in, "test");
  CHECK(g.edge_count() == 2);
  CHECK(g.self_loops_dropped() == 1);
  CHECK(g.duplicates_dropped() == 1);
}

TEST_CASE("read_edge_list: parse errors carry the line number") {
  std::istringstream in("0 1\nfoo bar\n");
  try {
    read_edge_list(in, "input.edges");
    FAIL("expected a parse error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("input.edges:2") != std::string::npos);
  }

  std::istringstream trailing("0 1 9\n");
  CHECK_THROWS_AS(read_edge_list(trailing, "t"), std::runtime_error);
  std::istringstream negative("0 -1\n");
  CHECK_THROWS_AS(read_edge_list(negative, "t"), std::runtime_error);
}

TEST_CASE("read_edge_list: empty file yields the empty graph") {
  std::istringstream in("");
  CHECK(read_edge_list(in, "t").vertex_count() == 0);
}

TEST_CASE("clustering files: exact bytes and round trip") {
  const Graph g = build_graph({{0, 1}, {1, 2}});
  Clustering c;
  c.assignment = {0, 0, 1};
  c.cluster_count = 2;
  CHECK(format_clustering(g, c) == "0\t0\n1\t0\n2\t1\n");

  const auto path = temp_file("corecluster_io_roundtrip.tsv", "");
  write_clustering(path.string(), g, c);
  const LabeledClustering file = read_clustering_file(path.string());
  const Clustering back = clustering_for_graph(file, g);
  CHECK(back.assignment == c.assignment);
  CHECK(back.cluster_count == c.cluster_count);
  std::filesystem::remove(path);
}

TEST_CASE("clustering_for_graph: unknown and conflicting vertices") {
  const Graph g = build_graph({{0, 1}});
  LabeledClustering file;
  file.vertices = {0, 1, 9};
  file.labels = {0, 1, 0};
  CHECK_THROWS_AS(clustering_for_graph(file, g), std::runtime_error);

  file.vertices = {0, 1, 0};
  file.labels = {0, 1, 1};
  CHECK_THROWS_AS(clustering_for_graph(file, g), std::runtime_error);

  file.vertices = {0};
  file.labels = {0};
  CHECK_THROWS_AS(clustering_for_graph(file, g), std::runtime_error);  // 1 unlabeled
}

TEST_CASE("align_clusterings: matching and mismatched vertex sets") {
  LabeledClustering a, b;
  a.vertices = {10, 20, 30};
  a.labels = {0, 0, 1};
  b.vertices = {30, 10, 20};  // order differs, set matches
  b.labels = {5, 7, 7};
  const auto [ca, cb] = align_clusterings(a, b);
  CHECK(ca.assignment == std::vector<int>{0, 0, 1});
  CHECK(cb.assignment == std::vector<int>{0, 0, 1});  // compacted in vertex order

  b.vertices = {10, 20, 40};
  CHECK_THROWS_AS(align_clusterings(a, b), std::runtime_error);
}

TEST_CASE("atomic_write_file leaves no temp file behind") {
  const auto path = std::filesystem::temp_directory_path() / "corecluster_io_atomic.txt";
  atomic_write_file(path.string(), "payload\n");
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == "payload\n");
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  std::filesystem::remove(path);
}

TEST_CASE("harness_threads defaults to one") { CHECK(harness_threads() >= 1); }
