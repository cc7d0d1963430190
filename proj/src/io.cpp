#include "corecluster/io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace corecluster {

namespace {

bool is_blank_or_comment(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

[[noreturn]] void parse_error(const std::string& name, std::size_t line_number, const std::string& what) {
  throw std::runtime_error(name + ":" + std::to_string(line_number) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in, const std::string& name) {
  std::vector<std::pair<ExternalId, ExternalId>> edges;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (is_blank_or_comment(line)) continue;
    std::istringstream fields(line);
    ExternalId u, v;
    if (!(fields >> u >> v)) parse_error(name, line_number, "expected two integer vertex ids");
    if (u < 0 || v < 0) parse_error(name, line_number, "vertex ids must be non-negative");
    std::string extra;
    if (fields >> extra) parse_error(name, line_number, "unexpected trailing token '" + extra + "'");
    edges.emplace_back(u, v);
  }
  return build_graph(edges);
}

Graph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in, path);
}

LabeledClustering read_clustering_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);

  LabeledClustering out;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (is_blank_or_comment(line)) continue;
    std::istringstream fields(line);
    ExternalId vertex;
    long long label;
    if (!(fields >> vertex >> label)) parse_error(path, line_number, "expected 'vertex<TAB>cluster'");
    if (vertex < 0) parse_error(path, line_number, "vertex ids must be non-negative");
    out.vertices.push_back(vertex);
    out.labels.push_back(static_cast<int>(label));
  }
  return out;
}

std::string format_clustering(const Graph& g, const Clustering& c) {
  std::string out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out += std::to_string(g.external_id(v));
    out += '\t';
    out += std::to_string(c.assignment[static_cast<std::size_t>(v)]);
    out += '\n';
  }
  return out;
}

void write_clustering(const std::string& path, const Graph& g, const Clustering& c) {
  atomic_write_file(path, format_clustering(g, c));
}

Clustering clustering_for_graph(const LabeledClustering& file, const Graph& g) {
  std::map<ExternalId, VertexId> lookup;
  for (VertexId v = 0; v < g.vertex_count(); ++v) lookup.emplace(g.external_id(v), v);

  std::vector<int> raw(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < file.vertices.size(); ++i) {
    const auto it = lookup.find(file.vertices[i]);
    if (it == lookup.end())
      throw std::runtime_error("vertex " + std::to_string(file.vertices[i]) + " is not in the graph");
    int& slot = raw[static_cast<std::size_t>(it->second)];
    if (slot >= 0 && slot != file.labels[i])
      throw std::runtime_error("vertex " + std::to_string(file.vertices[i]) +
                               " is listed twice with different labels");
    slot = file.labels[i];
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (raw[static_cast<std::size_t>(v)] < 0)
      throw std::runtime_error("vertex " + std::to_string(g.external_id(v)) + " has no cluster label");

  Clustering c = compact_labels(raw);
  validate_clustering(c);
  return c;
}

std::pair<Clustering, Clustering> align_clusterings(const LabeledClustering& a,
                                                    const LabeledClustering& b) {
  auto collect = [](const LabeledClustering& file) {
    std::map<ExternalId, int> labels;
    for (std::size_t i = 0; i < file.vertices.size(); ++i) {
      auto [it, inserted] = labels.emplace(file.vertices[i], file.labels[i]);
      if (!inserted && it->second != file.labels[i])
        throw std::runtime_error("vertex " + std::to_string(file.vertices[i]) +
                                 " is listed twice with different labels");
    }
    return labels;
  };
  const std::map<ExternalId, int> labels_a = collect(a);
  const std::map<ExternalId, int> labels_b = collect(b);
  if (labels_a.size() != labels_b.size())
    throw std::runtime_error("clusterings cover different vertex sets");

  std::vector<int> raw_a, raw_b;
  auto it_b = labels_b.begin();
  for (auto it_a = labels_a.begin(); it_a != labels_a.end(); ++it_a, ++it_b) {
    if (it_a->first != it_b->first)
      throw std::runtime_error("clusterings cover different vertex sets (vertex " +
                               std::to_string(it_a->first) + " vs " + std::to_string(it_b->first) + ")");
    raw_a.push_back(it_a->second);
    raw_b.push_back(it_b->second);
  }
  return {compact_labels(raw_a), compact_labels(raw_b)};
}

void atomic_write_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write to " + tmp + " failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

int harness_threads() {
  const char* value = std::getenv("CORECLUSTER_THREADS");
  if (value == nullptr) return 1;
  const int parsed = std::atoi(value);
  return parsed >= 1 ? parsed : 1;
}

}  // namespace corecluster
