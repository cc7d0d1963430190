// Command line front end: decomposition, clustering, benchmark generation,
// evaluation, analysis, and timing subcommands over edge-list files.
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "corecluster/analysis.hpp"
#include "corecluster/benchgen.hpp"
#include "corecluster/cluster_algos.hpp"
#include "corecluster/corecluster.hpp"
#include "corecluster/degeneracy.hpp"
#include "corecluster/io.hpp"
#include "corecluster/metrics.hpp"

namespace cc = corecluster;
using json = nlohmann::json;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    cc::atomic_write_file(out_path, content);
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

// Runs fn(i) for i in [0, count) on up to CORECLUSTER_THREADS workers.
template <typename Fn>
void parallel_for(int count, Fn&& fn) {
  const int threads = std::min(cc::harness_threads(), count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& worker : pool) worker.join();
}

json input_block(const std::string& path, const cc::Graph& g) {
  return {{"path", path},
          {"vertices", g.vertex_count()},
          {"edges", g.edge_count()},
          {"self_loops_dropped", g.self_loops_dropped()},
          {"duplicates_dropped", g.duplicates_dropped()}};
}

json conductance_block(const cc::ConductanceReport& report) {
  json bins = json::array();
  for (const auto& bin : report.bins)
    bins.push_back({{"bin", bin.bin},
                    {"count", bin.count},
                    {"excluded", bin.excluded},
                    {"mean_phi", bin.mean_phi}});
  json per_cluster = json::array();
  for (const auto& entry : report.per_cluster)
    per_cluster.push_back({{"cluster", entry.cluster},
                           {"size", entry.size},
                           {"phi", entry.phi},
                           {"whole_component", entry.whole_component}});
  return {{"bin_base", report.bin_base}, {"per_cluster", per_cluster}, {"bins", bins}};
}

struct ClusterOptions {
  std::string edges_path;
  std::string algo = "spectral";
  bool use_corecluster = false;
  double alpha = 0.7;
  int beta = 2;
  std::uint64_t seed = 0;
  std::optional<int> rho;
  std::string truth_path;
  std::string out_path;
  std::string report_path;
};

int run_cluster(const ClusterOptions& opt) {
  const cc::Graph g = cc::read_edge_list(opt.edges_path);
  if (g.vertex_count() == 0) throw std::runtime_error("cannot cluster an empty graph");

  cc::SpectralConfig cfg;
  cfg.rho = opt.rho;
  cfg.seed = opt.seed;
  const auto base = cc::make_algorithm(opt.algo, cfg);

  cc::SelectionParams params;
  params.alpha = opt.alpha;
  params.beta = opt.beta;
  params.validate();

  const auto total_started = std::chrono::steady_clock::now();
  const auto decomp_started = std::chrono::steady_clock::now();
  const cc::CoreDecomposition decomp = cc::core_decomposition(g);
  const double decomposition_seconds = seconds_since(decomp_started);

  cc::Clustering clustering;
  json layers = json::array();
  json base_seconds = json::array();
  json trace_block;
  if (opt.use_corecluster) {
    const cc::CoreClusterResult result = cc::corecluster(g, *base, params, opt.seed);
    clustering = result.clustering;
    for (const auto& layer : result.trace.layers) {
      layers.push_back({{"rank", layer.rank},
                        {"layer_size", layer.layer_size},
                        {"selected", layer.selected},
                        {"absorbed", layer.absorbed},
                        {"assigned", layer.assigned},
                        {"clusters_created", layer.clusters_created},
                        {"base_seconds", layer.base_seconds}});
      base_seconds.push_back(layer.base_seconds);
    }
    const cc::AccelerationStats stats = cc::acceleration_stats(result.trace);
    trace_block = {{"layers", layers},
                   {"n_max", stats.n_max},
                   {"rho_g", stats.rho_g},
                   {"mu_g", stats.mu_g},
                   {"predicted_bound", stats.predicted_bound}};
  } else {
    const auto base_started = std::chrono::steady_clock::now();
    clustering = base->cluster(g, opt.seed);
    base_seconds.push_back(seconds_since(base_started));
    trace_block = {{"layers", layers},
                   {"n_max", nullptr},
                   {"rho_g", nullptr},
                   {"mu_g", nullptr},
                   {"predicted_bound", nullptr}};
  }
  const double total_seconds = seconds_since(total_started);

  const std::string clustering_tsv = cc::format_clustering(g, clustering);
  if (opt.out_path.empty())
    std::cout << clustering_tsv;
  else
    cc::atomic_write_file(opt.out_path, clustering_tsv);

  json metrics_block;
  metrics_block["cluster_count"] = clustering.cluster_count;
  metrics_block["modularity"] =
      g.edge_count() > 0 ? json(cc::modularity(g, clustering)) : json(nullptr);
  if (!opt.truth_path.empty()) {
    const cc::Clustering truth = cc::clustering_for_graph(cc::read_clustering_file(opt.truth_path), g);
    metrics_block["nmi"] = cc::nmi(clustering, truth);
  } else {
    metrics_block["nmi"] = nullptr;
  }
  metrics_block["conductance"] = conductance_block(cc::conductance_report(g, clustering));

  const double coverage =
      static_cast<double>(decomp.layers[static_cast<std::size_t>(decomp.degeneracy_k)].size()) /
      static_cast<double>(g.vertex_count());

  const json report = {{"input", input_block(opt.edges_path, g)},
                       {"algorithm",
                        {{"name", opt.algo},
                         {"corecluster", opt.use_corecluster},
                         {"alpha", opt.alpha},
                         {"beta", opt.beta},
                         {"seed", opt.seed},
                         {"rho", opt.rho ? json(*opt.rho) : json(nullptr)}}},
                       {"timings",
                        {{"decomposition_seconds", decomposition_seconds},
                         {"base_seconds", base_seconds},
                         {"total_seconds", total_seconds}}},
                       {"trace", trace_block},
                       {"metrics", metrics_block},
                       {"coverage", coverage}};
  if (!opt.report_path.empty()) cc::atomic_write_file(opt.report_path, report.dump(2) + "\n");

  std::cerr << "clusters\t" << clustering.cluster_count << "\n";
  return 0;
}

int run_decompose(const std::string& edges_path, const std::string& out_path) {
  const cc::Graph g = cc::read_edge_list(edges_path);
  const cc::CoreDecomposition decomp = cc::core_decomposition(g);

  std::string tsv = "# vertex\tcoreness\n";
  for (cc::VertexId v = 0; v < g.vertex_count(); ++v) {
    tsv += std::to_string(g.external_id(v));
    tsv += '\t';
    tsv += std::to_string(decomp.coreness[static_cast<std::size_t>(v)]);
    tsv += '\n';
  }
  emit(tsv, out_path);

  std::ostream& summary = out_path.empty() ? std::cerr : std::cout;
  summary << "degeneracy\t" << decomp.degeneracy_k << "\n";
  for (cc::VertexId rank = decomp.degeneracy_k;; --rank) {
    summary << "layer\t" << rank << "\t" << decomp.layers[static_cast<std::size_t>(rank)].size() << "\n";
    if (rank == 0) break;
  }
  return 0;
}

int run_generate(const cc::GeneratorParams& params, int communities, const std::string& prefix) {
  cc::GeneratorParams local = params;
  if (communities > 0) {
    std::vector<cc::VertexId> sizes(static_cast<std::size_t>(communities),
                                    params.n / communities);
    for (int r = 0; r < params.n % communities; ++r) ++sizes[static_cast<std::size_t>(r)];
    local.community_sizes = sizes;
  }
  const cc::GeneratedBenchmark bench = cc::generate(local);

  std::string edges;
  for (const auto& [u, v] : bench.graph.edges()) {
    edges += std::to_string(bench.graph.external_id(u));
    edges += ' ';
    edges += std::to_string(bench.graph.external_id(v));
    edges += '\n';
  }
  cc::atomic_write_file(prefix + ".edges", edges);
  cc::write_clustering(prefix + ".truth", bench.graph, bench.truth);

  std::cout << "vertices\t" << bench.graph.vertex_count() << "\n"
            << "edges\t" << bench.graph.edge_count() << "\n"
            << "realized_mu\t" << format_double(bench.realized_mu) << "\n"
            << "dropped_stubs\t" << bench.dropped_stubs << "\n";
  return 0;
}

int run_evaluate_nmi(const std::string& truth_path, const std::string& pred_path,
                     const std::string& report_path) {
  const auto [truth, pred] = cc::align_clusterings(cc::read_clustering_file(truth_path),
                                                   cc::read_clustering_file(pred_path));
  const double value = cc::nmi(pred, truth);
  std::printf("%.6f\n", value);
  if (!report_path.empty()) cc::atomic_write_file(report_path, json{{"nmi", value}}.dump(2) + "\n");
  return 0;
}

int run_evaluate_conductance(const std::string& edges_path, const std::string& pred_path,
                             double bin_base, const std::string& report_path) {
  const cc::Graph g = cc::read_edge_list(edges_path);
  const cc::Clustering pred = cc::clustering_for_graph(cc::read_clustering_file(pred_path), g);
  const cc::ConductanceReport report = cc::conductance_report(g, pred, bin_base);

  std::string out = "# cluster\tsize\tphi\twhole_component\n";
  for (const auto& entry : report.per_cluster) {
    out += std::to_string(entry.cluster) + '\t' + std::to_string(entry.size) + '\t' +
           format_double(entry.phi) + '\t' + (entry.whole_component ? "1" : "0") + '\n';
  }
  out += "# bin\tcount\texcluded\tmean_phi\n";
  for (const auto& bin : report.bins)
    out += std::to_string(bin.bin) + '\t' + std::to_string(bin.count) + '\t' +
           std::to_string(bin.excluded) + '\t' + format_double(bin.mean_phi) + '\n';
  std::cout << out;

  if (!report_path.empty()) {
    const json doc = {{"input", input_block(edges_path, g)},
                      {"conductance", conductance_block(report)}};
    cc::atomic_write_file(report_path, doc.dump(2) + "\n");
  }
  return 0;
}

int run_cc_profile(const std::string& edges_path, const std::string& out_path) {
  const cc::Graph g = cc::read_edge_list(edges_path);
  const cc::CoreDecomposition decomp = cc::core_decomposition(g);
  const auto profile = cc_vs_core_profile(g, decomp);

  std::string tsv = "# core_index_normalized\tmean_cc_induced\tmean_cc_original\n";
  for (const auto& point : profile)
    tsv += format_double(point.normalized_index) + '\t' + format_double(point.mean_cc_induced) +
           '\t' + format_double(point.mean_cc_original) + '\n';
  emit(tsv, out_path);
  return 0;
}

int run_transitions(const std::string& edges_path, std::optional<int> rho,
                    const std::string& out_path) {
  const cc::Graph g = cc::read_edge_list(edges_path);
  const cc::CoreDecomposition decomp = cc::core_decomposition(g);
  if (decomp.degeneracy_k < 1) throw std::runtime_error("graph has no core transitions");

  const int transitions = decomp.degeneracy_k;  // ranks 0 .. k-1
  std::vector<cc::CoreTransitionReport> reports(static_cast<std::size_t>(transitions));
  parallel_for(transitions, [&](int rank) {
    reports[static_cast<std::size_t>(rank)] = cc::core_transition_report(g, decomp, rank, rho);
  });

  std::string tsv =
      "# rank\tn_next\tdelta_edges\tji_entries\tji_edges\trho\teigengap\tsin_theta_f\t"
      "sin_theta_2\tbound_f\tbound_2\tapplicable\tholds\n";
  std::string findings;
  for (const auto& r : reports) {
    // 1e-8 absorbs eigensolver noise on zero-perturbation transitions
    const bool holds = !r.applicable || (r.measured_frobenius <= r.bound_frobenius + 1e-8 &&
                                         r.measured_spectral <= r.bound_spectral + 1e-8);
    tsv += std::to_string(r.rank) + '\t' + std::to_string(r.n_next) + '\t' +
           std::to_string(r.delta_edges) + '\t' + std::to_string(r.ji_entries) + '\t' +
           std::to_string(r.ji_edges) + '\t' + std::to_string(r.rho) + '\t' +
           format_double(r.eigengap) + '\t' + format_double(r.measured_frobenius) + '\t' +
           format_double(r.measured_spectral) + '\t' + format_double(r.bound_frobenius) + '\t' +
           format_double(r.bound_spectral) + '\t' + (r.applicable ? "1" : "0") + '\t' +
           (holds ? "1" : "0") + '\n';
    if (!holds)
      findings += "# finding: transition " + std::to_string(r.rank) +
                  " exceeds its bound (measured_f=" + format_double(r.measured_frobenius) +
                  " bound_f=" + format_double(r.bound_frobenius) +
                  " measured_2=" + format_double(r.measured_spectral) +
                  " bound_2=" + format_double(r.bound_spectral) + ")\n";
  }
  emit(tsv + findings, out_path);
  return 0;
}

int run_cc_bound(const std::string& edges_path) {
  const cc::Graph g = cc::read_edge_list(edges_path);
  const cc::DegeneracyCcBound result = cc::degeneracy_cc_bound_check(g);
  std::cout << "degeneracy\t" << result.degeneracy_k << "\n"
            << "gamma_sum_cc\t" << format_double(result.gamma_sum_cc) << "\n"
            << "holds\t" << (result.holds ? "1" : "0") << "\n";
  return 0;
}

int run_bench(const std::string& edges_path, const std::string& algo, int repeat,
              std::uint64_t seed, const std::string& report_path) {
  const cc::Graph g = cc::read_edge_list(edges_path);
  if (g.vertex_count() == 0) throw std::runtime_error("cannot cluster an empty graph");

  cc::SpectralConfig cfg;
  cfg.seed = seed;
  const auto base = cc::make_algorithm(algo, cfg);
  cc::SelectionParams params;

  auto median_of = [](std::vector<double> times) {
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
  };

  std::vector<double> baseline_times, framework_times;
  for (int r = 0; r < repeat; ++r) {
    const auto started = std::chrono::steady_clock::now();
    base->cluster(g, seed);
    baseline_times.push_back(seconds_since(started));
  }
  for (int r = 0; r < repeat; ++r) {
    const auto started = std::chrono::steady_clock::now();
    cc::corecluster(g, *base, params, seed);
    framework_times.push_back(seconds_since(started));
  }

  const double baseline_median = median_of(baseline_times);
  const double framework_median = median_of(framework_times);
  const json doc = {{"input", input_block(edges_path, g)},
                    {"algorithm", {{"name", algo}, {"seed", seed}}},
                    {"repeat", repeat},
                    {"baseline_median_seconds", baseline_median},
                    {"corecluster_median_seconds", framework_median},
                    {"speedup", baseline_median / framework_median}};
  std::cout << doc.dump(2) << "\n";
  if (!report_path.empty()) cc::atomic_write_file(report_path, doc.dump(2) + "\n");
  return 0;
}

}  // namespace

int run_command(int argc, char** argv) {
  CLI::App app{"degeneracy-driven graph clustering toolkit"};
  app.require_subcommand(1);

  // decompose
  auto* decompose = app.add_subcommand("decompose", "k-core decomposition of an edge list");
  std::string decompose_edges, decompose_out;
  decompose->add_option("edges", decompose_edges, "edge list file")->required();
  decompose->add_option("-o,--output", decompose_out, "coreness TSV output (default stdout)");

  // cluster
  ClusterOptions cluster_opt;
  auto* cluster = app.add_subcommand("cluster", "cluster a graph, optionally through the core framework");
  cluster->add_option("edges", cluster_opt.edges_path, "edge list file")->required();
  cluster->add_option("--algo", cluster_opt.algo, "spectral|fastgreedy|multilevel")
      ->check(CLI::IsMember({"spectral", "fastgreedy", "multilevel"}));
  cluster->add_flag("--corecluster", cluster_opt.use_corecluster,
                    "run the base algorithm incrementally over the core expansion sequence");
  cluster->add_option("--alpha", cluster_opt.alpha, "absorption threshold in (0.5, 1]");
  cluster->add_option("--beta", cluster_opt.beta, "minimum degree for absorption");
  cluster->add_option("--seed", cluster_opt.seed, "random seed");
  int cluster_rho = -1;
  cluster->add_option("--rho", cluster_rho, "force the spectral cluster count");
  cluster->add_option("--truth", cluster_opt.truth_path, "ground-truth clustering file for NMI");
  cluster->add_option("-o,--output", cluster_opt.out_path, "clustering TSV output (default stdout)");
  cluster->add_option("--report", cluster_opt.report_path, "experiment report JSON path");

  // generate
  auto* generate_cmd = app.add_subcommand("generate", "planted-partition benchmark graph");
  cc::GeneratorParams gen_params;
  int gen_n = 0, gen_min = 0, gen_max = 0, gen_communities = 0;
  double gen_mu = 0.0;
  std::uint64_t gen_seed = 0;
  std::string gen_prefix;
  generate_cmd->add_option("--n", gen_n, "vertex count")->required();
  generate_cmd->add_option("--min-deg", gen_min, "minimum target degree")->required();
  generate_cmd->add_option("--max-deg", gen_max, "maximum target degree")->required();
  generate_cmd->add_option("--mu", gen_mu, "mixing fraction in [0, 1)")->required();
  generate_cmd->add_option("--seed", gen_seed, "random seed");
  generate_cmd->add_option("--communities", gen_communities, "community count (default: auto)");
  generate_cmd->add_option("-o,--output", gen_prefix, "output prefix (.edges/.truth)")->required();

  // evaluate nmi | conductance
  auto* evaluate = app.add_subcommand("evaluate", "clustering quality metrics");
  evaluate->require_subcommand(1);
  auto* eval_nmi = evaluate->add_subcommand("nmi", "normalized mutual information of two clusterings");
  std::string nmi_truth, nmi_pred, nmi_report;
  eval_nmi->add_option("truth", nmi_truth, "ground truth clustering file")->required();
  eval_nmi->add_option("prediction", nmi_pred, "predicted clustering file")->required();
  eval_nmi->add_option("--report", nmi_report, "JSON report path");
  auto* eval_cond = evaluate->add_subcommand("conductance", "per-cluster and log-binned conductance");
  std::string cond_edges, cond_pred, cond_report;
  double cond_base = 2.0;
  eval_cond->add_option("edges", cond_edges, "edge list file")->required();
  eval_cond->add_option("prediction", cond_pred, "predicted clustering file")->required();
  eval_cond->add_option("--bin-base", cond_base, "logarithmic bin base (default 2)");
  eval_cond->add_option("--report", cond_report, "JSON report path");

  // analyze cc-profile | transitions | cc-bound
  auto* analyze = app.add_subcommand("analyze", "diagnostics over the core structure");
  analyze->require_subcommand(1);
  auto* profile_cmd = analyze->add_subcommand("cc-profile", "clustering coefficient per core rank");
  std::string profile_edges, profile_out;
  profile_cmd->add_option("edges", profile_edges, "edge list file")->required();
  profile_cmd->add_option("-o,--output", profile_out, "TSV output (default stdout)");
  auto* transitions_cmd = analyze->add_subcommand("transitions", "eigenspace perturbation per core transition");
  std::string trans_edges, trans_out;
  int trans_rho = -1;
  transitions_cmd->add_option("edges", trans_edges, "edge list file")->required();
  transitions_cmd->add_option("--rho", trans_rho, "force the eigenspace dimension");
  transitions_cmd->add_option("-o,--output", trans_out, "TSV output (default stdout)");
  auto* bound_cmd = analyze->add_subcommand("cc-bound", "degeneracy vs clustering-coefficient bound");
  std::string bound_edges;
  bound_cmd->add_option("edges", bound_edges, "edge list file")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "baseline vs framework wall time");
  std::string bench_edges, bench_algo = "spectral", bench_report;
  int bench_repeat = 3;
  std::uint64_t bench_seed = 0;
  bench->add_option("edges", bench_edges, "edge list file")->required();
  bench->add_option("--algo", bench_algo, "spectral|fastgreedy|multilevel")
      ->check(CLI::IsMember({"spectral", "fastgreedy", "multilevel"}));
  bench->add_option("--repeat", bench_repeat, "repetitions per pipeline (median reported)");
  bench->add_option("--seed", bench_seed, "random seed");
  bench->add_option("--report", bench_report, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*decompose) return run_decompose(decompose_edges, decompose_out);
    if (*cluster) {
      if (cluster_rho > 0) cluster_opt.rho = cluster_rho;
      return run_cluster(cluster_opt);
    }
    if (*generate_cmd) {
      gen_params.n = gen_n;
      gen_params.min_degree = gen_min;
      gen_params.max_degree = gen_max;
      gen_params.mu = gen_mu;
      gen_params.seed = gen_seed;
      return run_generate(gen_params, gen_communities, gen_prefix);
    }
    if (*eval_nmi) return run_evaluate_nmi(nmi_truth, nmi_pred, nmi_report);
    if (*eval_cond) return run_evaluate_conductance(cond_edges, cond_pred, cond_base, cond_report);
    if (*profile_cmd) return run_cc_profile(profile_edges, profile_out);
    if (*transitions_cmd)
      return run_transitions(trans_edges, trans_rho > 0 ? std::optional<int>(trans_rho) : std::nullopt,
                             trans_out);
    if (*bound_cmd) return run_cc_bound(bound_edges);
    if (*bench) return run_bench(bench_edges, bench_algo, bench_repeat, bench_seed, bench_report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

int main(int argc, char** argv) { return run_command(argc, argv); }
