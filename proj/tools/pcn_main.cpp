#include <cstdio>
#include <exception>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcn/error.hpp"
#include "pcn/graph_io.hpp"
#include "pcn/report.hpp"
#include "pcn/version.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"pcn - procedure call network extraction and Google-matrix analysis"};
  app.set_version_flag("--version", pcn::kVersion);
  app.require_subcommand(1);

  // scan
  auto* scan = app.add_subcommand("scan", "scan a C source tree into a graph file");
  std::string scan_root;
  std::string scan_out;
  std::string scan_ext = "c,h";
  std::string scan_scope = "global";
  unsigned scan_threads = 0;
  scan->add_option("root", scan_root, "source tree root")->required();
  scan->add_option("--out", scan_out, "output graph file")->required();
  scan->add_option("--ext", scan_ext, "comma-separated file extensions (default c,h)");
  scan->add_option("--scope", scan_scope, "procedure identity: global|file")
      ->check(CLI::IsMember({"global", "file"}));
  scan->add_option("--threads", scan_threads, "worker threads (0 = auto)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "run the statistical pipeline on a graph file");
  std::string analyze_graph;
  std::string analyze_out_dir;
  pcn::AnalysisOptions options;
  std::string stages = "degrees,rank,correlation";
  std::string method = "dense";
  std::string direction = "both";
  analyze->add_option("graph", analyze_graph, "graph file from scan/load-edges")->required();
  analyze->add_option("--out-dir", analyze_out_dir, "output directory")->required();
  analyze->add_option("--alpha", options.alpha, "damping factor (default 0.85)");
  analyze->add_option("--tol", options.tol, "L1 convergence tolerance (default 1e-12)");
  analyze->add_option("--max-iter", options.max_iter, "iteration cap (default 10000)");
  analyze->add_flag("--weighted", options.weighted,
                    "weight columns by call multiplicity instead of distinct targets");
  analyze->add_option("--stages", stages,
                      "comma-separated: degrees,rank,correlation,spectrum");
  analyze->add_option("--direction", direction, "rank direction: forward|reversed|both")
      ->check(CLI::IsMember({"forward", "reversed", "both"}));
  analyze->add_option("--bins-per-decade", options.bins_per_decade,
                      "histogram bins per decade (default 5)");
  analyze->add_option("--joint-bin-width", options.joint_bin_width,
                      "joint histogram bin width in decades (default 0.25)");
  analyze->add_option("--critical-fraction", options.critical_fraction,
                      "rank fraction for the critical set (default 0.01)");
  analyze->add_option("--dense-limit", options.dense_limit,
                      "max N for the dense spectrum (default 4000)");
  analyze->add_option("--method", method, "spectrum method: dense|arnoldi")
      ->check(CLI::IsMember({"dense", "arnoldi"}));
  analyze->add_option("--arnoldi-k", options.arnoldi_k,
                      "eigenvalues to compute with arnoldi (default 200)");
  analyze->add_option("--radius", options.radius,
                      "report the fraction of |lambda| above this radius (default 0.1)");

  // load-edges
  auto* load = app.add_subcommand("load-edges", "convert a directed edge list to a graph file");
  std::string edges_file;
  std::string edges_out;
  std::string edges_format = "plain";
  load->add_option("file", edges_file, "edge list file")->required();
  load->add_option("--out", edges_out, "output graph file")->required();
  load->add_option("--format", edges_format, "plain (integer ids) or named")
      ->check(CLI::IsMember({"plain", "named"}));

  CLI11_PARSE(app, argc, argv);

  if (scan->parsed()) {
    pcn::ExtractorConfig config;
    config.extensions = split_csv(scan_ext);
    config.scope = scan_scope == "file" ? pcn::Scope::file : pcn::Scope::global;
    config.threads = scan_threads;
    try {
      const pcn::ExtractionReport report =
          pcn::scan_to_files(scan_root, config, scan_out);
      std::cout << "scanned " << report.files_scanned << " files, "
                << report.procedures_found << " procedures, "
                << report.calls_total << " calls -> " << scan_out << "\n";
    } catch (const pcn::EmptyCorpusError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    return 0;
  }

  if (analyze->parsed()) {
    options.stages.clear();
    for (const std::string& s : split_csv(stages)) {
      if (s != "degrees" && s != "rank" && s != "correlation" && s != "spectrum") {
        std::cerr << "error: unknown stage '" << s << "'\n";
        return 4;
      }
      options.stages.insert(s);
    }
    options.rank_direction = direction;
    options.spectrum_method =
        method == "arnoldi" ? pcn::SpectrumMethod::arnoldi : pcn::SpectrumMethod::dense;
    pcn::AnalysisSummary summary;
    try {
      summary = pcn::analyze_to_files(analyze_graph, options, analyze_out_dir);
    } catch (const pcn::Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 4;
    }
    std::cout << "report written to " << analyze_out_dir << "/report.json\n";
    if (!summary.rank_converged) {
      std::cerr << "warning: power iteration did not converge within max-iter\n";
      return 3;
    }
    return 0;
  }

  if (load->parsed()) {
    const pcn::EdgeListFormat format = edges_format == "named"
                                           ? pcn::EdgeListFormat::named
                                           : pcn::EdgeListFormat::plain;
    const pcn::CallGraph g = pcn::load_edge_list(edges_file, format);
    pcn::save_graph(g, edges_out);
    std::cout << "loaded N=" << g.node_count() << " E=" << g.edges().size()
              << " -> " << edges_out << "\n";
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const pcn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
