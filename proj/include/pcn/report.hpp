#pragma once

#include <filesystem>
#include <set>
#include <string>

#include <json.hpp>

#include "pcn/extractor.hpp"
#include "pcn/spectrum.hpp"

namespace pcn {

struct AnalysisOptions {
  double alpha = 0.85;
  double tol = 1e-12;
  std::size_t max_iter = 10000;
  bool weighted = false;  // multiplicity-weighted columns in S
  std::set<std::string> stages = {"degrees", "rank", "correlation"};
  std::string rank_direction = "both";  // forward | reversed | both
  int bins_per_decade = 5;
  double joint_bin_width = 0.25;
  double critical_fraction = 0.01;
  std::uint32_t dense_limit = kDefaultDenseLimit;
  SpectrumMethod spectrum_method = SpectrumMethod::dense;
  std::size_t arnoldi_k = 200;
  double radius = 0.1;
};

struct AnalysisSummary {
  nlohmann::ordered_json report;
  bool rank_converged = true;
};

/// Runs the selected stages over a graph and writes report.json plus the
/// CSV sidecars into out_dir. Output is a pure function of (graph, options)
/// apart from the generated_at timestamp.
AnalysisSummary run_analysis(const CallGraph& g, const AnalysisOptions& options,
                             const std::string& corpus_id,
                             const std::filesystem::path& out_dir);

/// scan: build_pcn + save_graph + extraction report JSON (<out>.report.json).
ExtractionReport scan_to_files(const std::filesystem::path& root,
                               const ExtractorConfig& config,
                               const std::filesystem::path& out_graph);

/// analyze: load graph file, run_analysis into out_dir.
AnalysisSummary analyze_to_files(const std::filesystem::path& graph_file,
                                 const AnalysisOptions& options,
                                 const std::filesystem::path& out_dir);

/// Full-precision decimal rendering used by every CSV writer.
std::string fmt17(double value);

}  // namespace pcn
