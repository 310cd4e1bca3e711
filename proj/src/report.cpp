#include "pcn/report.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>

#include "pcn/correlation.hpp"
#include "pcn/error.hpp"
#include "pcn/graph_io.hpp"
#include "pcn/version.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace pcn {

std::string fmt17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

namespace {

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

ordered_json fit_to_json(const PowerLawFit& fit) {
  ordered_json j;
  j["gamma"] = fit.gamma;
  j["stderr"] = fit.stderr_;
  j["fit_min"] = fit.fit_range.degree_min;
  j["fit_max"] = fit.fit_range.degree_max;
  j["bins_used"] = fit.bins_used;
  j["method"] = PowerLawFit::method;
  return j;
}

void write_histogram_csv(const DegreeHistogram& h, const fs::path& path) {
  std::ofstream out = open_out(path);
  out << "# bin_lo,bin_hi,density,count\n";
  out << "# first row is the zero-degree entry when present\n";
  if (h.zero_count > 0)
    out << "0,1," << fmt17(h.zero_mass()) << "," << h.zero_count << "\n";
  for (const HistogramBin& b : h.bins)
    out << fmt17(b.lo) << "," << fmt17(b.hi) << "," << fmt17(b.density) << ","
        << b.count << "\n";
}

void write_rank_csv(const CallGraph& g, const RankVector& r,
                    const std::vector<std::uint64_t>& in_deg,
                    const std::vector<std::uint64_t>& out_deg,
                    const fs::path& path) {
  std::ofstream out = open_out(path);
  out << "# K,name,rho,in_degree,out_degree\n";
  for (std::uint32_t k = 0; k < r.order.size(); ++k) {
    const std::uint32_t node = r.order[k];
    out << (k + 1) << "," << g.name(node) << "," << fmt17(r.rho[node]) << ","
        << in_deg[node] << "," << out_deg[node] << "\n";
  }
}

void write_joint_csv(const JointHistogram& h, const fs::path& path) {
  std::ofstream out = open_out(path);
  out << "# rows: log10(rho) bins ascending; cols: log10(rho*) bins ascending\n";
  out << "# bin_width_decades," << fmt17(h.bin_width_decades) << "\n";
  if (h.cells.empty()) return;
  int kx_min = 0, kx_max = 0, ky_min = 0, ky_max = 0;
  bool first = true;
  for (const auto& [key, value] : h.cells) {
    if (first) {
      kx_min = kx_max = key.first;
      ky_min = ky_max = key.second;
      first = false;
    }
    kx_min = std::min(kx_min, key.first);
    kx_max = std::max(kx_max, key.first);
    ky_min = std::min(ky_min, key.second);
    ky_max = std::max(ky_max, key.second);
  }
  auto edges_line = [&](const char* label, int kmin, int kmax) {
    out << "# " << label;
    for (int k = kmin; k <= kmax + 1; ++k)
      out << "," << fmt17(std::pow(10.0, k * h.bin_width_decades));
    out << "\n";
  };
  edges_line("x_edges", kx_min, kx_max);
  edges_line("y_edges", ky_min, ky_max);
  for (int kx = kx_min; kx <= kx_max; ++kx) {
    for (int ky = ky_min; ky <= ky_max; ++ky) {
      const auto it = h.cells.find({kx, ky});
      const double value = it == h.cells.end() ? 0.0 : it->second;
      out << (ky == ky_min ? "" : ",") << fmt17(value);
    }
    out << "\n";
  }
}

void write_eigenvalues_csv(const SpectrumResult& spec, const fs::path& path) {
  std::ofstream out = open_out(path);
  out << "# re,im\n";
  for (const std::complex<double>& ev : spec.eigenvalues)
    out << fmt17(ev.real()) << "," << fmt17(ev.imag()) << "\n";
}

ordered_json options_to_json(const AnalysisOptions& o) {
  ordered_json j;
  j["alpha"] = o.alpha;
  j["tol"] = o.tol;
  j["max_iter"] = o.max_iter;
  j["weighted"] = o.weighted;
  j["stages"] = o.stages;
  j["rank_direction"] = o.rank_direction;
  j["bins_per_decade"] = o.bins_per_decade;
  j["joint_bin_width"] = o.joint_bin_width;
  j["critical_fraction"] = o.critical_fraction;
  j["dense_limit"] = o.dense_limit;
  j["spectrum_method"] =
      o.spectrum_method == SpectrumMethod::dense ? "dense" : "arnoldi";
  j["arnoldi_k"] = o.arnoldi_k;
  j["radius"] = o.radius;
  return j;
}

}  // namespace

AnalysisSummary run_analysis(const CallGraph& g, const AnalysisOptions& options,
                             const std::string& corpus_id,
                             const fs::path& out_dir) {
  if (g.node_count() == 0) throw Error("empty graph");
  fs::create_directories(out_dir);

  AnalysisSummary summary;
  ordered_json& report = summary.report;
  report["schema"] = 1;
  report["tool"] = "pcn";
  report["version"] = kVersion;
  report["generated_at"] = timestamp_utc();
  report["corpus"] = corpus_id;

  const std::uint64_t total_calls = g.total_call_count();
  report["n"] = g.node_count();
  report["total_calls"] = total_calls;
  report["avg_calls_per_procedure"] =
      static_cast<double>(total_calls) / static_cast<double>(g.node_count());

  const auto in_mult = degree_sequence(g, Direction::in, Counting::multiplicity);
  const auto out_mult = degree_sequence(g, Direction::out, Counting::multiplicity);

  const bool want_forward = options.rank_direction != "reversed";
  const bool want_reversed = options.rank_direction != "forward";
  const bool want_correlation = options.stages.count("correlation") != 0;

  if (options.stages.count("degrees") != 0) {
    ordered_json deg;
    struct Spec {
      const char* key;
      Direction direction;
      Counting counting;
      const char* file;
    };
    const Spec specs[] = {
        {"gamma_in", Direction::in, Counting::multiplicity, "degree_in_multiplicity.csv"},
        {"gamma_in_distinct", Direction::in, Counting::distinct, "degree_in_distinct.csv"},
        {"gamma_out", Direction::out, Counting::multiplicity, "degree_out_multiplicity.csv"},
        {"gamma_out_distinct", Direction::out, Counting::distinct, "degree_out_distinct.csv"},
    };
    for (const Spec& s : specs) {
      const auto degrees = degree_sequence(g, s.direction, s.counting);
      const DegreeHistogram h = log_binned_histogram(
          degrees, options.bins_per_decade, s.direction, s.counting);
      write_histogram_csv(h, out_dir / s.file);
      try {
        deg[s.key] = fit_to_json(fit_power_law(h));
      } catch (const Error& err) {
        deg[s.key] = nullptr;
        deg[std::string(s.key) + "_note"] = err.what();
      }
    }
    report["degrees"] = deg;
  }

  RankVector forward, reversed;
  const bool rank_stage = options.stages.count("rank") != 0 || want_correlation;
  if (rank_stage) {
    const GoogleParams params{options.alpha, options.tol, options.max_iter};
    const Weighting weighting =
        options.weighted ? Weighting::multiplicity : Weighting::distinct;
    ordered_json rank;
    rank["alpha"] = options.alpha;
    rank["weighting"] = options.weighted ? "multiplicity" : "distinct";

    auto rank_to_json = [&](const RankVector& r) {
      ordered_json j;
      j["iterations"] = r.iterations_used;
      j["residual"] = r.residual;
      j["converged"] = r.converged;
      try {
        j["beta"] = fit_to_json(rank_decay_fit(r));
      } catch (const Error& err) {
        j["beta"] = nullptr;
        j["beta_note"] = err.what();
      }
      ordered_json top = ordered_json::array();
      for (std::uint32_t k = 0; k < std::min<std::size_t>(10, r.order.size()); ++k) {
        ordered_json entry;
        entry["rank"] = k + 1;
        entry["name"] = g.name(r.order[k]);
        entry["rho"] = r.rho[r.order[k]];
        top.push_back(entry);
      }
      j["top"] = top;
      return j;
    };

    if (want_forward || want_correlation) {
      forward = pagerank(build_stochastic(g, LinkDirection::forward, weighting),
                         params, RankDirection::popularity);
      summary.rank_converged = summary.rank_converged && forward.converged;
      rank["forward"] = rank_to_json(forward);
      write_rank_csv(g, forward, in_mult, out_mult, out_dir / "rank_forward.csv");
    }
    if (want_reversed || want_correlation) {
      reversed = influence_pagerank(g, params, weighting);
      summary.rank_converged = summary.rank_converged && reversed.converged;
      rank["reversed"] = rank_to_json(reversed);
      write_rank_csv(g, reversed, in_mult, out_mult, out_dir / "rank_reversed.csv");
    }
    report["rank"] = rank;
  }

  if (want_correlation) {
    const CorrelationReport corr = correlator(forward, reversed);
    ordered_json cj;
    cj["kappa"] = corr.kappa;
    cj["n"] = corr.n;
    cj["converged"] = corr.converged;

    const JointHistogram joint =
        joint_histogram(forward, reversed, options.joint_bin_width);
    write_joint_csv(joint, out_dir / "joint_histogram.csv");
    write_joint_csv(product_histogram(joint), out_dir / "product_histogram.csv");

    const CriticalSet critical =
        critical_set(forward, reversed, options.critical_fraction);
    ordered_json crit;
    crit["threshold_fraction"] = critical.threshold_fraction;
    crit["cutoff"] = critical.cutoff;
    crit["size"] = critical.members.size();
    ordered_json members = ordered_json::array();
    for (std::size_t i = 0; i < std::min<std::size_t>(50, critical.members.size()); ++i) {
      const auto& [node, k, k_star] = critical.members[i];
      ordered_json m;
      m["name"] = g.name(node);
      m["K"] = k;
      m["K_star"] = k_star;
      members.push_back(m);
    }
    crit["members_top"] = members;
    cj["critical_set"] = crit;
    report["correlation"] = cj;
  }

  if (options.stages.count("spectrum") != 0) {
    const Weighting weighting =
        options.weighted ? Weighting::multiplicity : Weighting::distinct;
    const StochasticOperator s =
        build_stochastic(g, LinkDirection::forward, weighting);
    SpectrumResult spec;
    if (options.spectrum_method == SpectrumMethod::dense) {
      spec = eigenvalues_dense(densify_google(s, options.alpha, options.dense_limit),
                               options.alpha);
    } else {
      ArnoldiParams ap;
      ap.k = options.arnoldi_k;
      spec = eigenvalues_arnoldi(s, options.alpha, ap);
    }
    write_eigenvalues_csv(spec, out_dir / "eigenvalues.csv");
    ordered_json sj;
    sj["method"] = spec.method == SpectrumMethod::dense ? "dense" : "arnoldi";
    sj["computed"] = spec.eigenvalues.size();
    sj["partial"] = spec.partial;
    ordered_json fractions;
    fractions["0.1"] = spectral_fraction(spec, 0.1);
    if (options.radius != 0.1)
      fractions[fmt17(options.radius)] = spectral_fraction(spec, options.radius);
    sj["fraction_above"] = fractions;
    report["spectrum"] = sj;
  }

  report["config"] = options_to_json(options);

  std::ofstream out = open_out(out_dir / "report.json");
  out << report.dump(2) << "\n";
  return summary;
}

ExtractionReport scan_to_files(const fs::path& root, const ExtractorConfig& config,
                               const fs::path& out_graph) {
  PcnBuildResult built = build_pcn(root, config);
  save_graph(built.graph, out_graph);

  ordered_json j;
  j["schema"] = 1;
  j["tool"] = "pcn";
  j["version"] = kVersion;
  j["generated_at"] = timestamp_utc();
  j["corpus"] = root.string();
  j["files_scanned"] = built.report.files_scanned;
  j["procedures_found"] = built.report.procedures_found;
  j["calls_total"] = built.report.calls_total;
  std::uint64_t unresolved_total = 0;
  ordered_json unresolved;
  for (const auto& [name, count] : built.report.unresolved_calls) {
    unresolved[name] = count;
    unresolved_total += count;
  }
  j["resolved_calls"] = built.report.calls_total - unresolved_total;
  j["unresolved_total"] = unresolved_total;
  j["unresolved_calls"] = unresolved;
  j["diagnostics_count"] = built.report.diagnostics.size();
  ordered_json diags = ordered_json::array();
  for (std::size_t i = 0; i < std::min<std::size_t>(200, built.report.diagnostics.size()); ++i) {
    const Diagnostic& d = built.report.diagnostics[i];
    ordered_json dj;
    dj["file"] = d.file;
    dj["line"] = d.line;
    dj["message"] = d.message;
    diags.push_back(dj);
  }
  j["diagnostics"] = diags;

  std::ofstream out = open_out(out_graph.string() + ".report.json");
  out << j.dump(2) << "\n";
  return built.report;
}

AnalysisSummary analyze_to_files(const fs::path& graph_file,
                                 const AnalysisOptions& options,
                                 const fs::path& out_dir) {
  const CallGraph g = load_graph(graph_file);
  return run_analysis(g, options, graph_file.string(), out_dir);
}

}  // namespace pcn
