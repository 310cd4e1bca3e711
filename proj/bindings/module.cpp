#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "pcn/correlation.hpp"
#include "pcn/error.hpp"
#include "pcn/extractor.hpp"
#include "pcn/graph_io.hpp"
#include "pcn/pagerank.hpp"
#include "pcn/report.hpp"
#include "pcn/spectrum.hpp"
#include "pcn/version.hpp"

namespace py = pybind11;

namespace {

py::array_t<double> to_array(const std::vector<double>& v) {
  py::array_t<double> a(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), a.mutable_data());
  return a;
}

py::array_t<std::uint32_t> to_array_u32(const std::vector<std::uint32_t>& v) {
  py::array_t<std::uint32_t> a(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), a.mutable_data());
  return a;
}

py::dict fit_to_dict(const pcn::PowerLawFit& fit) {
  py::dict d;
  d["gamma"] = fit.gamma;
  d["stderr"] = fit.stderr_;
  d["fit_min"] = fit.fit_range.degree_min;
  d["fit_max"] = fit.fit_range.degree_max;
  d["bins_used"] = fit.bins_used;
  return d;
}

pcn::Weighting weighting_of(bool weighted) {
  return weighted ? pcn::Weighting::multiplicity : pcn::Weighting::distinct;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "procedure call network extraction and Google-matrix analysis";
  m.attr("__version__") = pcn::kVersion;

  py::register_exception<pcn::Error>(m, "PcnError");

  py::class_<pcn::CallGraph>(m, "CallGraph")
      .def_property_readonly("n", &pcn::CallGraph::node_count)
      .def_property_readonly("names", &pcn::CallGraph::names)
      .def("edges",
           [](const pcn::CallGraph& g) {
             py::list out;
             for (const pcn::Edge& e : g.edges())
               out.append(py::make_tuple(e.src, e.dst, e.multiplicity));
             return out;
           })
      .def("total_calls", &pcn::CallGraph::total_call_count)
      .def("reversed", &pcn::CallGraph::reversed)
      .def("degree_sequence",
           [](const pcn::CallGraph& g, const std::string& direction,
              const std::string& counting) {
             const auto d = pcn::degree_sequence(
                 g, direction == "out" ? pcn::Direction::out : pcn::Direction::in,
                 counting == "distinct" ? pcn::Counting::distinct
                                        : pcn::Counting::multiplicity);
             py::array_t<std::uint64_t> a(static_cast<py::ssize_t>(d.size()));
             std::copy(d.begin(), d.end(), a.mutable_data());
             return a;
           },
           py::arg("direction") = "in", py::arg("counting") = "multiplicity")
      .def("__repr__", [](const pcn::CallGraph& g) {
        return "<CallGraph n=" + std::to_string(g.node_count()) +
               " edges=" + std::to_string(g.edges().size()) + ">";
      });

  py::class_<pcn::RankVector>(m, "RankVector")
      .def_property_readonly("rho",
                             [](const pcn::RankVector& r) { return to_array(r.rho); })
      .def_property_readonly(
          "order", [](const pcn::RankVector& r) { return to_array_u32(r.order); })
      .def_readonly("iterations_used", &pcn::RankVector::iterations_used)
      .def_readonly("residual", &pcn::RankVector::residual)
      .def_readonly("converged", &pcn::RankVector::converged);

  m.def(
      "scan",
      [](const std::string& root, const std::vector<std::string>& extensions,
         const std::string& scope) {
        pcn::ExtractorConfig config;
        if (!extensions.empty()) config.extensions = extensions;
        config.scope = scope == "file" ? pcn::Scope::file : pcn::Scope::global;
        pcn::PcnBuildResult built = pcn::build_pcn(root, config);
        py::dict report;
        report["files_scanned"] = built.report.files_scanned;
        report["procedures_found"] = built.report.procedures_found;
        report["calls_total"] = built.report.calls_total;
        report["unresolved_calls"] = built.report.unresolved_calls;
        return py::make_tuple(std::move(built.graph), report);
      },
      py::arg("root"), py::arg("extensions") = std::vector<std::string>{"c", "h"},
      py::arg("scope") = "global",
      "Scan a C source tree into a call graph and an extraction report.");

  m.def("load_graph",
        [](const std::string& path) { return pcn::load_graph(path); });
  m.def("save_graph", [](const pcn::CallGraph& g, const std::string& path) {
    pcn::save_graph(g, path);
  });
  m.def(
      "load_edge_list",
      [](const std::string& path, const std::string& format) {
        return pcn::load_edge_list(path, format == "named"
                                             ? pcn::EdgeListFormat::named
                                             : pcn::EdgeListFormat::plain);
      },
      py::arg("path"), py::arg("format") = "plain");

  m.def(
      "pagerank",
      [](const pcn::CallGraph& g, double alpha, double tol, std::size_t max_iter,
         bool weighted, bool reversed) {
        const pcn::GoogleParams params{alpha, tol, max_iter};
        if (reversed)
          return pcn::influence_pagerank(g, params, weighting_of(weighted));
        return pcn::pagerank(
            pcn::build_stochastic(g, pcn::LinkDirection::forward, weighting_of(weighted)),
            params, pcn::RankDirection::popularity);
      },
      py::arg("graph"), py::arg("alpha") = 0.85, py::arg("tol") = 1e-12,
      py::arg("max_iter") = 10000, py::arg("weighted") = false,
      py::arg("reversed") = false,
      "PageRank (or influence-PageRank with reversed=True) of the graph.");

  m.def(
      "kappa",
      [](const pcn::RankVector& rho, const pcn::RankVector& rho_star) {
        return pcn::correlator(rho, rho_star).kappa;
      },
      py::arg("rho"), py::arg("rho_star"),
      "Popularity-influence correlator N*sum(rho*rho_star) - 1.");

  m.def(
      "critical_set",
      [](const pcn::RankVector& rho, const pcn::RankVector& rho_star,
         double threshold_fraction) {
        const pcn::CriticalSet set =
            pcn::critical_set(rho, rho_star, threshold_fraction);
        py::list members;
        for (const auto& [node, k, k_star] : set.members)
          members.append(py::make_tuple(node, k, k_star));
        return members;
      },
      py::arg("rho"), py::arg("rho_star"), py::arg("threshold_fraction") = 0.01);

  m.def(
      "degree_fit",
      [](const std::vector<std::uint64_t>& degrees, int bins_per_decade) {
        const pcn::DegreeHistogram h =
            pcn::log_binned_histogram(degrees, bins_per_decade);
        return fit_to_dict(pcn::fit_power_law(h));
      },
      py::arg("degrees"), py::arg("bins_per_decade") = 5,
      "Log-binned least-squares power-law exponent of a degree sequence.");

  m.def(
      "rank_decay_fit",
      [](const pcn::RankVector& r) { return fit_to_dict(pcn::rank_decay_fit(r)); },
      py::arg("rank"), "Decay exponent beta of rho(K) ~ K^-beta.");

  m.def(
      "spectrum",
      [](const pcn::CallGraph& g, double alpha, std::uint32_t dense_limit,
         bool weighted) {
        const pcn::StochasticOperator s = pcn::build_stochastic(
            g, pcn::LinkDirection::forward, weighting_of(weighted));
        const pcn::SpectrumResult spec = pcn::eigenvalues_dense(
            pcn::densify_google(s, alpha, dense_limit), alpha);
        py::array_t<std::complex<double>> a(
            static_cast<py::ssize_t>(spec.eigenvalues.size()));
        std::copy(spec.eigenvalues.begin(), spec.eigenvalues.end(),
                  a.mutable_data());
        return a;
      },
      py::arg("graph"), py::arg("alpha") = 0.85,
      py::arg("dense_limit") = pcn::kDefaultDenseLimit, py::arg("weighted") = false,
      "All eigenvalues of the dense Google matrix, sorted by modulus.");
}
