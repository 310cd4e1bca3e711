#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pcn/call_graph.hpp"

namespace pcn {

/// One populated logarithmic bin; `density` is the node fraction in the bin
/// divided by the linear bin width.
struct HistogramBin {
  double lo;
  double hi;
  double density;
  std::uint64_t count;
};

/// Log-binned degree distribution: geometric bin edges at 10^(k/bins_per_decade)
/// covering degrees >= 1, plus an explicit zero-degree entry.
struct DegreeHistogram {
  Direction direction = Direction::in;
  Counting counting = Counting::multiplicity;
  int bins_per_decade = 5;
  std::vector<HistogramBin> bins;  // populated bins only, ascending
  std::uint64_t zero_count = 0;
  std::uint64_t total = 0;  // == N; bin counts + zero_count sum to this

  double zero_mass() const {
    return total == 0 ? 0.0 : static_cast<double>(zero_count) / static_cast<double>(total);
  }
};

DegreeHistogram log_binned_histogram(std::span<const std::uint64_t> degrees,
                                     int bins_per_decade = 5,
                                     Direction direction = Direction::in,
                                     Counting counting = Counting::multiplicity);

struct FitRange {
  double degree_min;
  double degree_max;
};

struct PowerLawFit {
  double gamma = 0.0;
  double stderr_ = 0.0;
  FitRange fit_range{0.0, 0.0};
  std::size_t bins_used = 0;
  static constexpr const char* method = "log-binned least squares";
};

/// Ordinary least squares of log10(density) on log10(geometric bin center);
/// gamma is minus the slope. Without an explicit range, the first populated
/// bin is dropped and trailing bins with fewer than 5 raw counts are
/// stripped. Throws Error("insufficient tail") when fewer than 3 usable
/// bins remain.
PowerLawFit fit_power_law(const DegreeHistogram& h,
                          std::optional<FitRange> fit_range = std::nullopt);

/// Shared OLS core over pre-built bins (used by the rank-decay fits).
PowerLawFit fit_log_bins(std::span<const HistogramBin> bins,
                         std::optional<FitRange> fit_range);

}  // namespace pcn
