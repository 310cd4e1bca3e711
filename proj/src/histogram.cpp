#include "pcn/histogram.hpp"

#include <algorithm>
#include <cmath>

#include "pcn/error.hpp"

namespace pcn {

DegreeHistogram log_binned_histogram(std::span<const std::uint64_t> degrees,
                                     int bins_per_decade, Direction direction,
                                     Counting counting) {
  if (bins_per_decade < 1) throw Error("bins_per_decade must be >= 1");
  DegreeHistogram h;
  h.direction = direction;
  h.counting = counting;
  h.bins_per_decade = bins_per_decade;
  h.total = degrees.size();

  std::uint64_t max_degree = 0;
  for (std::uint64_t d : degrees) {
    if (d == 0)
      ++h.zero_count;
    else
      max_degree = std::max(max_degree, d);
  }
  if (max_degree == 0) return h;  // only the zero-degree entry

  const int kmax = static_cast<int>(
      std::floor(std::log10(static_cast<double>(max_degree)) * bins_per_decade));
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(kmax) + 1, 0);
  for (std::uint64_t d : degrees) {
    if (d == 0) continue;
    int k = static_cast<int>(
        std::floor(std::log10(static_cast<double>(d)) * bins_per_decade));
    // Guard the edge cases where log10 of an exact power of 10 lands a hair
    // below the bin boundary.
    auto edge = [&](int q) { return std::pow(10.0, static_cast<double>(q) / bins_per_decade); };
    while (k > 0 && static_cast<double>(d) < edge(k)) --k;
    while (k + 1 <= kmax && static_cast<double>(d) >= edge(k + 1)) ++k;
    counts[static_cast<std::size_t>(k)] += 1;
  }

  const double n = static_cast<double>(h.total);
  for (int k = 0; k <= kmax; ++k) {
    const std::uint64_t c = counts[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const double lo = std::pow(10.0, static_cast<double>(k) / bins_per_decade);
    const double hi = std::pow(10.0, static_cast<double>(k + 1) / bins_per_decade);
    h.bins.push_back(HistogramBin{lo, hi, (static_cast<double>(c) / n) / (hi - lo), c});
  }
  return h;
}

PowerLawFit fit_log_bins(std::span<const HistogramBin> bins,
                         std::optional<FitRange> fit_range) {
  std::vector<HistogramBin> usable;
  if (fit_range) {
    for (const HistogramBin& b : bins) {
      const double center = std::sqrt(b.lo * b.hi);
      if (center >= fit_range->degree_min && center <= fit_range->degree_max)
        usable.push_back(b);
    }
  } else {
    // Default: drop the first populated bin, strip low-count tail bins.
    usable.assign(bins.begin(), bins.end());
    if (!usable.empty()) usable.erase(usable.begin());
    while (!usable.empty() && usable.back().count < 5) usable.pop_back();
  }
  if (usable.size() < 3) throw Error("insufficient tail");

  double sx = 0, sy = 0;
  for (const HistogramBin& b : usable) {
    sx += std::log10(std::sqrt(b.lo * b.hi));
    sy += std::log10(b.density);
  }
  const double n = static_cast<double>(usable.size());
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (const HistogramBin& b : usable) {
    const double dx = std::log10(std::sqrt(b.lo * b.hi)) - mx;
    const double dy = std::log10(b.density) - my;
    sxx += dx * dx;
    sxy += dx * dy;
  }
  const double slope = sxy / sxx;

  double ss_resid = 0;
  for (const HistogramBin& b : usable) {
    const double dx = std::log10(std::sqrt(b.lo * b.hi)) - mx;
    const double dy = std::log10(b.density) - my;
    const double r = dy - slope * dx;
    ss_resid += r * r;
  }
  const double dof = n - 2.0;
  const double stderr_slope = dof > 0 ? std::sqrt(ss_resid / dof / sxx) : 0.0;

  PowerLawFit fit;
  fit.gamma = -slope;
  fit.stderr_ = stderr_slope;
  fit.fit_range = FitRange{usable.front().lo, usable.back().hi};
  fit.bins_used = usable.size();
  return fit;
}

PowerLawFit fit_power_law(const DegreeHistogram& h,
                          std::optional<FitRange> fit_range) {
  return fit_log_bins(h.bins, fit_range);
}

}  // namespace pcn
