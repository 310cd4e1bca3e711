#include "pcn/correlation.hpp"

#include <algorithm>
#include <cmath>

#include "pcn/error.hpp"
#include "pcn/numeric.hpp"

namespace pcn {

CorrelationReport correlator(const RankVector& rho, const RankVector& rho_star) {
  if (rho.rho.size() != rho_star.rho.size())
    throw Error("correlator: rank vectors differ in size");
  CorrelationReport report;
  report.n = static_cast<std::uint32_t>(rho.rho.size());
  report.converged = rho.converged && rho_star.converged;
  report.kappa =
      static_cast<double>(report.n) * pairwise_dot(rho.rho, rho_star.rho) - 1.0;
  return report;
}

std::pair<double, double> JointHistogram::bin_edges(int key) const {
  const double lo = std::pow(10.0, key * bin_width_decades);
  const double hi = std::pow(10.0, (key + 1) * bin_width_decades);
  return {lo, hi};
}

JointHistogram joint_histogram(const RankVector& rho, const RankVector& rho_star,
                               double bin_width_decades) {
  if (rho.rho.size() != rho_star.rho.size())
    throw Error("joint_histogram: rank vectors differ in size");
  if (bin_width_decades <= 0.0)
    throw Error("joint_histogram: bin width must be positive");

  JointHistogram h;
  h.bin_width_decades = bin_width_decades;
  h.n = rho.rho.size();
  for (std::size_t i = 0; i < rho.rho.size(); ++i) {
    const int kx = static_cast<int>(
        std::floor(std::log10(rho.rho[i]) / bin_width_decades));
    const int ky = static_cast<int>(
        std::floor(std::log10(rho_star.rho[i]) / bin_width_decades));
    h.cells[{kx, ky}] += 1.0;
    h.marginal_x[kx] += 1.0;
    h.marginal_y[ky] += 1.0;
  }
  return h;
}

JointHistogram product_histogram(const JointHistogram& h) {
  JointHistogram p;
  p.bin_width_decades = h.bin_width_decades;
  p.n = h.n;
  p.marginal_x = h.marginal_x;
  p.marginal_y = h.marginal_y;
  const double n = static_cast<double>(h.n);
  for (const auto& [kx, mx] : h.marginal_x)
    for (const auto& [ky, my] : h.marginal_y)
      p.cells[{kx, ky}] = mx * my / n;
  return p;
}

CriticalSet critical_set(const RankVector& rho, const RankVector& rho_star,
                         double threshold_fraction) {
  if (rho.rho.size() != rho_star.rho.size())
    throw Error("critical_set: rank vectors differ in size");
  if (threshold_fraction <= 0.0 || threshold_fraction > 1.0)
    throw Error("critical_set: threshold fraction must be in (0, 1]");

  const std::size_t n = rho.rho.size();
  CriticalSet set;
  set.threshold_fraction = threshold_fraction;
  set.cutoff = static_cast<std::uint32_t>(
      std::ceil(threshold_fraction * static_cast<double>(n)));

  const std::vector<std::uint32_t> pos = rho.positions();
  const std::vector<std::uint32_t> pos_star = rho_star.positions();
  for (std::uint32_t i = 0; i < n; ++i) {
    if (pos[i] <= set.cutoff && pos_star[i] <= set.cutoff)
      set.members.emplace_back(i, pos[i], pos_star[i]);
  }
  std::sort(set.members.begin(), set.members.end(),
            [](const auto& a, const auto& b) {
              const auto sum_a = std::get<1>(a) + std::get<2>(a);
              const auto sum_b = std::get<1>(b) + std::get<2>(b);
              return sum_a != sum_b ? sum_a < sum_b : std::get<0>(a) < std::get<0>(b);
            });
  return set;
}

}  // namespace pcn
