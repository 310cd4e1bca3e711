#include "pcn/pagerank.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pcn/numeric.hpp"

namespace pcn {

std::vector<std::uint32_t> RankVector::positions() const {
  std::vector<std::uint32_t> pos(order.size());
  for (std::uint32_t k = 0; k < order.size(); ++k)
    pos[order[k]] = k + 1;
  return pos;
}

namespace {

std::vector<std::uint32_t> rank_order(const std::vector<double>& rho) {
  std::vector<std::uint32_t> order(rho.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return rho[a] != rho[b] ? rho[a] > rho[b] : a < b;
  });
  return order;
}

}  // namespace

RankVector pagerank(const StochasticOperator& s, const GoogleParams& p,
                    RankDirection direction) {
  const std::uint32_t n = s.size();
  const double base = (1.0 - p.alpha) / static_cast<double>(n);

  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  std::vector<double> y(n);
  std::vector<double> dangling_scratch(s.dangling().size());

  RankVector result;
  result.direction = direction;
  double delta = 0.0;
  std::size_t iter = 0;
  for (; iter < p.max_iter; ++iter) {
    // Renormalize the input so the damping term never shrinks below base.
    const double mass = pairwise_sum(x);
    for (double& v : x) v /= mass;

    std::fill(y.begin(), y.end(), 0.0);
    for (std::uint32_t j = 0; j < n; ++j) {
      const auto rows = s.column_rows(j);
      const auto weights = s.column_weights(j);
      const double xj = x[j];
      for (std::size_t k = 0; k < rows.size(); ++k)
        y[rows[k]] += weights[k] * xj;
    }
    for (std::size_t k = 0; k < dangling_scratch.size(); ++k)
      dangling_scratch[k] = x[s.dangling()[k]];
    const double dangling_uniform =
        p.alpha * pairwise_sum(dangling_scratch) / static_cast<double>(n);
    for (std::uint32_t i = 0; i < n; ++i)
      y[i] = (p.alpha * y[i] + dangling_uniform) + base;

    delta = l1_distance(y, x);
    x.swap(y);
    if (delta < p.tol) {
      ++iter;
      break;
    }
  }

  result.rho = std::move(x);
  result.order = rank_order(result.rho);
  result.iterations_used = iter;
  result.residual = delta;
  result.converged = delta < p.tol;
  return result;
}

RankVector influence_pagerank(const CallGraph& g, const GoogleParams& p,
                              Weighting weighting) {
  const StochasticOperator s =
      build_stochastic(g, LinkDirection::reversed, weighting);
  return pagerank(s, p, RankDirection::influence);
}

double fixed_point_residual(const StochasticOperator& s, double alpha,
                            const RankVector& r) {
  std::vector<double> gx(r.rho.size());
  apply_google(s, alpha, r.rho, gx);
  return l1_distance(gx, r.rho);
}

PowerLawFit rank_decay_fit(const RankVector& r, std::optional<FitRange> fit_range,
                           int bins_per_decade) {
  const std::size_t n = r.order.size();
  std::vector<HistogramBin> bins;
  std::size_t k = 0;  // 0-based rank position
  int bin_index = 0;
  while (k < n) {
    const double lo = std::pow(10.0, static_cast<double>(bin_index) / bins_per_decade);
    const double hi = std::pow(10.0, static_cast<double>(bin_index + 1) / bins_per_decade);
    double mass = 0.0;
    std::uint64_t count = 0;
    while (k < n && static_cast<double>(k + 1) < hi) {
      mass += r.rho[r.order[k]];
      ++count;
      ++k;
    }
    if (count > 0)
      bins.push_back(HistogramBin{lo, hi, mass / (hi - lo), count});
    ++bin_index;
  }
  return fit_log_bins(bins, fit_range);
}

}  // namespace pcn
