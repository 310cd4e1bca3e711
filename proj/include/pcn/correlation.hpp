#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "pcn/pagerank.hpp"

namespace pcn {

/// kappa = N * sum_i rho(i) rho*(i) - 1; zero for independent rankings,
/// N-1 in the fully correlated point-mass limit.
struct CorrelationReport {
  double kappa = 0.0;
  std::uint32_t n = 0;
  bool converged = false;
};

CorrelationReport correlator(const RankVector& rho, const RankVector& rho_star);

/// 2-D histogram of (log10 rho, log10 rho*) with uniform bins of
/// `bin_width_decades`. Cell keys are floor(log10(value)/width) per axis.
/// Joint cells hold integer counts; product cells are real-valued.
struct JointHistogram {
  double bin_width_decades = 0.25;
  std::uint64_t n = 0;
  std::map<std::pair<int, int>, double> cells;
  std::map<int, double> marginal_x;  // rho axis
  std::map<int, double> marginal_y;  // rho* axis

  /// Linear-scale bin edges [lo, hi) for a key on either axis.
  std::pair<double, double> bin_edges(int key) const;
};

JointHistogram joint_histogram(const RankVector& rho, const RankVector& rho_star,
                               double bin_width_decades = 0.25);

/// Independence surrogate: cell(x, y) = marginal_x(x) * marginal_y(y) / N,
/// marginals copied unchanged. Idempotent.
JointHistogram product_histogram(const JointHistogram& h);

/// Procedures ranking in the top ceil(f*N) positions of both orderings.
struct CriticalSet {
  double threshold_fraction = 0.01;
  std::uint32_t cutoff = 0;  // ceil(threshold_fraction * N)
  // (node_id, K, K*), sorted by K + K* ascending, ties by node id.
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> members;
};

CriticalSet critical_set(const RankVector& rho, const RankVector& rho_star,
                         double threshold_fraction = 0.01);

}  // namespace pcn
