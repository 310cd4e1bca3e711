#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pcn/histogram.hpp"
#include "pcn/stochastic.hpp"

namespace pcn {

struct GoogleParams {
  double alpha = 0.85;
  double tol = 1e-12;       // L1 change between iterates
  std::size_t max_iter = 10000;
};

enum class RankDirection { popularity, influence };

/// PageRank probability vector with its induced ordering. order[k] is the
/// node at rank position k+1; ties sort by ascending node id.
struct RankVector {
  std::vector<double> rho;
  std::vector<std::uint32_t> order;
  RankDirection direction = RankDirection::popularity;
  std::size_t iterations_used = 0;
  double residual = 0.0;
  bool converged = false;

  /// 1-based rank position of each node (inverse of order).
  std::vector<std::uint32_t> positions() const;
};

/// Power iteration on the damped operator, starting from the uniform
/// vector, with L1 renormalization each step. Every component of the
/// result is >= (1-alpha)/N by construction.
RankVector pagerank(const StochasticOperator& s, const GoogleParams& p,
                    RankDirection direction = RankDirection::popularity);

/// PageRank of the Google matrix built from the link-reversed adjacency.
RankVector influence_pagerank(const CallGraph& g, const GoogleParams& p,
                              Weighting weighting = Weighting::distinct);

/// L1 fixed-point residual ||G*rho - rho||_1 under the implicit operator.
double fixed_point_residual(const StochasticOperator& s, double alpha,
                            const RankVector& r);

/// Fits rho(K) ~ K^(-beta) on the rank-ordered curve with log-binned K:
/// per-bin value is the rank mass in the bin divided by the bin width.
PowerLawFit rank_decay_fit(const RankVector& r,
                           std::optional<FitRange> fit_range = std::nullopt,
                           int bins_per_decade = 5);

}  // namespace pcn
