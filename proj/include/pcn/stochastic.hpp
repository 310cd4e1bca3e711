#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pcn/call_graph.hpp"

namespace pcn {

enum class LinkDirection { forward, reversed };
enum class Weighting { distinct, multiplicity };

/// Sparse column-stochastic matrix S in CSC layout. Dangling columns (no
/// outgoing links in the chosen direction) carry no stored entries; the
/// uniform 1/N replacement and the damping term are applied implicitly by
/// apply_google().
class StochasticOperator {
 public:
  StochasticOperator() = default;
  StochasticOperator(std::uint32_t n, std::vector<std::uint64_t> col_start,
                     std::vector<std::uint32_t> rows, std::vector<double> weights,
                     std::vector<std::uint32_t> dangling)
      : n_(n),
        col_start_(std::move(col_start)),
        rows_(std::move(rows)),
        weights_(std::move(weights)),
        dangling_(std::move(dangling)) {}

  std::uint32_t size() const { return n_; }
  const std::vector<std::uint32_t>& dangling() const { return dangling_; }
  std::uint64_t stored_entries() const { return rows_.size(); }

  std::span<const std::uint32_t> column_rows(std::uint32_t j) const {
    return std::span<const std::uint32_t>(rows_.data() + col_start_[j],
                                          rows_.data() + col_start_[j + 1]);
  }
  std::span<const double> column_weights(std::uint32_t j) const {
    return std::span<const double>(weights_.data() + col_start_[j],
                                   weights_.data() + col_start_[j + 1]);
  }

 private:
  std::uint32_t n_ = 0;
  std::vector<std::uint64_t> col_start_;  // n+1 entries
  std::vector<std::uint32_t> rows_;
  std::vector<double> weights_;
  std::vector<std::uint32_t> dangling_;  // sorted column ids
};

/// Column j of the forward operator distributes probability from procedure
/// j to the procedures it calls; the reversed operator is built from the
/// transposed adjacency. Weighting picks equal weights per distinct callee
/// or weights proportional to call multiplicity.
StochasticOperator build_stochastic(const CallGraph& g,
                                    LinkDirection link_direction = LinkDirection::forward,
                                    Weighting weighting = Weighting::distinct);

/// y = alpha*S*x + alpha*(sum of x over dangling)/N * 1 + (1-alpha)*(sum x)/N * 1.
/// This is the damped Google operator as a general linear map; x need not
/// be normalized.
void apply_google(const StochasticOperator& s, double alpha,
                  std::span<const double> x, std::span<double> y);

}  // namespace pcn
