#include "pcn/stochastic.hpp"

#include <algorithm>

#include "pcn/numeric.hpp"

namespace pcn {

StochasticOperator build_stochastic(const CallGraph& g,
                                    LinkDirection link_direction,
                                    Weighting weighting) {
  const std::uint32_t n = g.node_count();
  // Column j holds the out-neighbors of j in the chosen direction.
  std::vector<std::uint64_t> col_start(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : g.edges()) {
    const std::uint32_t col = link_direction == LinkDirection::forward ? e.src : e.dst;
    ++col_start[col + 1];
  }
  for (std::size_t j = 1; j < col_start.size(); ++j)
    col_start[j] += col_start[j - 1];

  std::vector<std::uint32_t> rows(g.edges().size());
  std::vector<double> weights(g.edges().size());
  std::vector<std::uint64_t> cursor(col_start.begin(), col_start.end() - 1);
  // CallGraph edges are sorted by (src, dst); filling forward columns in
  // that order leaves rows ascending per column. For the reversed operator
  // a per-column sort below restores the canonical order.
  for (const Edge& e : g.edges()) {
    const std::uint32_t col = link_direction == LinkDirection::forward ? e.src : e.dst;
    const std::uint32_t row = link_direction == LinkDirection::forward ? e.dst : e.src;
    const std::uint64_t slot = cursor[col]++;
    rows[slot] = row;
    weights[slot] = weighting == Weighting::multiplicity
                        ? static_cast<double>(e.multiplicity)
                        : 1.0;
  }

  std::vector<std::uint32_t> dangling;
  for (std::uint32_t j = 0; j < n; ++j) {
    const std::uint64_t begin = col_start[j], end = col_start[j + 1];
    if (begin == end) {
      dangling.push_back(j);
      continue;
    }
    if (link_direction == LinkDirection::reversed) {
      // Sort (row, weight) pairs by row for a canonical layout.
      std::vector<std::pair<std::uint32_t, double>> entries;
      entries.reserve(end - begin);
      for (std::uint64_t k = begin; k < end; ++k)
        entries.emplace_back(rows[k], weights[k]);
      std::sort(entries.begin(), entries.end());
      for (std::uint64_t k = begin; k < end; ++k) {
        rows[k] = entries[k - begin].first;
        weights[k] = entries[k - begin].second;
      }
    }
    double sum = 0.0;
    for (std::uint64_t k = begin; k < end; ++k) sum += weights[k];
    for (std::uint64_t k = begin; k < end; ++k) weights[k] /= sum;
  }

  return StochasticOperator(n, std::move(col_start), std::move(rows),
                            std::move(weights), std::move(dangling));
}

void apply_google(const StochasticOperator& s, double alpha,
                  std::span<const double> x, std::span<double> y) {
  const std::uint32_t n = s.size();
  std::fill(y.begin(), y.end(), 0.0);
  for (std::uint32_t j = 0; j < n; ++j) {
    const auto rows = s.column_rows(j);
    const auto weights = s.column_weights(j);
    const double xj = x[j];
    for (std::size_t k = 0; k < rows.size(); ++k) y[rows[k]] += weights[k] * xj;
  }

  std::vector<double> dangling_values(s.dangling().size());
  for (std::size_t k = 0; k < s.dangling().size(); ++k)
    dangling_values[k] = x[s.dangling()[k]];
  const double dangling_mass = pairwise_sum(dangling_values);
  const double total_mass = pairwise_sum(x);

  const double uniform = (alpha * dangling_mass + (1.0 - alpha) * total_mass) /
                         static_cast<double>(n);
  for (std::uint32_t i = 0; i < n; ++i) y[i] = alpha * y[i] + uniform;
}

}  // namespace pcn
