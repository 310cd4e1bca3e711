#include "pcn/numeric.hpp"

#include <vector>

namespace pcn {

namespace {

constexpr std::size_t kBaseBlock = 32;

double sum_recursive(const double* data, std::size_t n) {
  if (n <= kBaseBlock) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += data[i];
    return s;
  }
  const std::size_t half = n / 2;
  return sum_recursive(data, half) + sum_recursive(data + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  return sum_recursive(values.data(), values.size());
}

double pairwise_dot(std::span<const double> a, std::span<const double> b) {
  std::vector<double> products(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) products[i] = a[i] * b[i];
  return pairwise_sum(products);
}

double l1_distance(std::span<const double> a, std::span<const double> b) {
  std::vector<double> diffs(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diffs[i] = std::abs(a[i] - b[i]);
  return pairwise_sum(diffs);
}

}  // namespace pcn
