#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace pcn {

/// Pairwise (cascade) summation over a fixed operand order. The reduction
/// tree depends only on the length, so results are reproducible across
/// runs and platforms with the same FP semantics.
double pairwise_sum(std::span<const double> values);

/// Pairwise-accumulated dot product of two equal-length vectors.
double pairwise_dot(std::span<const double> a, std::span<const double> b);

/// L1 norm of the elementwise difference, pairwise-accumulated.
double l1_distance(std::span<const double> a, std::span<const double> b);

}  // namespace pcn
