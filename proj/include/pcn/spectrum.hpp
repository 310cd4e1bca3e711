#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Core>

#include "pcn/stochastic.hpp"

namespace pcn {

enum class SpectrumMethod { dense, arnoldi };

/// Complex eigenvalues of the damped Google matrix. The dense method
/// returns all N of them; the Arnoldi method returns Ritz estimates of the
/// largest-modulus ones only.
struct SpectrumResult {
  std::vector<std::complex<double>> eigenvalues;
  std::uint32_t n = 0;
  double alpha = 0.85;
  SpectrumMethod method = SpectrumMethod::dense;
  bool partial = false;
  std::map<double, double> threshold_stats;  // radius -> fraction |lambda| > radius
};

inline constexpr std::uint32_t kDefaultDenseLimit = 4000;

/// Materializes G = alpha*S + (1-alpha)/N (dangling columns become the
/// uniform column 1/N). Throws when N exceeds dense_limit.
Eigen::MatrixXd densify_google(const StochasticOperator& s, double alpha,
                               std::uint32_t dense_limit = kDefaultDenseLimit);

/// Complete eigenvalue set of a real square matrix via the real Schur
/// decomposition (Hessenberg reduction + shifted QR).
SpectrumResult eigenvalues_dense(const Eigen::MatrixXd& g, double alpha);

struct ArnoldiParams {
  std::size_t k = 200;            // wanted largest-modulus eigenvalues
  std::size_t subspace = 0;       // Krylov dimension; 0 picks max(2k+10, k+40)
  std::size_t max_restarts = 40;
  double tol = 1e-10;             // Ritz residual tolerance
  std::uint64_t seed = 12345;     // start-vector seed
};

/// Restarted Arnoldi iteration on the implicit operator; dangling and
/// damping terms are applied inside the matvec, nothing is materialized.
SpectrumResult eigenvalues_arnoldi(const StochasticOperator& s, double alpha,
                                   const ArnoldiParams& params = {});

/// Fraction of computed modes with |lambda| > radius, the unit mode
/// included; the denominator is the full matrix size N.
double spectral_fraction(const SpectrumResult& spec, double radius);

}  // namespace pcn
