#include "pcn/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "pcn/error.hpp"

namespace pcn {

Eigen::MatrixXd densify_google(const StochasticOperator& s, double alpha,
                               std::uint32_t dense_limit) {
  const std::uint32_t n = s.size();
  if (n > dense_limit)
    throw Error("matrix size " + std::to_string(n) + " exceeds dense limit " +
                std::to_string(dense_limit) +
                "; raise --dense-limit or use --method arnoldi");

  const double dn = static_cast<double>(n);
  const double base = (1.0 - alpha) / dn;
  Eigen::MatrixXd g = Eigen::MatrixXd::Constant(n, n, base);
  for (std::uint32_t j : s.dangling()) g.col(j).setConstant(1.0 / dn);
  for (std::uint32_t j = 0; j < n; ++j) {
    const auto rows = s.column_rows(j);
    const auto weights = s.column_weights(j);
    for (std::size_t k = 0; k < rows.size(); ++k)
      g(rows[k], j) += alpha * weights[k];
  }
  return g;
}

SpectrumResult eigenvalues_dense(const Eigen::MatrixXd& g, double alpha) {
  SpectrumResult result;
  result.n = static_cast<std::uint32_t>(g.rows());
  result.alpha = alpha;
  result.method = SpectrumMethod::dense;

  Eigen::EigenSolver<Eigen::MatrixXd> solver(g, /*computeEigenvectors=*/false);
  result.partial = solver.info() != Eigen::Success;
  const auto& values = solver.eigenvalues();
  result.eigenvalues.reserve(values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i)
    result.eigenvalues.push_back(values[i]);
  std::sort(result.eigenvalues.begin(), result.eigenvalues.end(),
            [](const std::complex<double>& a, const std::complex<double>& b) {
              const double ma = std::abs(a), mb = std::abs(b);
              if (ma != mb) return ma > mb;
              if (a.real() != b.real()) return a.real() > b.real();
              return a.imag() > b.imag();
            });
  result.threshold_stats[0.1] = spectral_fraction(result, 0.1);
  return result;
}

SpectrumResult eigenvalues_arnoldi(const StochasticOperator& s, double alpha,
                                   const ArnoldiParams& params) {
  const std::uint32_t n = s.size();
  const std::size_t k = std::min<std::size_t>(params.k, n);
  std::size_t m = params.subspace != 0 ? params.subspace
                                       : std::max(2 * k + 10, k + 40);
  m = std::min<std::size_t>(m, n);
  if (m < k) m = k;

  SpectrumResult result;
  result.n = n;
  result.alpha = alpha;
  result.method = SpectrumMethod::arnoldi;

  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> uniform(0.1, 1.0);
  Eigen::VectorXd v0(n);
  for (std::uint32_t i = 0; i < n; ++i) v0[i] = uniform(rng);
  v0.normalize();

  Eigen::VectorXd w(n);
  std::vector<double> xbuf(n), ybuf(n);

  for (std::size_t restart = 0; restart <= params.max_restarts; ++restart) {
    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n, m + 1);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m + 1, m);
    v.col(0) = v0;
    std::size_t m_eff = m;
    bool breakdown = false;

    for (std::size_t j = 0; j < m; ++j) {
      Eigen::Map<Eigen::VectorXd>(xbuf.data(), n) = v.col(j);
      apply_google(s, alpha, xbuf, ybuf);
      w = Eigen::Map<const Eigen::VectorXd>(ybuf.data(), n);
      for (std::size_t i = 0; i <= j; ++i) {
        const double hij = v.col(i).dot(w);
        w -= hij * v.col(i);
        h(i, j) = hij;
      }
      // One reorthogonalization pass keeps the basis clean.
      for (std::size_t i = 0; i <= j; ++i) {
        const double c = v.col(i).dot(w);
        w -= c * v.col(i);
        h(i, j) += c;
      }
      const double norm = w.norm();
      h(j + 1, j) = norm;
      if (norm < 1e-14) {
        m_eff = j + 1;
        breakdown = true;
        break;
      }
      v.col(j + 1) = w / norm;
    }

    const Eigen::MatrixXd hm = h.topLeftCorner(m_eff, m_eff);
    const double beta = breakdown ? 0.0 : h(m_eff, m_eff - 1);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(hm, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success) {
      result.partial = true;
      break;
    }

    struct Ritz {
      std::complex<double> value;
      double residual;
      Eigen::Index index;
    };
    std::vector<Ritz> ritz;
    ritz.reserve(m_eff);
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(m_eff); ++i) {
      const std::complex<double> last = solver.eigenvectors()(m_eff - 1, i);
      ritz.push_back(Ritz{solver.eigenvalues()[i], beta * std::abs(last), i});
    }
    std::sort(ritz.begin(), ritz.end(), [](const Ritz& a, const Ritz& b) {
      return std::abs(a.value) > std::abs(b.value);
    });

    const std::size_t take = std::min(k, ritz.size());
    bool converged = true;
    for (std::size_t i = 0; i < take; ++i) {
      if (ritz[i].residual > params.tol * std::max(1.0, std::abs(ritz[i].value))) {
        converged = false;
        break;
      }
    }

    if (converged || breakdown || restart == params.max_restarts) {
      result.eigenvalues.clear();
      for (std::size_t i = 0; i < take; ++i)
        result.eigenvalues.push_back(ritz[i].value);
      result.partial = !converged && !breakdown;
      break;
    }

    // Restart with the dominant Ritz directions folded into one vector.
    Eigen::VectorXd next = Eigen::VectorXd::Zero(n);
    for (std::size_t i = 0; i < take; ++i) {
      const Eigen::VectorXcd y = solver.eigenvectors().col(ritz[i].index);
      const Eigen::VectorXcd x = v.leftCols(m_eff) * y;
      next += std::abs(ritz[i].value) * x.real();
    }
    const double norm = next.norm();
    if (norm < 1e-14) {
      for (std::uint32_t i = 0; i < n; ++i) next[i] = uniform(rng);
      next.normalize();
    } else {
      next /= norm;
    }
    v0 = next;
  }

  result.threshold_stats[0.1] = spectral_fraction(result, 0.1);
  return result;
}

double spectral_fraction(const SpectrumResult& spec, double radius) {
  if (radius <= 0.0 || radius >= 1.0)
    throw Error("spectral_fraction: radius must lie in (0, 1)");
  std::size_t above = 0;
  for (const std::complex<double>& ev : spec.eigenvalues)
    if (std::abs(ev) > radius) ++above;
  return spec.n == 0 ? 0.0
                     : static_cast<double>(above) / static_cast<double>(spec.n);
}

}  // namespace pcn
