#include <doctest.h>

#include <cmath>
#include <random>

#include "pcn/correlation.hpp"
#include "pcn/error.hpp"
#include "support/generators.hpp"

using namespace pcn;
using namespace pcn::testing;

namespace {

RankVector uniform_rank(std::size_t n) {
  RankVector r;
  r.rho.assign(n, 1.0 / static_cast<double>(n));
  r.order.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.order[i] = static_cast<std::uint32_t>(i);
  r.converged = true;
  return r;
}

RankVector rank_from_values(std::vector<double> values) {
  RankVector r;
  r.rho = std::move(values);
  std::vector<std::uint32_t> order(r.rho.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = static_cast<std::uint32_t>(i);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return r.rho[a] != r.rho[b] ? r.rho[a] > r.rho[b] : a < b;
  });
  r.order = std::move(order);
  r.converged = true;
  return r;
}

}  // namespace

TEST_CASE("uniform ranks give kappa = 0 exactly at power-of-two sizes") {
  for (std::size_t n : {std::size_t{1024}, std::size_t{16384}}) {
    const RankVector u = uniform_rank(n);
    const CorrelationReport report = correlator(u, u);
    CHECK(report.kappa == 0.0);
    CHECK(report.n == n);
  }
}

TEST_CASE("uniform against anything normalized stays near zero") {
  const std::size_t n = 1000;
  const RankVector u = uniform_rank(n);
  std::vector<double> other(n);
  double norm = 0.0;
  for (std::size_t k = 0; k < n; ++k) norm += 1.0 / std::sqrt(k + 1.0);
  for (std::size_t k = 0; k < n; ++k) other[k] = (1.0 / std::sqrt(k + 1.0)) / norm;
  const CorrelationReport report = correlator(u, rank_from_values(std::move(other)));
  CHECK(std::abs(report.kappa) < 1e-12);
}

TEST_CASE("point mass ranks give kappa = N - 1") {
  const std::size_t n = 4096;
  std::vector<double> point(n, 0.0);
  point[0] = 1.0;
  const RankVector p = rank_from_values(std::move(point));
  const CorrelationReport report = correlator(p, p);
  CHECK(report.kappa == static_cast<double>(n) - 1.0);
}

TEST_CASE("kappa is symmetric and relabel-invariant") {
  const std::size_t n = 512;
  std::mt19937_64 rng(21);
  std::vector<double> a(n), b(n);
  double sa = 0.0, sb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = 1.0 + static_cast<double>(rng() % 1000);
    b[i] = 1.0 + static_cast<double>(rng() % 1000);
    sa += a[i];
    sb += b[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    a[i] /= sa;
    b[i] /= sb;
  }
  const RankVector ra = rank_from_values(a);
  const RankVector rb = rank_from_values(b);
  CHECK(correlator(ra, rb).kappa == correlator(rb, ra).kappa);

  // simultaneous relabeling
  std::vector<std::uint32_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint32_t>(i);
  deterministic_shuffle(perm, rng);
  std::vector<double> ap(n), bp(n);
  for (std::size_t i = 0; i < n; ++i) {
    ap[perm[i]] = a[i];
    bp[perm[i]] = b[i];
  }
  CHECK(std::abs(correlator(rank_from_values(ap), rank_from_values(bp)).kappa -
                 correlator(ra, rb).kappa) < 1e-12);
}

TEST_CASE("independent permutations of power-law values decorrelate") {
  const std::size_t n = 10000;
  std::vector<double> values(n);
  double norm = 0.0;
  for (std::size_t k = 1; k <= n; ++k) norm += std::pow(static_cast<double>(k), -0.5);
  for (std::size_t k = 0; k < n; ++k)
    values[k] = std::pow(static_cast<double>(k + 1), -0.5) / norm;

  std::mt19937_64 rng(20260809);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> a = values, b = values;
    deterministic_shuffle(a, rng);
    deterministic_shuffle(b, rng);
    const double kappa = correlator(rank_from_values(a), rank_from_values(b)).kappa;
    CHECK(std::abs(kappa) < 0.05);
  }
}

TEST_CASE("size mismatch raises") {
  CHECK_THROWS_AS(correlator(uniform_rank(4), uniform_rank(5)), Error);
}

TEST_CASE("kappa is bounded below by -1") {
  // disjoint supports: rho zero where rho* is not
  std::vector<double> a{0.5, 0.5, 0.0, 0.0};
  std::vector<double> b{0.0, 0.0, 0.5, 0.5};
  const double kappa = correlator(rank_from_values(a), rank_from_values(b)).kappa;
  CHECK(kappa == -1.0);
}

TEST_CASE("joint histogram basics") {
  RankVector a = rank_from_values({0.4, 0.4, 0.2});
  RankVector b = rank_from_values({0.4, 0.4, 0.2});
  const JointHistogram h = joint_histogram(a, b, 0.25);
  // nodes 0 and 1 share one cell, node 2 another
  double total = 0.0;
  for (const auto& [key, value] : h.cells) total += value;
  CHECK(total == 3.0);
  CHECK(h.cells.size() == 2);
  const auto [kx0, ky0] = h.cells.begin()->first;
  CHECK(kx0 == ky0);  // identical vectors stay on the diagonal
}

TEST_CASE("uniform vectors occupy a single cell") {
  const RankVector u = uniform_rank(100);
  const JointHistogram h = joint_histogram(u, u, 0.25);
  REQUIRE(h.cells.size() == 1);
  CHECK(h.cells.begin()->second == 100.0);
}

TEST_CASE("marginals equal row and column sums") {
  const std::size_t n = 300;
  std::mt19937_64 rng(31);
  std::vector<double> a(n), b(n);
  double sa = 0.0, sb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = 1.0 + static_cast<double>(rng() % 100000);
    b[i] = 1.0 + static_cast<double>(rng() % 100000);
    sa += a[i];
    sb += b[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    a[i] /= sa;
    b[i] /= sb;
  }
  const JointHistogram h =
      joint_histogram(rank_from_values(a), rank_from_values(b), 0.25);

  std::map<int, double> row_sums, col_sums;
  for (const auto& [key, value] : h.cells) {
    row_sums[key.first] += value;
    col_sums[key.second] += value;
  }
  CHECK(row_sums == h.marginal_x);
  CHECK(col_sums == h.marginal_y);
}

TEST_CASE("product histogram erases correlation but keeps marginals") {
  RankVector a = rank_from_values({0.45, 0.45, 0.05, 0.05});
  RankVector b = rank_from_values({0.45, 0.05, 0.45, 0.05});
  const JointHistogram joint = joint_histogram(a, b, 0.25);
  const JointHistogram prod = product_histogram(joint);

  CHECK(prod.marginal_x == joint.marginal_x);
  CHECK(prod.marginal_y == joint.marginal_y);

  double total = 0.0;
  for (const auto& [key, value] : prod.cells) total += value;
  CHECK(total == doctest::Approx(static_cast<double>(joint.n)).epsilon(1e-9));

  // idempotence, cell by cell
  const JointHistogram prod2 = product_histogram(prod);
  REQUIRE(prod2.cells.size() == prod.cells.size());
  for (const auto& [key, value] : prod.cells) {
    REQUIRE(prod2.cells.count(key) == 1);
    CHECK(prod2.cells.at(key) == value);
  }
}

TEST_CASE("single populated cell makes product equal joint") {
  const RankVector u = uniform_rank(64);
  const JointHistogram joint = joint_histogram(u, u, 0.25);
  const JointHistogram prod = product_histogram(joint);
  REQUIRE(prod.cells.size() == 1);
  CHECK(prod.cells.begin()->second == joint.cells.begin()->second);
}

TEST_CASE("diagonal 2x2 joint flattens to N/4 cells") {
  // two tight value clusters on the diagonal
  std::vector<double> a, b;
  for (int i = 0; i < 8; ++i) {
    const bool high = i < 4;
    a.push_back(high ? 0.2 : 0.002);
    b.push_back(high ? 0.2 : 0.002);
  }
  double sa = 0.0, sb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] /= sa;
    b[i] /= sb;
  }
  const JointHistogram joint =
      joint_histogram(rank_from_values(a), rank_from_values(b), 0.25);
  REQUIRE(joint.cells.size() == 2);  // diagonal only
  const JointHistogram prod = product_histogram(joint);
  REQUIRE(prod.cells.size() == 4);
  for (const auto& [key, value] : prod.cells) CHECK(value == 2.0);
}

TEST_CASE("independent permutations: joint tracks product within sampling noise") {
  const std::size_t n = 10000;
  std::vector<double> values(n);
  double norm = 0.0;
  for (std::size_t k = 1; k <= n; ++k) norm += std::pow(static_cast<double>(k), -0.5);
  for (std::size_t k = 0; k < n; ++k)
    values[k] = std::pow(static_cast<double>(k + 1), -0.5) / norm;

  std::mt19937_64 rng(4242);
  std::vector<double> a = values, b = values;
  deterministic_shuffle(a, rng);
  deterministic_shuffle(b, rng);
  const JointHistogram joint =
      joint_histogram(rank_from_values(a), rank_from_values(b), 0.25);
  const JointHistogram prod = product_histogram(joint);

  // every populated product cell agrees with the joint count within a
  // generous multinomial noise band
  for (const auto& [key, expected] : prod.cells) {
    const auto it = joint.cells.find(key);
    const double observed = it == joint.cells.end() ? 0.0 : it->second;
    const double band = 6.0 * std::sqrt(expected) + 6.0;
    CHECK(std::abs(observed - expected) <= band);
  }
}

TEST_CASE("critical set: uniform ranks with f=1 include everyone") {
  const RankVector u = uniform_rank(10);
  const CriticalSet set = critical_set(u, u, 1.0);
  CHECK(set.members.size() == 10);
  CHECK(set.cutoff == 10);
}

TEST_CASE("critical set: opposed chain rankings at f=0.5 are empty") {
  // rankings are exact mirrors: K = (1,2), K* = (2,1); cutoff 1 each
  RankVector rho = rank_from_values({0.649, 0.351});
  RankVector rho_star = rank_from_values({0.351, 0.649});
  const CriticalSet set = critical_set(rho, rho_star, 0.5);
  CHECK(set.cutoff == 1);
  CHECK(set.members.empty());
}

TEST_CASE("critical set members sort by K + K* then node id") {
  RankVector rho = rank_from_values({0.4, 0.3, 0.2, 0.1});
  RankVector rho_star = rank_from_values({0.1, 0.4, 0.3, 0.2});
  const CriticalSet set = critical_set(rho, rho_star, 0.75);
  REQUIRE(set.members.size() >= 2);
  for (std::size_t i = 1; i < set.members.size(); ++i) {
    const auto sum_prev = std::get<1>(set.members[i - 1]) + std::get<2>(set.members[i - 1]);
    const auto sum_here = std::get<1>(set.members[i]) + std::get<2>(set.members[i]);
    CHECK(sum_prev <= sum_here);
  }
  for (const auto& [node, k, k_star] : set.members) {
    CHECK(k <= set.cutoff);
    CHECK(k_star <= set.cutoff);
  }
}
