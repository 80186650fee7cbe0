#include <doctest.h>

#include "lagmatch/conley_zehnder.hpp"
#include "lagmatch/errors.hpp"
#include "oracles.hpp"

using namespace lagmatch;

namespace {

std::vector<RealMatrix> rotation_path(double total, int samples) {
  std::vector<RealMatrix> out;
  for (int k = 0; k <= samples; ++k) out.push_back(oracle::rotation(total * k / samples));
  out.front() = RealMatrix::Identity(2, 2);
  return out;
}

std::vector<RealMatrix> direct_sum(const std::vector<RealMatrix>& a, const std::vector<RealMatrix>& b) {
  std::vector<RealMatrix> out;
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back(symplectic_direct_sum(a[k], b[k]));
  return out;
}

}  // namespace

TEST_CASE("rotation paths") {
  const double pi = std::numbers::pi;
  for (double turns : {0.5, 1.0, 1.5, 2.5, 3.0, 5.0, -0.5, -1.0, -3.0}) {
    const auto path = rotation_path(pi * turns, 64);
    CHECK(conley_zehnder(path).index == oracle::rotation_cz(pi * turns));
  }
  CHECK(conley_zehnder(rotation_path(pi, 33)).index == 1);
}

TEST_CASE("short paths have CZ equal to half the signature (randomized)") {
  oracle::Rng rng(71);
  int cases = 0;
  while (cases < 100) {
    const int n = oracle::uniform(rng, 1, 3);
    const RealMatrix s = oracle::random_symmetric(2 * n, rng, 3.0);
    // exp(J0 S) must not have eigenvalue 1: S nondegenerate with norm below 2 pi.
    if (std::abs(s.determinant()) < 1e-3) continue;
    const auto path = oracle::exp_path(s, 80);
    CHECK(conley_zehnder(path).index == oracle::half_signature(s));
    ++cases;
  }
}

TEST_CASE("hyperbolic path") {
  std::vector<RealMatrix> path;
  for (int k = 0; k <= 20; ++k) {
    const double t = static_cast<double>(k) / 20;
    RealMatrix m(2, 2);
    m << std::exp(t), 0, 0, std::exp(-t);
    path.push_back(m);
  }
  const CZResult r = conley_zehnder(path);
  CHECK(r.index == 0);
  CHECK(r.det_identity_minus_end < 0);
  CHECK(r.parity_consistent);
}

TEST_CASE("direct sums add") {
  const double pi = std::numbers::pi;
  const auto a = rotation_path(pi, 96), b = rotation_path(3 * pi, 96);
  const auto sum = direct_sum(a, b);
  CHECK(conley_zehnder(sum).index == conley_zehnder(a).index + conley_zehnder(b).index);
  CHECK(conley_zehnder(sum).index == 4);
  CHECK(is_symplectic(sum.back(), 1e-9));
  CHECK(standard_j(2).isApprox(oracle::j0(2)));
}

TEST_CASE("parity matches the sign of det(I - M_end) (randomized)") {
  oracle::Rng rng(72);
  int cases = 0;
  while (cases < 120) {
    const int n = oracle::uniform(rng, 1, 2);
    std::vector<RealMatrix> gens;
    const int pieces = oracle::uniform(rng, 1, 3);
    for (int p = 0; p < pieces; ++p) gens.push_back(oracle::random_symmetric(2 * n, rng, 4.0));
    const auto path = oracle::piecewise_path(gens, 120);
    const RealMatrix end = path.back();
    const double det = (RealMatrix::Identity(2 * n, 2 * n) - end).determinant();
    if (std::abs(det) < 1e-4) continue;
    const CZResult r = conley_zehnder(path);
    const bool even = ((n - r.index) % 2 + 2) % 2 == 0;
    CHECK(even == (det > 0));
    CHECK(r.parity_consistent);
    ++cases;
  }
}

TEST_CASE("error conditions") {
  const int dim = 2;
  std::vector<RealMatrix> constant(5, RealMatrix::Identity(dim, dim));
  CHECK_THROWS_AS(conley_zehnder(constant), DegenerateEndpoint);
  CHECK_THROWS_AS(conley_zehnder(rotation_path(4 * std::numbers::pi + 1, 4)), ResolutionError);
  auto bad = rotation_path(std::numbers::pi, 8);
  bad[3] *= 2.0;
  CHECK_THROWS_AS(conley_zehnder(bad), std::invalid_argument);
  auto shifted = rotation_path(std::numbers::pi, 8);
  shifted.front() = oracle::rotation(0.3);
  CHECK_THROWS_AS(conley_zehnder(shifted), std::invalid_argument);
  CHECK_THROWS_AS(conley_zehnder({RealMatrix::Identity(2, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(conley_zehnder({RealMatrix::Identity(3, 3), RealMatrix::Identity(3, 3)}), std::invalid_argument);
}
