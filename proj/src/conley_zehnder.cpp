#include "lagmatch/conley_zehnder.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lagmatch/errors.hpp"

namespace lagmatch {

namespace {

using ComplexMatrix = Eigen::MatrixXcd;
using cd = std::complex<double>;

/// Souriau matrix Z conj(Z)^{-1} of the Lagrangian {(a z, b z)} in
/// R^{2n} + R^{2n} with the form omega + omega.
ComplexMatrix souriau(const RealMatrix& a, const RealMatrix& b) {
  const Eigen::Index n = a.rows() / 2;
  const Eigen::Index dim = a.rows();
  RealMatrix x(dim, dim), y(dim, dim);
  x << a.topRows(n), b.topRows(n);
  y << a.bottomRows(n), b.bottomRows(n);
  ComplexMatrix z(dim, dim);
  z.real() = x;
  z.imag() = y;
  return z * z.conjugate().inverse();
}

double half_floor_ceil(double theta) {
  const double t = theta / (2 * std::numbers::pi);
  return (std::ceil(t) + std::floor(t)) / 2;
}

}  // namespace

RealMatrix standard_j(int n) {
  RealMatrix j = RealMatrix::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = -RealMatrix::Identity(n, n);
  j.bottomLeftCorner(n, n) = RealMatrix::Identity(n, n);
  return j;
}

bool is_symplectic(const RealMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) return false;
  const RealMatrix j = standard_j(static_cast<int>(m.rows() / 2));
  const double scale = std::max(1.0, m.squaredNorm());
  return (m.transpose() * j * m - j).norm() <= tol * scale;
}

RealMatrix symplectic_direct_sum(const RealMatrix& a, const RealMatrix& b) {
  const Eigen::Index n = a.rows() / 2;
  const Eigen::Index m = b.rows() / 2;
  // Index maps into the (q_a, q_b, p_a, p_b) ordering.
  auto ia = [n, m](Eigen::Index i) { return i < n ? i : i + m; };
  auto ib = [n, m](Eigen::Index i) { return i < m ? i + n : i + 2 * n; };
  RealMatrix out = RealMatrix::Zero(2 * (n + m), 2 * (n + m));
  for (Eigen::Index r = 0; r < 2 * n; ++r)
    for (Eigen::Index c = 0; c < 2 * n; ++c) out(ia(r), ia(c)) = a(r, c);
  for (Eigen::Index r = 0; r < 2 * m; ++r)
    for (Eigen::Index c = 0; c < 2 * m; ++c) out(ib(r), ib(c)) = b(r, c);
  return out;
}

CZResult conley_zehnder(const std::vector<RealMatrix>& path, const CZOptions& options) {
  if (path.size() < 2) throw std::invalid_argument("a path needs at least two samples");
  const Eigen::Index dim = path.front().rows();
  if (dim == 0 || dim % 2 != 0) throw std::invalid_argument("samples must be square of even size");
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (path[k].rows() != dim || path[k].cols() != dim) {
      throw std::invalid_argument("sample " + std::to_string(k) + " has the wrong shape");
    }
    if (!is_symplectic(path[k], options.symplectic_tolerance)) {
      throw std::invalid_argument("sample " + std::to_string(k) + " is not symplectic");
    }
  }
  const RealMatrix id = RealMatrix::Identity(dim, dim);
  if ((path.front() - id).norm() > options.symplectic_tolerance) {
    throw std::invalid_argument("path does not start at the identity");
  }

  const RealMatrix& end = path.back();
  Eigen::JacobiSVD<RealMatrix> svd(id - end);
  const double smallest = svd.singularValues()(dim - 1);
  if (smallest <= options.degeneracy_tolerance * std::max(1.0, end.norm())) {
    throw DegenerateEndpoint("det(I - M_end) = 0: the endpoint has eigenvalue 1");
  }

  const Eigen::Index n = dim / 2;
  RealMatrix reflect = id;
  reflect.bottomRightCorner(n, n) *= -1;
  const ComplexMatrix diag_inv = souriau(reflect, id).inverse();

  std::vector<double> theta(static_cast<std::size_t>(dim), 0.0);
  CZResult result;
  for (std::size_t k = 1; k < path.size(); ++k) {
    const ComplexMatrix w = souriau(reflect, path[k]) * diag_inv;
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(w, false);
    const Eigen::VectorXcd ev = solver.eigenvalues();
    std::vector<bool> used(static_cast<std::size_t>(dim), false);
    for (std::size_t j = 0; j < theta.size(); ++j) {
      const cd current = std::polar(1.0, theta[j]);
      std::size_t best = 0;
      double best_dist = INFINITY;
      for (Eigen::Index e = 0; e < dim; ++e) {
        if (used[static_cast<std::size_t>(e)]) continue;
        const double dist = std::abs(ev(e) - current);
        if (dist < best_dist) {
          best_dist = dist;
          best = static_cast<std::size_t>(e);
        }
      }
      used[best] = true;
      const double step = std::arg(ev(static_cast<Eigen::Index>(best)) / current);
      result.max_step = std::max(result.max_step, std::abs(step));
      if (std::abs(step) > options.max_angle_step) {
        throw ResolutionError("samples " + std::to_string(k - 1) + " and " + std::to_string(k) +
                              " are too far apart (eigenvalue angle jump " + std::to_string(step) + ")");
      }
      theta[j] += step;
    }
  }

  double total = 0;
  for (double t : theta) total += half_floor_ceil(t);
  result.index = std::llround(total);
  if (std::abs(total - static_cast<double>(result.index)) > 1e-9) {
    throw std::logic_error("Maslov count is not an integer");
  }
  result.det_identity_minus_end = (id - end).determinant();
  const bool even = ((static_cast<long long>(n) - result.index) % 2 + 2) % 2 == 0;
  result.parity_consistent = even == (result.det_identity_minus_end > 0);
  return result;
}

}  // namespace lagmatch
