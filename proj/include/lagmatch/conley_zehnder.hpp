/**
 * Conley-Zehnder index of a sampled path of symplectic matrices starting at
 * the identity.
 *
 * The graph of the path, twisted by an anti-symplectic reflection, is a path
 * of Lagrangians in R^{4n}; its Maslov index relative to the twisted
 * diagonal is read off from continuous lifts of the eigenvalue angles of
 * S_Gr S_Delta^{-1}, where S_L = Z conj(Z)^{-1} for a complex frame Z of L.
 * Eigenvalue 1 of that unitary matrix means Gr(Psi(t)) meets the diagonal.
 */
#pragma once

#include <Eigen/Dense>
#include <vector>

namespace lagmatch {

using RealMatrix = Eigen::MatrixXd;

struct CZOptions {
  double symplectic_tolerance = 1e-6;
  /// Largest admissible eigenvalue-angle jump between consecutive samples.
  double max_angle_step = 0.39269908169872414;  // pi/8
  /// Smallest singular value of I - M_end treated as nonzero.
  double degeneracy_tolerance = 1e-9;
};

struct CZResult {
  long long index = 0;
  double det_identity_minus_end = 0;
  /// (n - CZ) mod 2 == 0 exactly when det(I - M_end) > 0.
  bool parity_consistent = false;
  double max_step = 0;
};

/// Throws std::invalid_argument (shape, non-symplectic sample, start not the
/// identity), DegenerateEndpoint, ResolutionError.
CZResult conley_zehnder(const std::vector<RealMatrix>& path, const CZOptions& options = {});

/// The standard complex structure [[0, -I], [I, 0]] on R^{2n}.
RealMatrix standard_j(int n);
bool is_symplectic(const RealMatrix& m, double tol);
/// Block-diagonal direct sum; coordinates reordered so both summands keep
/// their (q, p) splitting.
RealMatrix symplectic_direct_sum(const RealMatrix& a, const RealMatrix& b);

}  // namespace lagmatch
