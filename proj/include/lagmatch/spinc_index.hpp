/**
 * Topological bookkeeping for broken fibrations over S^2: Euler
 * characteristic, formal dimension of spin-c structures, the Taubes
 * correspondence, admissibility, monotonicity thresholds, grading moduli and
 * assorted index formulas.
 *
 * Cohomology classes (c_1, Taubes classes) are stored by their pairings with
 * the H_2 basis, c_i = <c, x_i>. Homology classes such as fibre classes are
 * stored by coordinates in that basis.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lagmatch/rational.hpp"

namespace lagmatch {

using IntVector = std::vector<std::int64_t>;

struct FibrationRegion {
  std::string label;
  int base_euler = 0;
  std::vector<int> fiber_genera;
  /// One homology class per fibre component, or empty when unknown.
  std::vector<IntVector> fiber_classes;

  /// Sum over components of 2 - 2g.
  int fiber_euler() const;
};

struct RoundCircle {
  bool orientable = true;  ///< torus (true) or Klein bottle (false) attaching surface
};

struct H2Model {
  int rank = 0;
  std::vector<IntVector> intersection;
  IntVector canonical_c1;  ///< pairings of c_1(TX \ Z) with the basis
};

struct FibrationDescriptor {
  std::vector<FibrationRegion> regions;
  std::vector<RoundCircle> round_circles;
  int lefschetz_points = 0;
  int signature = 0;
  H2Model h2;

  /// Shapes, symmetry, nondegeneracy, fibre-class self-intersections.
  /// Throws InconsistentDescriptor.
  void validate() const;
};

struct SpinC {
  std::string label;
  IntVector c1;
};

/// <c, x> = x.x (mod 2) for every basis class x.
bool is_characteristic(const IntVector& c1, const H2Model& h2);

/// x . y through the intersection matrix.
std::int64_t h2_product(const IntVector& x, const IntVector& y, const H2Model& h2);
/// <c, x> = sum_i c_i x_i.
std::int64_t pairing(const IntVector& c, const IntVector& x);
/// c . c = c^T Q^{-1} c.
Rational c1_squared(const IntVector& c1, const H2Model& h2);

int euler_characteristic(const FibrationDescriptor& d);

/// (c_1^2 - 2 chi - 3 sigma) / 4; InconsistentDescriptor unless integral.
Integer formal_dimension(const SpinC& s, const FibrationDescriptor& d);
/// Same formula from the raw numbers.
Rational formal_dimension_value(const Rational& c1_sq, int chi, int sigma);

/// c_1 = canonical + 2 beta.
SpinC taubes_convert(const IntVector& beta, const FibrationDescriptor& d, std::string label = {});
/// beta = (c_1 - canonical) / 2; std::invalid_argument on an odd coordinate.
IntVector taubes_inverse(const SpinC& s, const FibrationDescriptor& d);

/// nu_R = (degree - chi_R) / 2 where degree = 2 nu + chi is the common value;
/// Inadmissible on a negative or non-integral entry.
std::vector<int> nu_function(const std::vector<int>& fiber_euler, int degree);

enum class Regime { MonotoneRegime, NegativeRegime, Inadmissible };
std::string to_string(Regime r);

struct AdmissibilityReport {
  Regime regime = Regime::Inadmissible;
  std::string clause;
  std::vector<std::string> notes;
};

/// Checks the fibre inequalities for every region with known fibre classes.
/// std::invalid_argument on a fibre with more than two components.
AdmissibilityReport admissibility(const SpinC& s, const FibrationDescriptor& d);

struct MonotonicityFlags {
  bool monotone = false;                 ///< n >= g
  bool correspondence_2negative = false; ///< n <= (2g - 1)/4
  std::optional<bool> separating_ok;     ///< n <= min(g1, g2)/2
  int c_min = 0;                         ///< |n + 1 - g|
};

MonotonicityFlags monotonicity_flags(int n, int g, std::optional<int> g1 = {}, std::optional<int> g2 = {});

struct WLambda {
  Rational prefactor;      ///< 1 + lambda n
  Rational one_two_coeff;  ///< -lambda / 2
  std::vector<Rational> w; ///< w_lambda coordinates
};

/// w = (lambda gamma + c1 / (chi + 2n)) / (1 + lambda n). Requires
/// 1 + lambda n > 0 and chi + 2n != 0 (std::invalid_argument otherwise).
WLambda w_lambda(int n, int chi, const Rational& lambda, const IntVector& gamma, const IntVector& c1);

/// gcd of the coordinates; 0 for the zero vector.
Integer grading_modulus(const IntVector& c1);

/// Div(c1) | 2 N and N | (n + 1 - g), with 0 | x meaning x = 0.
bool divisibility_check(const IntVector& c1, std::int64_t n_gamma, int n, int g);

std::int64_t lefschetz_index(std::int64_t a_selfint, std::int64_t c1_pairing);

/// mu_Q + sum rank_i chi_i.
std::int64_t matched_index(std::int64_t mu_q, const std::vector<std::int64_t>& ranks,
                           const std::vector<std::int64_t>& chis);

struct MaslovDisc {
  std::int64_t value;        ///< k + 1 - 2 g1
  std::int64_t count_check;  ///< 2k - (k - 1 + 2 g1)
};

MaslovDisc maslov_vanishing_disc(std::int64_t k, std::int64_t g1);

}  // namespace lagmatch
