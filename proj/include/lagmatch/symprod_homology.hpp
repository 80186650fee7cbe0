/**
 * Monomial model of H^*(Sym^n Sigma; Q): classes U^i (x) e_S with
 * i + |S| <= n, and the module actions of H_1 classes and of U.
 *
 * Products that would leave the monomial range raise RelationNeeded; no
 * truncation relations are guessed.
 */
#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "lagmatch/exterior_algebra.hpp"

namespace lagmatch {

struct Monomial {
  int u_power = 0;
  Subset lambda = 0;

  int lambda_degree() const { return subset_size(lambda); }
  auto operator<=>(const Monomial&) const = default;
};

class SymClass {
 public:
  using Terms = std::map<Monomial, Rational>;

  SymClass() = default;
  SymClass(int n, SymplecticLattice lattice);

  /// U^i (x) omega, i.e. Phi(eta^i (x) omega).
  static SymClass phi(int n, int u_power, const ExtElement& omega);
  static SymClass monomial(int n, SymplecticLattice lattice, Monomial m, const Rational& c = 1);

  int points() const { return n_; }
  const SymplecticLattice& lattice() const { return lattice_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;

  /// Range-checked; throws RelationNeeded when i + |S| > n.
  void add_term(const Monomial& m, const Rational& c);

  SymClass& operator+=(const SymClass& rhs);
  SymClass& operator-=(const SymClass& rhs);
  SymClass& operator*=(const Rational& c);
  friend SymClass operator+(SymClass x, const SymClass& y) { return x += y; }
  friend SymClass operator-(SymClass x, const SymClass& y) { return x -= y; }
  friend SymClass operator*(const Rational& c, SymClass x) { return x *= c; }

  bool operator==(const SymClass&) const = default;

  std::string to_string() const;

 private:
  void require_compatible(const SymClass& rhs, const char* what) const;

  int n_ = 0;
  SymplecticLattice lattice_;
  Terms terms_;
};

/// Homological degree 2(n - i) - |S|.
int homological_degree(int n, const Monomial& m);
/// Z/2 grading |S| mod 2.
inline int parity(const Monomial& m) { return m.lambda_degree() % 2; }

/// All (i, S) with i + |S| <= n, ordered by (i, S).
std::vector<Monomial> basis(int n, SymplecticLattice lattice);

/// sum_{k=0}^{min(n, 2g)} (n + 1 - k) C(2g, k).
Integer poincare_polynomial_dimension(int n, int g);

/// Wedges the Lambda-factor on the left by omega.
SymClass wedge_lambda(const ExtElement& omega, const SymClass& x);
/// l . x = mu(l) cap x.
SymClass cap_mu(const H1Vector& l, const SymClass& x);
/// U^i (x) e_S -> U^{i+1} (x) e_S, range-checked, no regime check.
SymClass shift_u(const SymClass& x);

/// U . Phi(c) = Phi(eta . c), valid for n <= (g - 1)/2.
SymClass cap_u_classical(const SymClass& x);
/// Genus zero: U^i -> U^{i+1} for i < n and U^n -> 1.
SymClass cap_u_quantum_g0(const SymClass& x);
/// U . Phi(eta^i) = Phi(eta^{i+1} + theta_{g-n+i} - theta_{g-n} eta^i) for
/// n >= g > 0 and 0 <= i <= n - 1.
SymClass cap_u_quantum_eta_power(int i, int n, SymplecticLattice lattice);

/// Coefficients of a class a*eta + b*theta in H^2(Sym^n Sigma).
struct EtaThetaClass {
  Rational eta;
  Rational theta;
  bool operator==(const EtaThetaClass&) const = default;
};

struct RestrictionClasses {
  EtaThetaClass one_two;        ///< 1^{[2]} restricted to a fibre
  EtaThetaClass vertical_c1;    ///< c_1(T^v Y)^{[1]} restricted to a fibre
  EtaThetaClass macdonald_c1;   ///< c_1(Sym^n Sigma)
};

RestrictionClasses restriction_classes(int n, int g);

}  // namespace lagmatch
