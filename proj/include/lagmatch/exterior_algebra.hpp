/**
 * Exact exterior algebra Lambda^* H_1(Sigma; Q) over the symplectic lattice
 * of a closed surface.
 *
 * Monomials e_S are indexed by subsets S of the basis a_1..a_g, b_1..b_g,
 * stored as bitmasks; e_S is the wedge of its basis vectors in increasing
 * index order. Koszul signs are computed by transposition count.
 */
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lagmatch/lattice.hpp"
#include "lagmatch/rational.hpp"

namespace lagmatch {

using Subset = std::uint64_t;

inline int subset_size(Subset s) { return __builtin_popcountll(s); }
std::vector<int> subset_indices(Subset s);
/// All subsets of {0..rank-1} of size k, in increasing mask order.
std::vector<Subset> subsets_of_size(int rank, int k);

/// Sign of e_S ^ e_T relative to e_{S u T}; 0 when S and T meet.
int wedge_sign(Subset s, Subset t);

class ExtElement {
 public:
  using Terms = std::map<Subset, Rational>;

  ExtElement() = default;
  explicit ExtElement(SymplecticLattice lattice) : lattice_(lattice) {}

  static ExtElement scalar(SymplecticLattice lattice, const Rational& c);
  static ExtElement monomial(SymplecticLattice lattice, Subset s, const Rational& c = 1);
  static ExtElement from_vector(const H1Vector& v);

  const SymplecticLattice& lattice() const { return lattice_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(Subset s) const;
  /// Degree of a homogeneous element; -1 for zero, throws if mixed.
  int degree() const;

  void add_term(Subset s, const Rational& c);

  ExtElement& operator+=(const ExtElement& rhs);
  ExtElement& operator-=(const ExtElement& rhs);
  ExtElement& operator*=(const Rational& c);
  friend ExtElement operator+(ExtElement x, const ExtElement& y) { return x += y; }
  friend ExtElement operator-(ExtElement x, const ExtElement& y) { return x -= y; }
  friend ExtElement operator*(const Rational& c, ExtElement x) { return x *= c; }
  ExtElement operator-() const { return Rational(-1) * *this; }

  bool operator==(const ExtElement&) const = default;

  /// e.g. "a1^b1 - 1/2 a2"; "0" for zero.
  std::string to_string() const;

 private:
  SymplecticLattice lattice_;
  Terms terms_;
};

ExtElement wedge(const ExtElement& x, const ExtElement& y);

/// theta^m / m! for theta = sum_i a_i ^ b_i; the scalar 1 for m = 0 and 0 for
/// m < 0.
ExtElement theta_divided(int m, SymplecticLattice lattice);

/// Pushforward Lambda^*(q) along an integer matrix q: Z^{2g} -> Z^{2g'}.
ExtElement ext_map(const IntMatrix& q, const ExtElement& x);

/// Contraction with the circle class L followed by the projection q:
///   x_1 ^ .. ^ x_k  ->  sum_j (-1)^{j-1} (x_j . L) q(x_1) ^ .. ^ q(x_j)^ .. ^ q(x_k).
/// q is a (2g' x 2g) integer matrix; the result lives on the genus-g' lattice.
ExtElement contract(const H1Vector& circle, const ExtElement& x, const IntMatrix& q);

/// Action of M in Sp(2g; Z) on Lambda^*: e_S -> wedge of columns of M.
ExtElement ext_power_action(const SpMatrix& m, const ExtElement& x);

/// A degree-preserving endomorphism of a Z-graded space, stored as one
/// square block per degree.
struct GradedMap {
  std::vector<RationalMatrix> blocks;

  GradedMap compose(const GradedMap& rhs) const;  // (*this) o rhs
};

/// sum_k (-1)^k tr(F | degree k).
Rational supertrace(const GradedMap& f);

/// Lambda^k(M) in the basis subsets_of_size(2g, k), for k = 0..2g.
GradedMap ext_power_blocks(const SpMatrix& m);
/// Identity on Lambda^* H_1 of the genus-g lattice.
GradedMap ext_identity_blocks(SymplecticLattice lattice);

}  // namespace lagmatch
