/**
 * Dimensionally reduced field theory on symmetric-product homology:
 * elementary cobordism maps (index-1 and index-2 critical points),
 * mapping-class twists, closed evaluation of a circle-valued Morse cycle by
 * supertrace, and the fibered Alexander-polynomial oracle it is checked
 * against.
 *
 * All closed values are defined up to one global sign.
 */
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lagmatch/symprod_homology.hpp"

namespace lagmatch {

enum class MoveKind { Down, Up, Twist };

std::string to_string(MoveKind kind);

/// One elementary piece of a Morse cycle.
///
/// Down: genus g -> g - 1, one point fewer; the circle lives on the genus-g
/// lattice. Up: genus g -> g + 1, one point more; the circle lives on the
/// genus-(g+1) lattice. The zero circle encodes a separating circle. The
/// basis change B is symplectic with B * circle = a_1 and identifies the
/// smaller lattice with span(a_2..b_g).
class ElementaryMove {
 public:
  static ElementaryMove down(const H1Vector& circle, std::optional<SpMatrix> basis_change = {});
  static ElementaryMove up(const H1Vector& circle, std::optional<SpMatrix> basis_change = {});
  static ElementaryMove twist(const SpMatrix& map);

  MoveKind kind() const { return kind_; }
  const H1Vector& circle() const { return circle_; }
  /// Adapted basis for Down/Up, the mapping class for Twist.
  const SpMatrix& matrix() const { return matrix_; }
  bool separating() const { return kind_ != MoveKind::Twist && circle_.is_zero(); }

  int source_genus() const;
  int target_genus() const;
  int target_points(int source_points) const;

 private:
  ElementaryMove(MoveKind kind, H1Vector circle, SpMatrix matrix)
      : kind_(kind), circle_(std::move(circle)), matrix_(std::move(matrix)) {}
  static ElementaryMove with_circle(MoveKind kind, const H1Vector& circle,
                                    std::optional<SpMatrix> basis_change);

  MoveKind kind_;
  H1Vector circle_;
  SpMatrix matrix_;
};

/// Linear map SymClass(n, g) -> SymClass(n', g').
class SymMap {
 public:
  using Fn = std::function<SymClass(const Monomial&)>;

  SymMap(int source_points, int source_genus, int target_points, int target_genus, Fn on_basis);

  int source_points() const { return source_points_; }
  int source_genus() const { return source_genus_; }
  int target_points() const { return target_points_; }
  int target_genus() const { return target_genus_; }

  SymClass operator()(const SymClass& x) const;
  /// Matrix in the ordered bases basis(n, g) -> basis(n', g').
  RationalMatrix matrix() const;

 private:
  int source_points_;
  int source_genus_;
  int target_points_;
  int target_genus_;
  Fn on_basis_;
};

/// H^*(Sym^n Sigma) -> H^*(Sym^{n-1} Sigma-bar): contraction with [L] in the
/// adapted basis; identically zero for a separating circle.
SymMap down_map(const H1Vector& circle, int n, std::optional<SpMatrix> basis_change = {});
/// H^*(Sym^{n-1} Sigma-bar) -> H^*(Sym^n Sigma): U^i e_T -> U^i B^{-1}(a_1 ^ incl(e_T)).
SymMap up_map(const H1Vector& circle, int n, std::optional<SpMatrix> basis_change = {});
/// U^i e_S -> U^i Lambda(M) e_S.
SymMap twist_map(const SpMatrix& m, int n);

/// The map a move induces starting from `points` points.
SymMap move_map(const ElementaryMove& move, int points);

struct CycleStage {
  int genus;
  int points;
  bool operator==(const CycleStage&) const = default;
};

/// Fibre surfaces and elementary moves around a circle-valued Morse function
/// with no interior extrema.
struct MorseCycle {
  int genus = 0;
  int points = 0;
  std::vector<ElementaryMove> moves;

  /// Stage before each move plus the final stage; throws
  /// InconsistentDescriptor if genera or point counts do not match up or the
  /// cycle does not close.
  std::vector<CycleStage> stages() const;
  bool has_separating_move() const;
};

struct CycleEvaluation {
  Rational value;  ///< supertrace; meaningful up to sign
  std::vector<CycleStage> stages;
  std::size_t basis_size = 0;
};

/// Composes the move maps around the cycle and takes the supertrace. Columns
/// are distributed over `threads` workers; the result does not depend on it.
CycleEvaluation evaluate_cycle(const MorseCycle& cycle, unsigned threads = 1);

/// +-(a_0 + sum_{i>=1} a_i (t^i + t^{-i})), leading coefficient positive.
struct AlexanderForm {
  Integer a0;
  std::vector<Integer> a;  ///< a_1, a_2, ... with trailing zeros trimmed

  /// Symmetric extension: coefficient(-k) = coefficient(k), zero beyond the
  /// top degree.
  Integer coefficient(long long i) const;
  int degree() const { return static_cast<int>(a.size()); }
  std::string to_string() const;
  bool operator==(const AlexanderForm&) const = default;
};

/// Sign-normalises and trims.
AlexanderForm make_alexander_form(Integer a0, std::vector<Integer> a);

/// det(t I - M) / t^g read as a symmetric Laurent polynomial.
AlexanderForm alexander_fibered(const SpMatrix& m);

/// sum_{i >= 0} i a_{D+i} with offset D = g - 1 - n.
Integer fibered_oracle_value(const AlexanderForm& form, int n, int g);

/// sum_{j >= 1} j C(2g, g - d - j).
Integer segal_donaldson_dimension(int d, int g);

struct ConnectedSumResult {
  Rational value;              ///< always 0
  std::size_t move_index = 0;  ///< first separating move
  std::string reason;
  Rational evaluated;          ///< evaluate_cycle on the same cycle
};

/// Requires a separating Down or Up move.
ConnectedSumResult connected_sum_invariant(const MorseCycle& cycle, unsigned threads = 1);

struct ExampleReport {
  std::string name;
  int m = 0;
  int n = 0;
  bool vanishes = false;
  int u_exponent = 0;
  bool lambda_factor = false;
  Rational value;  ///< pairing value, up to global sign for s1s3_sum
  bool sign_ambiguous = false;
  std::string notation;
  std::vector<std::string> steps;
};

std::vector<std::string> example_names();
/// s2xs2: trivial S^2-bundle over S^2, class (m, n).
/// s1s3_sum: broken fibration on (S^1 x S^3) # (S^2 x S^2), class s_{m+1,n}.
ExampleReport worked_example(const std::string& name, int m, int n);

}  // namespace lagmatch
