/**
 * First homology of a closed oriented surface of genus g as an integer
 * lattice with its intersection form, integer matrices acting on it, and
 * the symplectic subgroup Sp(2g; Z).
 *
 * Basis order is a_1..a_g, b_1..b_g (0-based indices 0..2g-1), with
 * a_i . b_i = +1, b_i . a_i = -1 and all other pairings zero.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lagmatch {

constexpr int kMaxGenus = 31;

class SymplecticLattice {
 public:
  SymplecticLattice() = default;
  explicit SymplecticLattice(int genus);

  int genus() const { return genus_; }
  int rank() const { return 2 * genus_; }

  /// 0-based basis index of a_i, b_i for 1 <= i <= g.
  int a(int i) const;
  int b(int i) const;

  /// Entry J(row, col) of the standard intersection matrix.
  int form(int row, int col) const;
  std::string label(int index) const;

  bool operator==(const SymplecticLattice&) const = default;

 private:
  int genus_ = 0;
};

void require_same_lattice(const SymplecticLattice& x, const SymplecticLattice& y,
                          const char* what);

class H1Vector {
 public:
  H1Vector() = default;
  H1Vector(SymplecticLattice lattice, std::vector<std::int64_t> coords);

  static H1Vector zero(SymplecticLattice lattice);
  static H1Vector basis(SymplecticLattice lattice, int index);
  static H1Vector a(SymplecticLattice lattice, int i) { return basis(lattice, lattice.a(i)); }
  static H1Vector b(SymplecticLattice lattice, int i) { return basis(lattice, lattice.b(i)); }

  const SymplecticLattice& lattice() const { return lattice_; }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  std::int64_t operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  /// gcd of the coordinates is 1.
  bool is_primitive() const;

  bool operator==(const H1Vector&) const = default;

 private:
  SymplecticLattice lattice_;
  std::vector<std::int64_t> coords_;
};

/// x^T J y.
std::int64_t intersection(const H1Vector& x, const H1Vector& y);

/// Integer matrix with overflow-checked arithmetic. Acts on column vectors.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  explicit IntMatrix(const std::vector<std::vector<std::int64_t>>& rows);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& operator()(int r, int c) { return data_[index(r, c)]; }
  std::int64_t operator()(int r, int c) const { return data_[index(r, c)]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix transpose() const;
  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const;
  std::vector<std::vector<std::int64_t>> to_rows() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Element of Sp(2g; Z); M^T J M = J is checked on construction.
class SpMatrix {
 public:
  SpMatrix() = default;
  SpMatrix(SymplecticLattice lattice, IntMatrix entries);

  static SpMatrix identity(SymplecticLattice lattice);

  const SymplecticLattice& lattice() const { return lattice_; }
  const IntMatrix& entries() const { return entries_; }
  std::int64_t operator()(int r, int c) const { return entries_(r, c); }

  SpMatrix operator*(const SpMatrix& rhs) const;
  /// J^{-1} M^T J.
  SpMatrix inverse() const;
  H1Vector apply(const H1Vector& v) const;

  bool operator==(const SpMatrix&) const = default;

 private:
  SymplecticLattice lattice_;
  IntMatrix entries_;
};

bool is_symplectic(const IntMatrix& m);

/// Elementary generators of Sp(2g; Z), used for basis completion and for
/// building test matrices.
namespace elementary {
/// a_i-coordinate += k * b_i-coordinate.
SpMatrix shear_upper(SymplecticLattice lattice, int i, std::int64_t k);
/// b_i-coordinate += k * a_i-coordinate.
SpMatrix shear_lower(SymplecticLattice lattice, int i, std::int64_t k);
/// a_i-coordinate += k * a_j-coordinate, compensated on the b-block.
SpMatrix mix(SymplecticLattice lattice, int i, int j, std::int64_t k);
}  // namespace elementary

/// A symplectic matrix B with B * circle = a_1. Requires a primitive circle.
SpMatrix adapted_basis(const H1Vector& circle);

/// (2g-2) x 2g matrix killing a_1, b_1 and sending a_i -> a_{i-1},
/// b_i -> b_{i-1}.
IntMatrix standard_projection(int genus);
/// 2(g+1) x 2g matrix sending a_i -> a_{i+1}, b_i -> b_{i+1}.
IntMatrix standard_inclusion(int genus);

}  // namespace lagmatch
