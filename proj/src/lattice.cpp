#include "lagmatch/lattice.hpp"

#include <numeric>
#include <stdexcept>

#include "lagmatch/errors.hpp"

namespace lagmatch {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer matrix overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer matrix overflow");
  return r;
}

}  // namespace

SymplecticLattice::SymplecticLattice(int genus) : genus_(genus) {
  if (genus < 0 || genus > kMaxGenus) {
    throw std::invalid_argument("genus out of range [0, " + std::to_string(kMaxGenus) + "]");
  }
}

int SymplecticLattice::a(int i) const {
  if (i < 1 || i > genus_) throw std::out_of_range("a_i index out of range");
  return i - 1;
}

int SymplecticLattice::b(int i) const {
  if (i < 1 || i > genus_) throw std::out_of_range("b_i index out of range");
  return genus_ + i - 1;
}

int SymplecticLattice::form(int row, int col) const {
  if (row < genus_ && col == row + genus_) return 1;
  if (row >= genus_ && col == row - genus_) return -1;
  return 0;
}

std::string SymplecticLattice::label(int index) const {
  if (index < 0 || index >= rank()) throw std::out_of_range("basis index out of range");
  return index < genus_ ? "a" + std::to_string(index + 1) : "b" + std::to_string(index - genus_ + 1);
}

void require_same_lattice(const SymplecticLattice& x, const SymplecticLattice& y,
                          const char* what) {
  if (!(x == y)) {
    throw LatticeMismatch(std::string(what) + ": genus " + std::to_string(x.genus()) +
                          " vs genus " + std::to_string(y.genus()));
  }
}

H1Vector::H1Vector(SymplecticLattice lattice, std::vector<std::int64_t> coords)
    : lattice_(lattice), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != lattice_.rank()) {
    throw LatticeMismatch("H1 vector of length " + std::to_string(coords_.size()) +
                          " on a lattice of rank " + std::to_string(lattice_.rank()));
  }
}

H1Vector H1Vector::zero(SymplecticLattice lattice) {
  return H1Vector(lattice, std::vector<std::int64_t>(static_cast<std::size_t>(lattice.rank()), 0));
}

H1Vector H1Vector::basis(SymplecticLattice lattice, int index) {
  H1Vector v = zero(lattice);
  v.coords_.at(static_cast<std::size_t>(index)) = 1;
  return v;
}

bool H1Vector::is_zero() const {
  for (auto c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool H1Vector::is_primitive() const {
  std::int64_t g = 0;
  for (auto c : coords_) g = std::gcd(g, c);
  return g == 1;
}

std::int64_t intersection(const H1Vector& x, const H1Vector& y) {
  require_same_lattice(x.lattice(), y.lattice(), "intersection");
  const int g = x.lattice().genus();
  std::int64_t s = 0;
  for (int i = 0; i < g; ++i) {
    s = checked_add(s, checked_mul(x[i], y[i + g]));
    s = checked_add(s, -checked_mul(x[i + g], y[i]));
  }
  return s;
}

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

IntMatrix::IntMatrix(const std::vector<std::vector<std::int64_t>>& rows)
    : IntMatrix(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size())) {
  for (int r = 0; r < rows_; ++r) {
    if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != cols_) {
      throw std::invalid_argument("ragged integer matrix");
    }
    for (int c = 0; c < cols_; ++c) (*this)(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("integer matrix product: dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const std::int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        out(i, j) = checked_add(out(i, j), checked_mul(a, rhs(k, j)));
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

std::vector<std::int64_t> IntMatrix::apply(const std::vector<std::int64_t>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  std::vector<std::int64_t> out(static_cast<std::size_t>(rows_), 0);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      out[static_cast<std::size_t>(i)] =
          checked_add(out[static_cast<std::size_t>(i)], checked_mul((*this)(i, j), v[static_cast<std::size_t>(j)]));
    }
  }
  return out;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)].push_back((*this)(i, j));
  }
  return out;
}

bool is_symplectic(const IntMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) return false;
  const SymplecticLattice lattice(m.rows() / 2);
  IntMatrix j(m.rows(), m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.rows(); ++c) j(r, c) = lattice.form(r, c);
  }
  return m.transpose() * j * m == j;
}

SpMatrix::SpMatrix(SymplecticLattice lattice, IntMatrix entries)
    : lattice_(lattice), entries_(std::move(entries)) {
  if (entries_.rows() != lattice_.rank() || entries_.cols() != lattice_.rank()) {
    throw LatticeMismatch("symplectic matrix of size " + std::to_string(entries_.rows()) + "x" +
                          std::to_string(entries_.cols()) + " on a lattice of rank " +
                          std::to_string(lattice_.rank()));
  }
  if (!is_symplectic(entries_)) throw NotSymplectic("matrix does not preserve the intersection form");
}

SpMatrix SpMatrix::identity(SymplecticLattice lattice) {
  return SpMatrix(lattice, IntMatrix::identity(lattice.rank()));
}

SpMatrix SpMatrix::operator*(const SpMatrix& rhs) const {
  require_same_lattice(lattice_, rhs.lattice_, "symplectic product");
  return SpMatrix(lattice_, entries_ * rhs.entries_);
}

SpMatrix SpMatrix::inverse() const {
  // M^{-1} = J^{-1} M^T J; with J = [[0, I], [-I, 0]] this is
  // [[D^T, -B^T], [-C^T, A^T]] for M = [[A, B], [C, D]].
  const int g = lattice_.genus();
  IntMatrix inv(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      inv(i, j) = entries_(j + g, i + g);
      inv(i, j + g) = -entries_(j, i + g);
      inv(i + g, j) = -entries_(j + g, i);
      inv(i + g, j + g) = entries_(j, i);
    }
  }
  return SpMatrix(lattice_, inv);
}

H1Vector SpMatrix::apply(const H1Vector& v) const {
  require_same_lattice(lattice_, v.lattice(), "symplectic action");
  return H1Vector(lattice_, entries_.apply(v.coords()));
}

namespace elementary {

SpMatrix shear_upper(SymplecticLattice lattice, int i, std::int64_t k) {
  IntMatrix m = IntMatrix::identity(lattice.rank());
  m(lattice.a(i), lattice.b(i)) = k;
  return SpMatrix(lattice, m);
}

SpMatrix shear_lower(SymplecticLattice lattice, int i, std::int64_t k) {
  IntMatrix m = IntMatrix::identity(lattice.rank());
  m(lattice.b(i), lattice.a(i)) = k;
  return SpMatrix(lattice, m);
}

SpMatrix mix(SymplecticLattice lattice, int i, int j, std::int64_t k) {
  if (i == j) throw std::invalid_argument("mix needs two distinct indices");
  IntMatrix m = IntMatrix::identity(lattice.rank());
  m(lattice.a(i), lattice.a(j)) = k;
  m(lattice.b(j), lattice.b(i)) = -k;
  return SpMatrix(lattice, m);
}

}  // namespace elementary

SpMatrix adapted_basis(const H1Vector& circle) {
  if (!circle.is_primitive()) throw std::invalid_argument("adapted basis needs a primitive class");
  const SymplecticLattice lattice = circle.lattice();
  const int g = lattice.genus();
  SpMatrix p = SpMatrix::identity(lattice);
  H1Vector v = circle;
  auto step = [&](const SpMatrix& e) {
    p = e * p;
    v = e.apply(v);
  };
  auto x = [&](int i) { return v[lattice.a(i)]; };
  auto y = [&](int i) { return v[lattice.b(i)]; };

  // Clear every b-coordinate by a Euclidean algorithm inside each plane.
  for (int i = 1; i <= g; ++i) {
    while (y(i) != 0) {
      step(elementary::shear_upper(lattice, i, -(x(i) / y(i))));
      if (x(i) == 0) {
        step(elementary::shear_upper(lattice, i, 1));
        step(elementary::shear_lower(lattice, i, -1));
        break;
      }
      step(elementary::shear_lower(lattice, i, -(y(i) / x(i))));
    }
  }
  // Gather the a-coordinates into a_1.
  for (int j = 2; j <= g; ++j) {
    while (x(j) != 0) {
      step(elementary::mix(lattice, 1, j, -(x(1) / x(j))));
      if (x(1) == 0) {
        step(elementary::mix(lattice, 1, j, 1));
        step(elementary::mix(lattice, j, 1, -1));
        break;
      }
      step(elementary::mix(lattice, j, 1, -(x(j) / x(1))));
    }
  }
  if (x(1) == -1) {
    IntMatrix flip = IntMatrix::identity(lattice.rank());
    flip(lattice.a(1), lattice.a(1)) = -1;
    flip(lattice.b(1), lattice.b(1)) = -1;
    step(SpMatrix(lattice, flip));
  }
  if (!(v == H1Vector::a(lattice, 1))) {
    throw std::logic_error("adapted basis reduction did not reach a_1");
  }
  return p;
}

IntMatrix standard_projection(int genus) {
  if (genus < 1) throw std::invalid_argument("projection needs genus >= 1");
  const SymplecticLattice src(genus);
  const SymplecticLattice dst(genus - 1);
  IntMatrix q(dst.rank(), src.rank());
  for (int i = 2; i <= genus; ++i) {
    q(dst.a(i - 1), src.a(i)) = 1;
    q(dst.b(i - 1), src.b(i)) = 1;
  }
  return q;
}

IntMatrix standard_inclusion(int genus) {
  const SymplecticLattice src(genus);
  const SymplecticLattice dst(genus + 1);
  IntMatrix q(dst.rank(), src.rank());
  for (int i = 1; i <= genus; ++i) {
    q(dst.a(i + 1), src.a(i)) = 1;
    q(dst.b(i + 1), src.b(i)) = 1;
  }
  return q;
}

}  // namespace lagmatch
