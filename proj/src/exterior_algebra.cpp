#include "lagmatch/exterior_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lagmatch/errors.hpp"

namespace lagmatch {

std::vector<int> subset_indices(Subset s) {
  std::vector<int> out;
  while (s != 0) {
    out.push_back(__builtin_ctzll(s));
    s &= s - 1;
  }
  return out;
}

std::vector<Subset> subsets_of_size(int rank, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > rank) return out;
  if (k == 0) return {Subset{0}};
  // Gosper's hack enumerates k-subsets in increasing numeric order.
  Subset s = (Subset{1} << k) - 1;
  const Subset limit = rank == 64 ? ~Subset{0} : (Subset{1} << rank);
  while (s < limit) {
    out.push_back(s);
    const Subset c = s & (~s + 1);
    const Subset r = s + c;
    if (r == 0) break;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

int wedge_sign(Subset s, Subset t) {
  if ((s & t) != 0) return 0;
  int inversions = 0;
  for (int idx : subset_indices(t)) {
    const Subset above = idx >= 63 ? Subset{0} : ~((Subset{1} << (idx + 1)) - 1);
    inversions += subset_size(s & above);
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

ExtElement ExtElement::scalar(SymplecticLattice lattice, const Rational& c) {
  return monomial(lattice, 0, c);
}

ExtElement ExtElement::monomial(SymplecticLattice lattice, Subset s, const Rational& c) {
  if (lattice.rank() < 64 && (s >> lattice.rank()) != 0) {
    throw LatticeMismatch("monomial index beyond lattice rank");
  }
  ExtElement x(lattice);
  x.add_term(s, c);
  return x;
}

ExtElement ExtElement::from_vector(const H1Vector& v) {
  ExtElement x(v.lattice());
  for (int i = 0; i < v.lattice().rank(); ++i) {
    if (v[i] != 0) x.add_term(Subset{1} << i, Rational(static_cast<long>(v[i])));
  }
  return x;
}

Rational ExtElement::coefficient(Subset s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

int ExtElement::degree() const {
  int d = -1;
  for (const auto& [s, c] : terms_) {
    const int k = subset_size(s);
    if (d >= 0 && k != d) throw std::domain_error("degree of an inhomogeneous element");
    d = k;
  }
  return d;
}

void ExtElement::add_term(Subset s, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExtElement& ExtElement::operator+=(const ExtElement& rhs) {
  require_same_lattice(lattice_, rhs.lattice_, "exterior sum");
  for (const auto& [s, c] : rhs.terms_) add_term(s, c);
  return *this;
}

ExtElement& ExtElement::operator-=(const ExtElement& rhs) {
  require_same_lattice(lattice_, rhs.lattice_, "exterior difference");
  for (const auto& [s, c] : rhs.terms_) add_term(s, -c);
  return *this;
}

ExtElement& ExtElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, v] : terms_) v *= c;
  return *this;
}

std::string ExtElement::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Subset, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    return subset_size(x.first) < subset_size(y.first);
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [s, c] : ordered) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string word;
    for (int idx : subset_indices(s)) {
      if (!word.empty()) word += "^";
      word += lattice_.label(idx);
    }
    if (word.empty()) {
      out << lagmatch::to_string(mag);
    } else if (mag == 1) {
      out << word;
    } else {
      out << lagmatch::to_string(mag) << " " << word;
    }
  }
  return out.str();
}

ExtElement wedge(const ExtElement& x, const ExtElement& y) {
  require_same_lattice(x.lattice(), y.lattice(), "wedge");
  ExtElement out(x.lattice());
  for (const auto& [s, c] : x.terms()) {
    for (const auto& [t, d] : y.terms()) {
      const int sign = wedge_sign(s, t);
      if (sign == 0) continue;
      out.add_term(s | t, sign * c * d);
    }
  }
  return out;
}

ExtElement theta_divided(int m, SymplecticLattice lattice) {
  if (m < 0) return ExtElement(lattice);
  ExtElement theta(lattice);
  for (int i = 1; i <= lattice.genus(); ++i) {
    theta += wedge(ExtElement::from_vector(H1Vector::a(lattice, i)),
                   ExtElement::from_vector(H1Vector::b(lattice, i)));
  }
  ExtElement power = ExtElement::scalar(lattice, 1);
  for (int k = 0; k < m; ++k) {
    power = wedge(power, theta);
    if (power.is_zero()) break;
  }
  power *= Rational(1) / Rational(factorial(m));
  return power;
}

ExtElement ext_map(const IntMatrix& q, const ExtElement& x) {
  if (q.cols() != x.lattice().rank()) {
    throw LatticeMismatch("ext_map: matrix has " + std::to_string(q.cols()) +
                          " columns, lattice rank is " + std::to_string(x.lattice().rank()));
  }
  if (q.rows() % 2 != 0) throw LatticeMismatch("ext_map: target rank must be even");
  const SymplecticLattice target(q.rows() / 2);
  std::vector<ExtElement> columns;
  columns.reserve(static_cast<std::size_t>(q.cols()));
  for (int j = 0; j < q.cols(); ++j) {
    std::vector<std::int64_t> col(static_cast<std::size_t>(q.rows()));
    for (int i = 0; i < q.rows(); ++i) col[static_cast<std::size_t>(i)] = q(i, j);
    columns.push_back(ExtElement::from_vector(H1Vector(target, col)));
  }
  ExtElement out(target);
  for (const auto& [s, c] : x.terms()) {
    ExtElement image = ExtElement::scalar(target, c);
    for (int idx : subset_indices(s)) {
      image = wedge(image, columns[static_cast<std::size_t>(idx)]);
      if (image.is_zero()) break;
    }
    out += image;
  }
  return out;
}

ExtElement contract(const H1Vector& circle, const ExtElement& x, const IntMatrix& q) {
  require_same_lattice(circle.lattice(), x.lattice(), "contract");
  if (q.cols() != x.lattice().rank() || q.rows() % 2 != 0) {
    throw LatticeMismatch("contract: projection has shape " + std::to_string(q.rows()) + "x" +
                          std::to_string(q.cols()));
  }
  const SymplecticLattice& lattice = x.lattice();
  std::vector<std::int64_t> pairing(static_cast<std::size_t>(lattice.rank()));
  for (int i = 0; i < lattice.rank(); ++i) {
    pairing[static_cast<std::size_t>(i)] = intersection(H1Vector::basis(lattice, i), circle);
  }
  ExtElement removed(lattice);
  for (const auto& [s, c] : x.terms()) {
    const auto idx = subset_indices(s);
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const std::int64_t p = pairing[static_cast<std::size_t>(idx[j])];
      if (p == 0) continue;
      const int sign = (j % 2 == 0) ? 1 : -1;
      removed.add_term(s & ~(Subset{1} << idx[j]), c * sign * Rational(static_cast<long>(p)));
    }
  }
  return ext_map(q, removed);
}

ExtElement ext_power_action(const SpMatrix& m, const ExtElement& x) {
  require_same_lattice(m.lattice(), x.lattice(), "ext_power_action");
  return ext_map(m.entries(), x);
}

GradedMap GradedMap::compose(const GradedMap& rhs) const {
  if (blocks.size() != rhs.blocks.size()) throw std::invalid_argument("graded maps with different degree ranges");
  GradedMap out;
  for (std::size_t k = 0; k < blocks.size(); ++k) out.blocks.push_back(blocks[k] * rhs.blocks[k]);
  return out;
}

Rational supertrace(const GradedMap& f) {
  Rational s = 0;
  for (std::size_t k = 0; k < f.blocks.size(); ++k) {
    if (!f.blocks[k].square()) {
      throw std::invalid_argument("supertrace: block in degree " + std::to_string(k) + " is not square");
    }
    const Rational t = f.blocks[k].trace();
    if (k % 2 == 0) {
      s += t;
    } else {
      s -= t;
    }
  }
  return s;
}

GradedMap ext_power_blocks(const SpMatrix& m) {
  const int rank = m.lattice().rank();
  GradedMap out;
  for (int k = 0; k <= rank; ++k) {
    const auto basis = subsets_of_size(rank, k);
    RationalMatrix block(basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
      const ExtElement image = ext_power_action(m, ExtElement::monomial(m.lattice(), basis[col]));
      for (std::size_t row = 0; row < basis.size(); ++row) block(row, col) = image.coefficient(basis[row]);
    }
    out.blocks.push_back(std::move(block));
  }
  return out;
}

GradedMap ext_identity_blocks(SymplecticLattice lattice) {
  GradedMap out;
  for (int k = 0; k <= lattice.rank(); ++k) {
    out.blocks.push_back(RationalMatrix::identity(subsets_of_size(lattice.rank(), k).size()));
  }
  return out;
}

}  // namespace lagmatch
