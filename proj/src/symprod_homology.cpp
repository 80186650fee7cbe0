#include "lagmatch/symprod_homology.hpp"

#include <algorithm>
#include <sstream>

#include "lagmatch/errors.hpp"

namespace lagmatch {

SymClass::SymClass(int n, SymplecticLattice lattice) : n_(n), lattice_(lattice) {
  if (n < 0) throw std::invalid_argument("symmetric product with a negative number of points");
}

SymClass SymClass::phi(int n, int u_power, const ExtElement& omega) {
  SymClass x(n, omega.lattice());
  for (const auto& [s, c] : omega.terms()) x.add_term({u_power, s}, c);
  return x;
}

SymClass SymClass::monomial(int n, SymplecticLattice lattice, Monomial m, const Rational& c) {
  SymClass x(n, lattice);
  x.add_term(m, c);
  return x;
}

Rational SymClass::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymClass::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (m.u_power < 0) throw std::invalid_argument("negative U-power");
  if (lattice_.rank() < 64 && (m.lambda >> lattice_.rank()) != 0) {
    throw LatticeMismatch("monomial index beyond lattice rank");
  }
  if (m.u_power + m.lambda_degree() > n_) {
    throw RelationNeeded("monomial U^" + std::to_string(m.u_power) + " with Lambda-degree " +
                         std::to_string(m.lambda_degree()) + " leaves the range i + |S| <= " +
                         std::to_string(n_));
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SymClass::require_compatible(const SymClass& rhs, const char* what) const {
  require_same_lattice(lattice_, rhs.lattice_, what);
  if (n_ != rhs.n_) {
    throw LatticeMismatch(std::string(what) + ": Sym^" + std::to_string(n_) + " vs Sym^" +
                          std::to_string(rhs.n_));
  }
}

SymClass& SymClass::operator+=(const SymClass& rhs) {
  require_compatible(rhs, "sum of classes");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

SymClass& SymClass::operator-=(const SymClass& rhs) {
  require_compatible(rhs, "difference of classes");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

SymClass& SymClass::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::string SymClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string word;
    if (m.u_power == 1) word = "U";
    if (m.u_power > 1) word = "U^" + std::to_string(m.u_power);
    std::string lambda;
    for (int idx : subset_indices(m.lambda)) {
      if (!lambda.empty()) lambda += "^";
      lambda += lattice_.label(idx);
    }
    if (!word.empty() && !lambda.empty()) word += " ";
    word += lambda;
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

int homological_degree(int n, const Monomial& m) { return 2 * (n - m.u_power) - m.lambda_degree(); }

std::vector<Monomial> basis(int n, SymplecticLattice lattice) {
  if (n < 0) throw std::invalid_argument("basis of Sym^n with n < 0");
  std::vector<Monomial> out;
  for (int i = 0; i <= n; ++i) {
    std::vector<Subset> masks;
    for (int k = 0; k <= std::min(n - i, lattice.rank()); ++k) {
      for (Subset s : subsets_of_size(lattice.rank(), k)) masks.push_back(s);
    }
    std::sort(masks.begin(), masks.end());
    for (Subset s : masks) out.push_back({i, s});
  }
  return out;
}

Integer poincare_polynomial_dimension(int n, int g) {
  if (n < 0 || g < 0) throw std::invalid_argument("negative n or g");
  Integer total = 0;
  for (int k = 0; k <= std::min(n, 2 * g); ++k) total += (n + 1 - k) * binomial(2 * g, k);
  return total;
}

SymClass wedge_lambda(const ExtElement& omega, const SymClass& x) {
  require_same_lattice(omega.lattice(), x.lattice(), "wedge_lambda");
  SymClass out(x.points(), x.lattice());
  for (const auto& [m, c] : x.terms()) {
    for (const auto& [s, d] : omega.terms()) {
      const int sign = wedge_sign(s, m.lambda);
      if (sign == 0) continue;
      out.add_term({m.u_power, s | m.lambda}, sign * c * d);
    }
  }
  return out;
}

SymClass cap_mu(const H1Vector& l, const SymClass& x) {
  return wedge_lambda(ExtElement::from_vector(l), x);
}

SymClass shift_u(const SymClass& x) {
  SymClass out(x.points(), x.lattice());
  for (const auto& [m, c] : x.terms()) out.add_term({m.u_power + 1, m.lambda}, c);
  return out;
}

SymClass cap_u_classical(const SymClass& x) {
  const int n = x.points();
  const int g = x.lattice().genus();
  if (2 * n > g - 1) {
    throw RegimeViolation("classical U-action needs n <= (g - 1)/2; got n = " + std::to_string(n) +
                          ", g = " + std::to_string(g));
  }
  return shift_u(x);
}

SymClass cap_u_quantum_g0(const SymClass& x) {
  if (x.lattice().genus() != 0) throw RegimeViolation("genus-zero quantum U-action on a genus > 0 class");
  const int n = x.points();
  SymClass out(n, x.lattice());
  for (const auto& [m, c] : x.terms()) out.add_term({m.u_power == n ? 0 : m.u_power + 1, 0}, c);
  return out;
}

SymClass cap_u_quantum_eta_power(int i, int n, SymplecticLattice lattice) {
  const int g = lattice.genus();
  if (g == 0 || n < g) {
    throw RegimeViolation("eta-power quantum formula needs n >= g > 0; got n = " + std::to_string(n) +
                          ", g = " + std::to_string(g));
  }
  if (i < 0) throw std::invalid_argument("negative eta power");
  if (i >= n) throw RelationNeeded("eta^{n+1} requires a truncation relation that is not available");
  SymClass out = SymClass::phi(n, i + 1, ExtElement::scalar(lattice, 1));
  out += SymClass::phi(n, 0, theta_divided(g - n + i, lattice));
  out -= SymClass::phi(n, i, theta_divided(g - n, lattice));
  return out;
}

RestrictionClasses restriction_classes(int n, int g) {
  RestrictionClasses r;
  r.one_two = {Rational(2 * n), Rational(-2)};
  r.vertical_c1 = {Rational(2 - 2 * g), Rational(0)};
  r.macdonald_c1 = {Rational(n + 1 - g), Rational(-1)};
  return r;
}

}  // namespace lagmatch
