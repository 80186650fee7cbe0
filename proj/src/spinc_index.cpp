#include "lagmatch/spinc_index.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "lagmatch/errors.hpp"

namespace lagmatch {

int FibrationRegion::fiber_euler() const {
  int chi = 0;
  for (int g : fiber_genera) chi += 2 - 2 * g;
  return chi;
}

namespace {

Integer to_integer(std::int64_t v) { return Integer(std::to_string(v)); }

/// Solves Q x = c over Q; InconsistentDescriptor if Q is singular.
std::vector<Rational> solve(const std::vector<IntVector>& q, const IntVector& c) {
  const std::size_t n = q.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(to_integer(q[i][j]));
    a[i][n] = Rational(to_integer(c[i]));
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw InconsistentDescriptor("intersection form is degenerate");
    std::swap(a[col], a[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k <= n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

void require_rank(const IntVector& v, const H2Model& h2, const std::string& what) {
  if (static_cast<int>(v.size()) != h2.rank) {
    throw InconsistentDescriptor(what + " has " + std::to_string(v.size()) + " coordinates, H_2 rank is " +
                                 std::to_string(h2.rank));
  }
}

}  // namespace

void FibrationDescriptor::validate() const {
  if (h2.rank < 0) throw InconsistentDescriptor("negative H_2 rank");
  if (static_cast<int>(h2.intersection.size()) != h2.rank) {
    throw InconsistentDescriptor("intersection matrix has " + std::to_string(h2.intersection.size()) +
                                 " rows, H_2 rank is " + std::to_string(h2.rank));
  }
  for (const auto& row : h2.intersection) require_rank(row, h2, "intersection matrix row");
  for (int i = 0; i < h2.rank; ++i) {
    for (int j = 0; j < i; ++j) {
      if (h2.intersection[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          h2.intersection[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
        throw InconsistentDescriptor("intersection matrix is not symmetric");
      }
    }
  }
  require_rank(h2.canonical_c1, h2, "canonical_c1");
  if (lefschetz_points < 0) throw InconsistentDescriptor("negative number of Lefschetz points");
  for (const auto& r : regions) {
    if (r.fiber_genera.empty()) throw InconsistentDescriptor("region '" + r.label + "' has no fibre components");
    for (int g : r.fiber_genera) {
      if (g < 0) throw InconsistentDescriptor("region '" + r.label + "' has a fibre of negative genus");
    }
    if (!r.fiber_classes.empty() && r.fiber_classes.size() != r.fiber_genera.size()) {
      throw InconsistentDescriptor("region '" + r.label + "' lists " + std::to_string(r.fiber_classes.size()) +
                                   " fibre classes for " + std::to_string(r.fiber_genera.size()) + " components");
    }
    for (const auto& f : r.fiber_classes) require_rank(f, h2, "fibre class of region '" + r.label + "'");
    if (r.fiber_classes.size() == 1 && h2_product(r.fiber_classes[0], r.fiber_classes[0], h2) != 0) {
      throw InconsistentDescriptor("fibre class of region '" + r.label + "' has nonzero self-intersection");
    }
  }
  if (h2.rank > 0) (void)solve(h2.intersection, IntVector(static_cast<std::size_t>(h2.rank), 0));
}

bool is_characteristic(const IntVector& c1, const H2Model& h2) {
  require_rank(c1, h2, "c1");
  for (int i = 0; i < h2.rank; ++i) {
    const auto diff = c1[static_cast<std::size_t>(i)] -
                      h2.intersection[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    if (diff % 2 != 0) return false;
  }
  return true;
}

std::int64_t h2_product(const IntVector& x, const IntVector& y, const H2Model& h2) {
  require_rank(x, h2, "class");
  require_rank(y, h2, "class");
  std::int64_t total = 0;
  for (int i = 0; i < h2.rank; ++i) {
    for (int j = 0; j < h2.rank; ++j) {
      total += x[static_cast<std::size_t>(i)] *
               h2.intersection[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
               y[static_cast<std::size_t>(j)];
    }
  }
  return total;
}

std::int64_t pairing(const IntVector& c, const IntVector& x) {
  if (c.size() != x.size()) throw std::invalid_argument("pairing of vectors of different lengths");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < c.size(); ++i) total += c[i] * x[i];
  return total;
}

Rational c1_squared(const IntVector& c1, const H2Model& h2) {
  require_rank(c1, h2, "c1");
  if (h2.rank == 0) return 0;
  const auto x = solve(h2.intersection, c1);
  Rational total = 0;
  for (std::size_t i = 0; i < c1.size(); ++i) total += Rational(to_integer(c1[i])) * x[i];
  return total;
}

int euler_characteristic(const FibrationDescriptor& d) {
  int chi = d.lefschetz_points;
  for (const auto& r : d.regions) chi += r.base_euler * r.fiber_euler();
  return chi;
}

Rational formal_dimension_value(const Rational& c1_sq, int chi, int sigma) {
  return (c1_sq - 2 * chi - 3 * sigma) / 4;
}

Integer formal_dimension(const SpinC& s, const FibrationDescriptor& d) {
  if (!is_characteristic(s.c1, d.h2)) {
    throw InconsistentDescriptor("c1 of '" + s.label + "' is not characteristic for the intersection form");
  }
  const Rational c2 = c1_squared(s.c1, d.h2);
  const Rational dim = formal_dimension_value(c2, euler_characteristic(d), d.signature);
  if (dim.get_den() != 1) {
    throw InconsistentDescriptor("formal dimension of '" + s.label + "' is " + to_string(dim) +
                                 ", not an integer");
  }
  return dim.get_num();
}

SpinC taubes_convert(const IntVector& beta, const FibrationDescriptor& d, std::string label) {
  require_rank(beta, d.h2, "beta");
  SpinC s{std::move(label), d.h2.canonical_c1};
  for (std::size_t i = 0; i < beta.size(); ++i) s.c1[i] += 2 * beta[i];
  return s;
}

IntVector taubes_inverse(const SpinC& s, const FibrationDescriptor& d) {
  require_rank(s.c1, d.h2, "c1");
  IntVector beta(s.c1.size());
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const auto diff = s.c1[i] - d.h2.canonical_c1[i];
    if (diff % 2 != 0) {
      throw std::invalid_argument("c1 - c1(TX) has odd coordinate " + std::to_string(i));
    }
    beta[i] = diff / 2;
  }
  return beta;
}

std::vector<int> nu_function(const std::vector<int>& fiber_euler, int degree) {
  std::vector<int> nu;
  for (int chi : fiber_euler) {
    const int twice = degree - chi;
    if (twice % 2 != 0) {
      throw Inadmissible("2 nu = " + std::to_string(degree) + " - " + std::to_string(chi) + " is odd");
    }
    if (twice < 0) {
      throw Inadmissible("negative point count for a fibre with chi = " + std::to_string(chi));
    }
    nu.push_back(twice / 2);
  }
  return nu;
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::MonotoneRegime: return "MonotoneRegime";
    case Regime::NegativeRegime: return "NegativeRegime";
    case Regime::Inadmissible: return "Inadmissible";
  }
  return "?";
}

AdmissibilityReport admissibility(const SpinC& s, const FibrationDescriptor& d) {
  AdmissibilityReport rep;
  bool two_component = false;
  for (const auto& r : d.regions) {
    if (r.fiber_genera.size() > 2) {
      throw std::invalid_argument("region '" + r.label + "' has a fibre with more than two components");
    }
    two_component = two_component || r.fiber_genera.size() == 2;
  }
  std::size_t checked = 0;
  bool all_negative = true;
  bool all_positive = true;
  bool lower_ok = true;
  for (const auto& r : d.regions) {
    if (r.fiber_classes.empty()) {
      rep.notes.push_back("region '" + r.label + "': no fibre classes, skipped");
      continue;
    }
    for (std::size_t k = 0; k < r.fiber_genera.size(); ++k) {
      const std::int64_t c = pairing(s.c1, r.fiber_classes[k]);
      const std::int64_t chi = 2 - 2 * r.fiber_genera[k];
      ++checked;
      std::string note = "region '" + r.label + "'";
      if (r.fiber_genera.size() > 1) note += " component " + std::to_string(k + 1);
      note += ": <c1, F> = " + std::to_string(c) + ", chi(F) = " + std::to_string(chi);
      rep.notes.push_back(note);
      if (c < chi) lower_ok = false;
      if (2 * c > chi) all_negative = false;
      if (c <= 0) all_positive = false;
    }
  }
  if (checked == 0) {
    rep.regime = Regime::Inadmissible;
    rep.clause = "no fibre classes to test";
    return rep;
  }
  if (!lower_ok) {
    rep.regime = Regime::Inadmissible;
    rep.clause = "fails <c1, F> >= chi(F)";
    return rep;
  }
  if (two_component) {
    rep.regime = all_negative ? Regime::NegativeRegime : Regime::Inadmissible;
    rep.clause = all_negative ? "two-component: chi(F) <= <c1, F> <= chi(F)/2"
                              : "two-component: fails <c1, F> <= chi(F)/2";
    return rep;
  }
  if (all_negative) {
    rep.regime = Regime::NegativeRegime;
    rep.clause = "negative: <c1, F> <= chi(F)/2";
  } else if (all_positive) {
    rep.regime = Regime::MonotoneRegime;
    rep.clause = "monotone: <c1, F> > 0";
  } else {
    rep.regime = Regime::Inadmissible;
    rep.clause = "fails both <c1, F> <= chi(F)/2 and <c1, F> > 0";
  }
  return rep;
}

MonotonicityFlags monotonicity_flags(int n, int g, std::optional<int> g1, std::optional<int> g2) {
  MonotonicityFlags f;
  f.monotone = n >= g;
  f.correspondence_2negative = 4 * n <= 2 * g - 1;
  if (g1 && g2) f.separating_ok = 2 * n <= std::min(*g1, *g2);
  f.c_min = std::abs(n + 1 - g);
  return f;
}

WLambda w_lambda(int n, int chi, const Rational& lambda, const IntVector& gamma, const IntVector& c1) {
  if (gamma.size() != c1.size()) throw std::invalid_argument("gamma and c1 have different lengths");
  const Rational prefactor = 1 + lambda * n;
  if (prefactor <= 0) throw std::invalid_argument("w_lambda needs 1 + lambda n > 0");
  if (chi + 2 * n == 0) throw std::invalid_argument("w_lambda needs chi + 2n != 0");
  WLambda out{prefactor, -lambda / 2, {}};
  for (std::size_t i = 0; i < c1.size(); ++i) {
    const Rational w = (lambda * Rational(to_integer(gamma[i])) + Rational(to_integer(c1[i])) / (chi + 2 * n)) / prefactor;
    out.w.push_back(w);
  }
  return out;
}

Integer grading_modulus(const IntVector& c1) {
  Integer g = 0;
  for (auto v : c1) g = gcd(g, to_integer(v));
  return g;
}

bool divisibility_check(const IntVector& c1, std::int64_t n_gamma, int n, int g) {
  auto divides = [](const Integer& a, const Integer& b) { return a == 0 ? b == 0 : b % a == 0; };
  const Integer div = grading_modulus(c1);
  return divides(div, 2 * to_integer(n_gamma)) && divides(to_integer(n_gamma), Integer(n + 1 - g));
}

std::int64_t lefschetz_index(std::int64_t a_selfint, std::int64_t c1_pairing) { return a_selfint + c1_pairing; }

std::int64_t matched_index(std::int64_t mu_q, const std::vector<std::int64_t>& ranks,
                           const std::vector<std::int64_t>& chis) {
  if (ranks.size() != chis.size()) throw std::invalid_argument("ranks and Euler characteristics differ in length");
  std::int64_t total = mu_q;
  for (std::size_t i = 0; i < ranks.size(); ++i) total += ranks[i] * chis[i];
  return total;
}

MaslovDisc maslov_vanishing_disc(std::int64_t k, std::int64_t g1) {
  if (g1 <= 0 || k < 0) throw std::invalid_argument("maslov_vanishing_disc needs g1 > 0 and k >= 0");
  return {k + 1 - 2 * g1, 2 * k - (k - 1 + 2 * g1)};
}

}  // namespace lagmatch
