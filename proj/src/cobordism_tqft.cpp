#include "lagmatch/cobordism_tqft.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "lagmatch/errors.hpp"

namespace lagmatch {

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::Down: return "down";
    case MoveKind::Up: return "up";
    case MoveKind::Twist: return "twist";
  }
  return "?";
}

ElementaryMove ElementaryMove::with_circle(MoveKind kind, const H1Vector& circle,
                                           std::optional<SpMatrix> basis_change) {
  const SymplecticLattice lattice = circle.lattice();
  if (lattice.genus() < 1) throw std::invalid_argument("a critical circle needs a fibre of genus >= 1");
  if (!circle.is_zero() && !circle.is_primitive()) {
    throw std::invalid_argument("critical circle class must be primitive or zero");
  }
  if (basis_change) {
    require_same_lattice(basis_change->lattice(), lattice, "adapted basis");
    if (!circle.is_zero() && !(basis_change->apply(circle) == H1Vector::a(lattice, 1))) {
      throw std::invalid_argument("basis change does not send the circle to a_1");
    }
    return ElementaryMove(kind, circle, *basis_change);
  }
  SpMatrix b = circle.is_zero() ? SpMatrix::identity(lattice) : adapted_basis(circle);
  return ElementaryMove(kind, circle, std::move(b));
}

ElementaryMove ElementaryMove::down(const H1Vector& circle, std::optional<SpMatrix> basis_change) {
  return with_circle(MoveKind::Down, circle, std::move(basis_change));
}

ElementaryMove ElementaryMove::up(const H1Vector& circle, std::optional<SpMatrix> basis_change) {
  return with_circle(MoveKind::Up, circle, std::move(basis_change));
}

ElementaryMove ElementaryMove::twist(const SpMatrix& map) {
  return ElementaryMove(MoveKind::Twist, H1Vector::zero(map.lattice()), map);
}

int ElementaryMove::source_genus() const {
  const int g = circle_.lattice().genus();
  return kind_ == MoveKind::Up ? g - 1 : g;
}

int ElementaryMove::target_genus() const {
  const int g = circle_.lattice().genus();
  return kind_ == MoveKind::Down ? g - 1 : g;
}

int ElementaryMove::target_points(int source_points) const {
  switch (kind_) {
    case MoveKind::Down: return source_points - 1;
    case MoveKind::Up: return source_points + 1;
    case MoveKind::Twist: return source_points;
  }
  return source_points;
}

SymMap::SymMap(int source_points, int source_genus, int target_points, int target_genus, Fn on_basis)
    : source_points_(source_points),
      source_genus_(source_genus),
      target_points_(target_points),
      target_genus_(target_genus),
      on_basis_(std::move(on_basis)) {}

SymClass SymMap::operator()(const SymClass& x) const {
  if (x.points() != source_points_ || x.lattice().genus() != source_genus_) {
    throw LatticeMismatch("map defined on Sym^" + std::to_string(source_points_) + " of genus " +
                          std::to_string(source_genus_) + ", applied to Sym^" +
                          std::to_string(x.points()) + " of genus " +
                          std::to_string(x.lattice().genus()));
  }
  SymClass out(target_points_, SymplecticLattice(target_genus_));
  for (const auto& [m, c] : x.terms()) {
    SymClass image = on_basis_(m);
    image *= c;
    out += image;
  }
  return out;
}

RationalMatrix SymMap::matrix() const {
  const auto src = basis(source_points_, SymplecticLattice(source_genus_));
  const auto dst = basis(target_points_, SymplecticLattice(target_genus_));
  RationalMatrix mat(dst.size(), src.size());
  for (std::size_t col = 0; col < src.size(); ++col) {
    const SymClass image = on_basis_(src[col]);
    for (std::size_t row = 0; row < dst.size(); ++row) mat(row, col) = image.coefficient(dst[row]);
  }
  return mat;
}

namespace {

SpMatrix resolve_basis(const H1Vector& circle, std::optional<SpMatrix> basis_change) {
  if (basis_change) {
    require_same_lattice(basis_change->lattice(), circle.lattice(), "adapted basis");
    if (!(basis_change->apply(circle) == H1Vector::a(circle.lattice(), 1))) {
      throw std::invalid_argument("basis change does not send the circle to a_1");
    }
    return *basis_change;
  }
  return adapted_basis(circle);
}

void check_circle(const H1Vector& circle, int n) {
  if (circle.lattice().genus() < 1) throw std::invalid_argument("critical circle on a genus-0 fibre");
  if (n < 1) throw std::invalid_argument("elementary cobordism map needs n >= 1");
  if (!circle.is_zero() && !circle.is_primitive()) {
    throw std::invalid_argument("critical circle class must be primitive or zero");
  }
}

}  // namespace

SymMap down_map(const H1Vector& circle, int n, std::optional<SpMatrix> basis_change) {
  check_circle(circle, n);
  const SymplecticLattice big = circle.lattice();
  const SymplecticLattice small(big.genus() - 1);
  if (circle.is_zero()) {
    return SymMap(n, big.genus(), n - 1, small.genus(),
                  [n, small](const Monomial&) { return SymClass(n - 1, small); });
  }
  const SpMatrix b = resolve_basis(circle, std::move(basis_change));
  const H1Vector a1 = H1Vector::a(big, 1);
  const IntMatrix q = standard_projection(big.genus());
  return SymMap(n, big.genus(), n - 1, small.genus(), [=](const Monomial& m) {
    const ExtElement adapted = ext_power_action(b, ExtElement::monomial(big, m.lambda));
    return SymClass::phi(n - 1, m.u_power, contract(a1, adapted, q));
  });
}

SymMap up_map(const H1Vector& circle, int n, std::optional<SpMatrix> basis_change) {
  check_circle(circle, n);
  const SymplecticLattice big = circle.lattice();
  const SymplecticLattice small(big.genus() - 1);
  if (circle.is_zero()) {
    return SymMap(n - 1, small.genus(), n, big.genus(),
                  [n, big](const Monomial&) { return SymClass(n, big); });
  }
  const SpMatrix b_inv = resolve_basis(circle, std::move(basis_change)).inverse();
  const ExtElement a1 = ExtElement::from_vector(H1Vector::a(big, 1));
  const IntMatrix incl = standard_inclusion(small.genus());
  return SymMap(n - 1, small.genus(), n, big.genus(), [=](const Monomial& m) {
    const ExtElement lifted = wedge(a1, ext_map(incl, ExtElement::monomial(small, m.lambda)));
    return SymClass::phi(n, m.u_power, ext_power_action(b_inv, lifted));
  });
}

SymMap twist_map(const SpMatrix& m, int n) {
  const SymplecticLattice lattice = m.lattice();
  return SymMap(n, lattice.genus(), n, lattice.genus(), [=](const Monomial& mono) {
    return SymClass::phi(n, mono.u_power, ext_power_action(m, ExtElement::monomial(lattice, mono.lambda)));
  });
}

SymMap move_map(const ElementaryMove& move, int points) {
  switch (move.kind()) {
    case MoveKind::Down: return down_map(move.circle(), points, move.circle().is_zero() ? std::nullopt : std::optional(move.matrix()));
    case MoveKind::Up: return up_map(move.circle(), points + 1, move.circle().is_zero() ? std::nullopt : std::optional(move.matrix()));
    case MoveKind::Twist: return twist_map(move.matrix(), points);
  }
  throw std::logic_error("unknown move kind");
}

std::vector<CycleStage> MorseCycle::stages() const {
  if (genus < 0 || points < 0) throw InconsistentDescriptor("negative starting genus or point count");
  std::vector<CycleStage> out{{genus, points}};
  CycleStage cur{genus, points};
  for (std::size_t k = 0; k < moves.size(); ++k) {
    const ElementaryMove& mv = moves[k];
    if (mv.source_genus() != cur.genus) {
      throw InconsistentDescriptor("move " + std::to_string(k) + " (" + to_string(mv.kind()) +
                                   ") expects genus " + std::to_string(mv.source_genus()) +
                                   " but the fibre has genus " + std::to_string(cur.genus));
    }
    const int next_points = mv.target_points(cur.points);
    if (next_points < 0) {
      throw InconsistentDescriptor("move " + std::to_string(k) + " drops the point count below zero");
    }
    cur = {mv.target_genus(), next_points};
    // 2 nu + chi is preserved by each move.
    if (2 * cur.points + (2 - 2 * cur.genus) != 2 * points + (2 - 2 * genus)) {
      throw std::logic_error("2 nu + chi drifted along the cycle");
    }
    out.push_back(cur);
  }
  if (cur.genus != genus || cur.points != points) {
    throw InconsistentDescriptor("cycle does not close: ends at genus " + std::to_string(cur.genus) +
                                 " with " + std::to_string(cur.points) + " points, starts at genus " +
                                 std::to_string(genus) + " with " + std::to_string(points));
  }
  return out;
}

bool MorseCycle::has_separating_move() const {
  return std::any_of(moves.begin(), moves.end(), [](const ElementaryMove& m) { return m.separating(); });
}

CycleEvaluation evaluate_cycle(const MorseCycle& cycle, unsigned threads) {
  CycleEvaluation result;
  result.stages = cycle.stages();
  std::vector<SymMap> maps;
  for (std::size_t k = 0; k < cycle.moves.size(); ++k) {
    maps.push_back(move_map(cycle.moves[k], result.stages[k].points));
  }
  const SymplecticLattice lattice(cycle.genus);
  const auto start = basis(cycle.points, lattice);
  result.basis_size = start.size();

  std::vector<Rational> diagonal(start.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t col = begin; col < start.size(); col += stride) {
      SymClass x = SymClass::monomial(cycle.points, lattice, start[col]);
      for (const SymMap& f : maps) {
        x = f(x);
        if (x.is_zero()) break;
      }
      diagonal[col] = x.coefficient(start[col]);
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, start.size()))));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  result.value = 0;
  for (std::size_t col = 0; col < start.size(); ++col) {
    if (parity(start[col]) == 0) {
      result.value += diagonal[col];
    } else {
      result.value -= diagonal[col];
    }
  }
  return result;
}

Integer AlexanderForm::coefficient(long long i) const {
  if (i < 0) i = -i;
  if (i == 0) return a0;
  if (i > static_cast<long long>(a.size())) return 0;
  return a[static_cast<std::size_t>(i - 1)];
}

std::string AlexanderForm::to_string() const {
  std::ostringstream out;
  out << a0.get_str();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    out << (a[i] < 0 ? " - " : " + ");
    const Integer mag = abs(a[i]);
    if (mag != 1) out << mag.get_str() << "*";
    out << "(t^" << (i + 1) << " + t^-" << (i + 1) << ")";
  }
  return out.str();
}

AlexanderForm make_alexander_form(Integer a0, std::vector<Integer> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  const Integer& leading = a.empty() ? a0 : a.back();
  if (leading < 0) {
    a0 = -a0;
    for (auto& c : a) c = -c;
  }
  return {std::move(a0), std::move(a)};
}

namespace {

/// Fraction-free Gaussian elimination.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

AlexanderForm alexander_fibered(const SpMatrix& mat) {
  const int g = mat.lattice().genus();
  const int deg = 2 * g;
  // Sample det(tI - M) at t = 0..deg and interpolate (Newton form).
  std::vector<Rational> xs, divided;
  for (int t = 0; t <= deg; ++t) {
    std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(deg), std::vector<Integer>(static_cast<std::size_t>(deg)));
    for (int i = 0; i < deg; ++i) {
      for (int j = 0; j < deg; ++j) {
        Integer e = -static_cast<long>(mat(i, j));
        if (i == j) e += t;
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
      }
    }
    xs.emplace_back(t);
    divided.emplace_back(bareiss_determinant(std::move(rows)));
  }
  for (int level = 1; level <= deg; ++level) {
    for (int k = deg; k >= level; --k) {
      divided[static_cast<std::size_t>(k)] =
          (divided[static_cast<std::size_t>(k)] - divided[static_cast<std::size_t>(k - 1)]) /
          (xs[static_cast<std::size_t>(k)] - xs[static_cast<std::size_t>(k - level)]);
    }
  }
  std::vector<Rational> coeffs{divided[static_cast<std::size_t>(deg)]};
  for (int k = deg - 1; k >= 0; --k) {
    // coeffs <- coeffs * (t - xs[k]) + divided[k]
    std::vector<Rational> next(coeffs.size() + 1);
    for (std::size_t p = 0; p < coeffs.size(); ++p) {
      next[p + 1] += coeffs[p];
      next[p] -= coeffs[p] * xs[static_cast<std::size_t>(k)];
    }
    next[0] += divided[static_cast<std::size_t>(k)];
    coeffs = std::move(next);
  }
  for (int k = 0; k <= deg; ++k) {
    if (coeffs[static_cast<std::size_t>(k)].get_den() != 1) {
      throw std::logic_error("characteristic polynomial with a non-integral coefficient");
    }
    if (coeffs[static_cast<std::size_t>(k)] != coeffs[static_cast<std::size_t>(deg - k)]) {
      throw NotSymplectic("characteristic polynomial is not palindromic");
    }
  }
  std::vector<Integer> a;
  for (int i = 1; i <= g; ++i) a.push_back(coeffs[static_cast<std::size_t>(g + i)].get_num());
  return make_alexander_form(coeffs[static_cast<std::size_t>(g)].get_num(), std::move(a));
}

Integer fibered_oracle_value(const AlexanderForm& form, int n, int g) {
  const long long offset = static_cast<long long>(g) - 1 - n;
  Integer total = 0;
  for (long long i = 1; offset + i <= form.degree(); ++i) total += Integer(static_cast<long>(i)) * form.coefficient(offset + i);
  return total;
}

Integer segal_donaldson_dimension(int d, int g) {
  Integer total = 0;
  for (long long j = 1; j <= static_cast<long long>(g) - d; ++j) {
    total += Integer(static_cast<long>(j)) * binomial(2 * g, static_cast<int>(g - d - j));
  }
  return total;
}

ConnectedSumResult connected_sum_invariant(const MorseCycle& cycle, unsigned threads) {
  ConnectedSumResult r;
  auto it = std::find_if(cycle.moves.begin(), cycle.moves.end(), [](const ElementaryMove& m) { return m.separating(); });
  if (it == cycle.moves.end()) throw std::invalid_argument("cycle has no separating circle");
  r.move_index = static_cast<std::size_t>(it - cycle.moves.begin());
  r.value = 0;
  r.reason = "separating vanishing: move " + std::to_string(r.move_index) + " (" + to_string(it->kind()) +
             ") crosses a separating circle, whose correspondence induces the zero map";
  r.evaluated = evaluate_cycle(cycle, threads).value;
  if (r.evaluated != 0) throw std::logic_error("separating cycle evaluated to a nonzero value");
  return r;
}

std::vector<std::string> example_names() { return {"s1s3_sum", "s2xs2"}; }

namespace {

std::string u_power_notation(int k) { return k == 0 ? "1" : "U^" + std::to_string(k); }

/// Functional sending U^n (the top class of Sym^n S^2) to 1 and the other
/// basis elements to 0.
Rational cap_disc_genus0(const SymClass& x) { return x.coefficient({x.points(), 0}); }

SymClass u_power_g0(SymClass x, long long exponent) {
  // U^{n+1} acts as the identity in genus zero.
  const long long period = x.points() + 1;
  for (long long k = 0; k < exponent % period; ++k) x = cap_u_quantum_g0(x);
  return x;
}

}  // namespace

ExampleReport worked_example(const std::string& name, int m, int n) {
  ExampleReport r;
  r.name = name;
  r.m = m;
  r.n = n;
  if (name == "s2xs2") {
    if (n < 0) throw std::invalid_argument("s2xs2 needs n >= 0");
    if (m < 0) {
      r.vanishes = true;
      r.value = 0;
      r.notation = "0";
      r.steps.push_back("positivity gate: <beta, F> = m < 0, no sections");
      return r;
    }
    const SymplecticLattice sphere(0);
    const long long exponent = static_cast<long long>(m) * n + m + n;
    SymClass x = SymClass::phi(n, 0, ExtElement::scalar(sphere, 1));
    r.steps.push_back("L(D-) = Phi(1) in H^*(Sym^" + std::to_string(n) + " S^2)");
    x = u_power_g0(x, exponent);
    r.steps.push_back("U^" + std::to_string(exponent) + " . L(D-) = " + x.to_string() + " (U^" +
                      std::to_string(n + 1) + " = id)");
    r.value = cap_disc_genus0(x);
    r.steps.push_back("L(D+) pairs U^" + std::to_string(n) + " to 1: value " + to_string(r.value));
    r.u_exponent = static_cast<int>(exponent);
    r.vanishes = r.value == 0;
    r.notation = r.vanishes ? "0" : u_power_notation(r.u_exponent);
    return r;
  }
  if (name == "s1s3_sum") {
    if (n < 1) throw std::invalid_argument("s1s3_sum needs n >= 1");
    r.lambda_factor = true;
    r.sign_ambiguous = true;
    if (m < 0) {
      r.vanishes = true;
      r.value = 0;
      r.notation = "0";
      r.steps.push_back("positivity gate: m < 0, no sections");
      return r;
    }
    const SymplecticLattice torus(1);
    const H1Vector circle = H1Vector::a(torus, 1);
    const H1Vector dual = H1Vector::b(torus, 1);
    SymClass x = cap_mu(dual, SymClass::phi(n, 0, ExtElement::scalar(torus, 1)));
    r.steps.push_back("l . L(D-) = " + x.to_string() + " in H^*(Sym^" + std::to_string(n) + " T^2), l . [L] = " +
                      std::to_string(intersection(dual, circle)));
    x = down_map(circle, n)(x);
    r.steps.push_back("vanishing-cycle map: " + x.to_string() + " in H^*(Sym^" + std::to_string(n - 1) + " S^2)");
    const long long exponent = static_cast<long long>(n) * (m + 1) - 1;
    x = u_power_g0(x, exponent);
    r.steps.push_back("U^" + std::to_string(exponent) + " . = " + x.to_string() + " (U^" + std::to_string(n) + " = id)");
    r.value = cap_disc_genus0(x);
    r.steps.push_back("L(D+) pairs U^" + std::to_string(n - 1) + " to 1: value " + to_string(r.value));
    r.u_exponent = n - 1;
    r.vanishes = r.value == 0;
    r.notation = r.vanishes ? "0" : "±" + u_power_notation(r.u_exponent) + " ⊗ λ";
    return r;
  }
  std::string known;
  for (const auto& k : example_names()) known += (known.empty() ? "" : ", ") + k;
  throw std::invalid_argument("unknown example '" + name + "' (available: " + known + ")");
}

}  // namespace lagmatch
