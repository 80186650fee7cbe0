#include <doctest.h>

#include "lagmatch/errors.hpp"
#include "lagmatch/lattice.hpp"
#include "oracles.hpp"

using namespace lagmatch;

TEST_CASE("intersection form") {
  const SymplecticLattice l(2);
  CHECK(intersection(H1Vector::a(l, 1), H1Vector::b(l, 1)) == 1);
  CHECK(intersection(H1Vector::b(l, 1), H1Vector::a(l, 1)) == -1);
  CHECK(intersection(H1Vector::a(l, 1), H1Vector::b(l, 2)) == 0);
  CHECK(l.label(l.b(2)) == "b2");
  oracle::Rng rng(21);
  for (int t = 0; t < 50; ++t) {
    std::vector<std::int64_t> x(4), y(4);
    for (auto& v : x) v = oracle::uniform(rng, -5, 5);
    for (auto& v : y) v = oracle::uniform(rng, -5, 5);
    CHECK(intersection(H1Vector(l, x), H1Vector(l, y)) == oracle::form(x, y));
  }
}

TEST_CASE("elementary generators and products are symplectic") {
  oracle::Rng rng(22);
  for (int t = 0; t < 100; ++t) {
    const int g = oracle::uniform(rng, 1, 3);
    const SpMatrix m = oracle::random_sp(g, rng);
    CHECK(oracle::preserves_form(m.entries().to_rows()));
    CHECK(m * m.inverse() == SpMatrix::identity(m.lattice()));
    CHECK(m.inverse() * m == SpMatrix::identity(m.lattice()));
  }
}

TEST_CASE("non-symplectic matrices are rejected") {
  const SymplecticLattice l(1);
  CHECK_THROWS_AS(SpMatrix(l, IntMatrix({{2, 0}, {0, 1}})), NotSymplectic);
  CHECK_NOTHROW(SpMatrix(l, IntMatrix({{2, 1}, {1, 1}})));
}

TEST_CASE("adapted basis sends a primitive class to a1 (randomized)") {
  oracle::Rng rng(23);
  for (int t = 0; t < 150; ++t) {
    const int g = oracle::uniform(rng, 1, 4);
    const H1Vector circle = oracle::random_primitive(g, rng);
    REQUIRE(circle.is_primitive());
    const SpMatrix b = adapted_basis(circle);
    CHECK(b.apply(circle) == H1Vector::a(circle.lattice(), 1));
    CHECK(oracle::preserves_form(b.entries().to_rows()));
  }
}

TEST_CASE("adapted basis of hand-picked classes") {
  const SymplecticLattice l(2);
  for (const auto& c : std::vector<std::vector<std::int64_t>>{
           {0, 0, 1, 0}, {0, 0, 0, 1}, {2, 3, 0, 0}, {0, -1, 0, 0}, {5, 0, 3, 0}, {-4, 6, 9, 2}}) {
    const H1Vector v(l, c);
    REQUIRE(v.is_primitive());
    CHECK(adapted_basis(v).apply(v) == H1Vector::a(l, 1));
  }
  CHECK_THROWS_AS(adapted_basis(H1Vector(l, {2, 0, 4, 0})), std::invalid_argument);
  CHECK_THROWS_AS(adapted_basis(H1Vector::zero(l)), std::invalid_argument);
}

TEST_CASE("projection and inclusion") {
  const IntMatrix q = standard_projection(2);
  CHECK(q.rows() == 2);
  CHECK(q.cols() == 4);
  const IntMatrix incl = standard_inclusion(1);
  CHECK(incl.rows() == 4);
  CHECK(incl.cols() == 2);
  // q o incl is the identity on the smaller lattice.
  CHECK(q * incl == IntMatrix::identity(2));
}

TEST_CASE("integer overflow is detected") {
  using Rows = std::vector<std::vector<std::int64_t>>;
  const IntMatrix big(Rows{{INT64_MAX / 2 + 1}});
  CHECK_THROWS(big * IntMatrix(Rows{{2}}));
}
