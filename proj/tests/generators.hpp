// Random inputs built from library types.
#pragma once

#include "lagmatch/cobordism_tqft.hpp"
#include "oracles.hpp"

namespace oracle {

/// Random closed cycle with a separating Down or Up move, starting genus and
/// point count at most 3.
inline lagmatch::MorseCycle random_separating_cycle(Rng& rng) {
  using lagmatch::ElementaryMove;
  using lagmatch::H1Vector;
  using lagmatch::SymplecticLattice;
  lagmatch::MorseCycle c;
  const bool down_first = uniform(rng, 0, 1) == 0;
  if (down_first) {
    c.genus = uniform(rng, 1, 3);
    c.points = uniform(rng, 1, 3);
  } else {
    c.genus = uniform(rng, 0, 2);
    c.points = uniform(rng, 0, 3);
  }
  const int g = c.genus;
  c.moves.push_back(ElementaryMove::twist(random_sp(g, rng)));
  const int mid = down_first ? g - 1 : g + 1;
  const int big = std::max(g, mid);
  const H1Vector zero = H1Vector::zero(SymplecticLattice(big));
  c.moves.push_back(down_first ? ElementaryMove::down(zero) : ElementaryMove::up(zero));
  c.moves.push_back(ElementaryMove::twist(random_sp(mid, rng)));
  // Optionally a non-separating excursion in the middle.
  const int mid_points = down_first ? c.points - 1 : c.points + 1;
  if (mid >= 1 && mid_points >= 1 && uniform(rng, 0, 1) == 0) {
    c.moves.push_back(ElementaryMove::down(random_primitive(mid, rng)));
    c.moves.push_back(ElementaryMove::up(random_primitive(mid, rng)));
  }
  const H1Vector zero_back = H1Vector::zero(SymplecticLattice(big));
  c.moves.push_back(down_first ? ElementaryMove::up(zero_back) : ElementaryMove::down(zero_back));
  c.moves.push_back(ElementaryMove::twist(random_sp(g, rng)));
  return c;
}

inline lagmatch::MorseCycle single_twist(const lagmatch::SpMatrix& m, int n) {
  lagmatch::MorseCycle c;
  c.genus = m.lattice().genus();
  c.points = n;
  c.moves.push_back(lagmatch::ElementaryMove::twist(m));
  return c;
}

}  // namespace oracle
