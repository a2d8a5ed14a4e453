#pragma once

#include <utility>
#include <vector>

#include "gww/unipoly.hpp"

namespace gww {

/// f = leading * prod factor^multiplicity with monic, Q-irreducible factors.
struct Factorization {
  Rational leading;
  std::vector<std::pair<UniPoly, unsigned>> factors;

  UniPoly expand() const;
};

/// Squarefree decomposition (Yun): monic squarefree a_i with monic(f) = prod a_i^i.
/// Entry i-1 of the result is a_i; trailing constants are dropped.
std::vector<UniPoly> squarefree_decomposition(const UniPoly& f);

/// Factorization over Q by Zassenhaus: squarefree decomposition, factoring
/// modulo a small prime, Hensel lifting and subset recombination. Factors are
/// sorted by degree, then by coefficients. Recombination is exponential in
/// the number of modular factors; inputs here stay well below degree 30.
Factorization factor_rational(const UniPoly& f);

bool is_irreducible(const UniPoly& f);

}  // namespace gww
