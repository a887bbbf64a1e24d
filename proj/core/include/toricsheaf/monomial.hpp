#pragma once

#include "toricsheaf/toric.hpp"

#include <cstddef>
#include <vector>

namespace toricsheaf {

// Monomial ideal in the Cox ring k[x_0, ..., x_n] of P^n.
struct MonomialIdeal {
  int n = 2;
  std::vector<IntVector> generators;  // exponent vectors of length n + 1
};

// Throws InputError on a bad length, a negative exponent or no generators.
void check_ideal(const MonomialIdeal& ideal);

// 1 iff some generator g has g_rho <= <m, rho> for every ray rho of the cone,
// else 0. Rays outside the cone are inverted and impose nothing.
int sigma_piece_dim(const MonomialIdeal& ideal, const Cone& cone, const Character& m);

}  // namespace toricsheaf
