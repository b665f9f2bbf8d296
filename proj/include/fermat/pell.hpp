#pragma once

#include "fermat/exact.hpp"

namespace fermat {

// Indexed solution of u^2 - 2 v^2 = (-1)^k: the coefficients of
// (1 + sqrt 2)^k. Odd k solves the -1 equation, even k the +1 equation.
// The index is 1-based; there is no k = 0 pair.
struct PellPair {
  unsigned k = 0;
  Integer u;
  Integer v;
};

// k-th pair by linear iteration from (u1, v1) = (1, 1):
//   u_k = u_{k-1} + 2 v_{k-1},  v_k = u_{k-1} + v_{k-1}.
// k == 0 is a domain error.
PellPair pell_pair(unsigned k);

// Index doubling: u_{2t} = u_t^2 + 2 v_t^2, v_{2t} = 2 u_t v_t.
PellPair pell_double(const PellPair& p);

// One index back: u_{k-1} = 2 v_k - u_k, v_{k-1} = u_k - v_k.
// k == 1 is a domain error.
PellPair pell_back(const PellPair& p);

// Odd index from its half:
//   u_{2t-1} = u_t^2 - 2 (u_t - v_t)^2,  v_{2t-1} = (u_t - v_t)^2 + v_t^2.
PellPair pell_odd_from_half(const PellPair& p);

}  // namespace fermat
