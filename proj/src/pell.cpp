#include "fermat/pell.hpp"

namespace fermat {

PellPair pell_pair(unsigned k) {
  if (k == 0) {
    throw std::domain_error("pell index must be >= 1");
  }
  PellPair p{1, 1, 1};
  for (unsigned i = 2; i <= k; ++i) {
    Integer u = p.u + 2 * p.v;
    Integer v = p.u + p.v;
    p = {i, std::move(u), std::move(v)};
  }
  return p;
}

PellPair pell_double(const PellPair& p) {
  return {2 * p.k, p.u * p.u + 2 * p.v * p.v, 2 * p.u * p.v};
}

PellPair pell_back(const PellPair& p) {
  if (p.k <= 1) {
    throw std::domain_error("no pair below index 1");
  }
  return {p.k - 1, 2 * p.v - p.u, p.u - p.v};
}

PellPair pell_odd_from_half(const PellPair& p) {
  Integer diff = p.u - p.v;
  return {2 * p.k - 1, p.u * p.u - 2 * diff * diff, diff * diff + p.v * p.v};
}

}  // namespace fermat
