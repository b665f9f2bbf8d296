#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fermat/exact.hpp"
#include "fermat/pell.hpp"

namespace fermat {

// Signed generator pair: m, n nonzero, coprime, of opposite parity. The
// classic construction wants m > n > 0 on top of that; the signed form
// admits negative entries so that one of X, Y may be negative while X + Y
// stays positive.
struct GeneratorPair {
  Integer m;
  Integer n;
};

// Right-triangle triple. X or Y may be negative, never both.
struct SignedTriple {
  Integer x;
  Integer y;
  Integer z;
};

// Throws InvalidGenerator when the signed-pair requirements fail.
void validate_generators(const GeneratorPair& g);

// (X, Y, Z) = (m^2 - n^2, 2 m n, m^2 + n^2); primitive for valid pairs.
SignedTriple triple_from_generators(const GeneratorPair& g);

struct GeneratorExtraction {
  GeneratorPair gens;
  std::optional<Integer> c;  // sqrt(X + Y), when exact
  std::optional<Integer> d;  // sqrt(Z), when exact
};

// Inverts the generator map:
//   m = delta sqrt((Z+X)/2),  n = lambda sqrt((Z-X)/2)
// with delta = -1 iff X < 0 < Y, lambda = +1 iff X > 0 and Y > 0, so that
// (m, n) and (-m, -n) are identified through their positive-X
// representative. (Z+X)/2 and (Z-X)/2 must be perfect squares (true for
// every triple a generator pair produces); throws NotASquare naming the
// quantity otherwise. Z and X + Y are perfect squares only on the solution
// triples, so c and d are filled when their roots are exact. X + Y < 0 is
// a domain error.
GeneratorExtraction generators_from_triple(const SignedTriple& t);

// Row of one of the two one-parameter families built on odd-index Pell
// pairs. Row 1 is the degenerate (1, 0, 1) in both families.
struct FamilyRow {
  unsigned index = 0;
  PellPair pell;  // (u_{2s-1}, v_{2s-1})
  Integer x;
  Integer y;
  Integer z;
  Integer square_value;  // x + y = square_value^2, resp. z = square_value^2
};

// x = 2 v_{2s-1} - 1, y = (x^2-1)/2, z = (x^2+1)/2; x + y = u_{2s-1}^2.
FamilyRow sum_square_family(unsigned s);

// x = u_{2r-1}, y = (x^2-1)/2, z = (x^2+1)/2 = v_{2r-1}^2.
FamilyRow hyp_square_family(unsigned r);

// Solution of x^2 + (x+1)^2 = w^4.
struct W4Solution {
  std::uint64_t x = 0;
  std::uint64_t w = 0;

  friend bool operator==(const W4Solution&, const W4Solution&) = default;
};

// All solutions with x <= bound, sorted by x. The range is partitioned
// across OpenMP threads; the result does not depend on the schedule.
std::vector<W4Solution> brute_force_w4(std::uint64_t bound);

// Straight-line reference doing the same search through the
// arbitrary-precision primitives; kept for testing the kernel against.
std::vector<W4Solution> brute_force_w4_serial(std::uint64_t bound);

}  // namespace fermat
