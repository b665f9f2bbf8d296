#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fermat/exact.hpp"
#include "fermat/triples.hpp"

namespace fermat {

// Coefficients of the paired quadratic-square system
//   t^2 + a t + c^2 = alpha^2,   t^2 + b t + d^2 = beta^2
// solved in the rational unknown t.
struct QuadraticSystem {
  Integer a;
  Integer b;
  Integer c;
  Integer d;
};

enum class ChainBranch { t1, t2 };

// The two closed-form rational roots that make both quadratics squares:
//   t1 = ((a d^2 - b c^2)^2 - (2 c d (d+c))^2) / (4 c d (d+c)(b c + a d))
//   t2 = ((a d^2 - b c^2)^2 - (2 c d (d-c))^2) / (4 c d (d-c)(b c - a d))
// Each branch checks only its own factors and throws DegenerateSystem when
// one vanishes.
Rational branch_root_t1(const QuadraticSystem& sys);
Rational branch_root_t2(const QuadraticSystem& sys);

// The offsets whose squares the two quadratics equal at a branch root:
// alpha^2 = t^2 + a t + c^2 and beta^2 = t^2 + b t + d^2.
struct BranchOffsets {
  Rational alpha;
  Rational beta;
};

BranchOffsets branch_offsets(const QuadraticSystem& sys, ChainBranch branch,
                             const Rational& t);

enum class Classification { positive_primitive, negative_primitive, trivial };

const char* to_string(Classification c);
const char* to_string(ChainBranch b);

// Reduced solution of x^2 + y^2 = z^2 = e^4, x + y = f^2 with gcd(x,y) = 1.
// positive_primitive: x > 0 and y > 0; negative_primitive: exactly one of
// x, y negative; trivial: an arm is zero, as in (1, 0, 1, 1, 1).
struct FermatSolution {
  Integer x;
  Integer y;
  Integer z;
  Integer e;
  Integer f;
  Classification classification = Classification::trivial;
  unsigned chain_index = 0;
};

// Substitution X = ((t+m)^2 - n^2) q^2, Y = 2 n (t+m) q^2,
// Z = ((t+m)^2 + n^2) q^2, with q the denominator of the reduced t. The
// output may be non-primitive; reduction is a separate step.
SignedTriple substitute(const Rational& t, const GeneratorPair& g);

// Divides out lambda = gcd(X, Y), takes the exact roots e = sqrt(z),
// f = sqrt(x+y) and classifies by the sign pattern. Throws NonPositiveSum
// when X + Y <= 0 and NotASquare when a root is inexact.
FermatSolution reduce_and_classify(const SignedTriple& raw, unsigned chain_index);

// The smallest negative-arm solution (-119, 120, 169) with e = 13, f = 1;
// default start of every chain.
const FermatSolution& fermat_seed();

// One chain step with every intermediate kept for inspection.
struct ChainStep {
  GeneratorPair gens;      // extracted from the previous solution
  QuadraticSystem system;  // a = 2(m+n), b = 2m, c = f_prev, d = e_prev
  Rational t;
  SignedTriple raw;        // before dividing by lambda
  Integer lambda;          // gcd of the raw arms
  FermatSolution solution;
  bool arm_condition = false;  // t + m > n, the forecast for a positive next x
};

// Builds the quadratic system from the previous solution, solves the chosen
// branch, substitutes with q = denominator of the reduced t, reduces and
// classifies. A failed arm_condition is reported, not raised; the negative
// solution is still returned.
ChainStep chain_step(const FermatSolution& prev, ChainBranch branch);

// Throws std::logic_error when any solution invariant fails.
void verify_solution(const FermatSolution& s);

struct ChainRun {
  std::vector<ChainStep> steps;      // verified prefix
  std::optional<std::string> error;  // set when the chain broke
};

// policy holds one branch per step, or a single branch applied uniformly.
// Every emitted solution is verified first; on failure the run stops and
// carries the error alongside the verified prefix.
ChainRun run_chain(const FermatSolution& seed, unsigned steps,
                   const std::vector<ChainBranch>& policy);

}  // namespace fermat
