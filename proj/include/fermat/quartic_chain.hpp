#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fermat/exact.hpp"

namespace fermat {

// Coefficients of T^4 + a T^3 + b T^2 + c T + d, the arm-sum polynomial
// after shifting the parameter by the previous t = r/s.
struct QuarticCoeffs {
  Rational a;
  Rational b;
  Rational c;
  Rational d;
};

// a = 4 (r+s) / s
// b = (6 r^2 + 12 r s - 6 s^2) / s^2
// c = 4 (r^3 + 3 r^2 s - 3 r s^2 - s^3) / s^3
// d = (r^4 + 4 r^3 s - 6 r^2 s^2 - 4 r s^3 + s^4) / s^4
// s == 0 is a domain error.
QuarticCoeffs quartic_coeffs(const Integer& r, const Integer& s);

struct QuarticRoot {
  Rational T;      // (c^2/(4d) - b - 2 beta) / (a + c/beta)
  Rational alpha;  // c / (2 beta)
  Rational beta;   // sqrt(d)
};

// Completes the quartic against (T^2 - alpha T - beta)^2. Throws NotASquare
// when d is not a positive rational square (the chain is broken there) and
// DegenerateSystem when a + c/beta vanishes.
QuarticRoot quartic_root(const QuarticCoeffs& co);

// Evaluates T^4 + a T^3 + b T^2 + c T + d exactly.
Rational quartic_eval(const QuarticCoeffs& co, const Rational& T);

struct QuarticState {
  unsigned k = 0;
  Integer r;   // t = r/s reduced, s > 0
  Integer s;
  Rational t;
  Integer p;   // p = r^2 - s^2
  Integer q;   // q = 2 r s
  Integer x;   // x = p^2 - q^2
  Integer y;   // y = 2 p q
  Integer z;   // z = p^2 + q^2 = (r^2 + s^2)^2
};

// Builds a state from t = r/s (reduced on entry). s == 0 is a domain error.
QuarticState quartic_state_from(const Integer& r, const Integer& s, unsigned k);

// r = 1469, s = 84 at k = 1: the state whose triple is Fermat's triangle.
QuarticState quartic_seed();

QuarticState quartic_step(const QuarticState& prev);

struct StateRoots {
  Integer e;  // sqrt(z) = r^2 + s^2
  Integer f;  // sqrt(x + y)
};

// Checks every state invariant and returns the two roots. Throws
// NotASquare when x + y has no exact root and std::logic_error when a
// structural identity fails.
StateRoots verify_state(const QuarticState& st);

struct QuarticRun {
  std::vector<QuarticState> states;  // verified prefix
  std::optional<std::string> error;  // set when the chain broke
};

// States k = 1..steps from the fixed (1469, 84) seed.
QuarticRun run_quartic(unsigned steps);

// Same driver from an arbitrary seed, for experimentation. first_index
// labels the seed state.
QuarticRun run_quartic_from(const Integer& r, const Integer& s, unsigned steps,
                            unsigned first_index = 1);

}  // namespace fermat
