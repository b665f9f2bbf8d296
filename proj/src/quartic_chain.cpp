#include "fermat/quartic_chain.hpp"

namespace fermat {

QuarticCoeffs quartic_coeffs(const Integer& r, const Integer& s) {
  if (sgn(s) == 0) {
    throw std::domain_error("quartic coefficients need s != 0");
  }
  Integer r2 = r * r;
  Integer s2 = s * s;
  Integer r3 = r2 * r;
  Integer s3 = s2 * s;
  QuarticCoeffs co;
  co.a = rational_reduce(4 * (r + s), s);
  co.b = rational_reduce(6 * r2 + 12 * r * s - 6 * s2, s2);
  co.c = rational_reduce(4 * (r3 + 3 * r2 * s - 3 * r * s2 - s3), s3);
  co.d = rational_reduce(r2 * r2 + 4 * r3 * s - 6 * r2 * s2 - 4 * r * s3 + s2 * s2,
                         s2 * s2);
  return co;
}

QuarticRoot quartic_root(const QuarticCoeffs& co) {
  if (sgn(co.d) <= 0) {
    throw NotASquare("d", to_fraction(co.d));
  }
  Rational beta;
  try {
    beta = rational_sqrt(co.d);
  } catch (const NotASquare&) {
    throw NotASquare("d", to_fraction(co.d));
  }
  Rational denom = co.a + co.c / beta;
  if (sgn(denom) == 0) {
    throw DegenerateSystem("a + c / sqrt(d) = 0");
  }
  QuarticRoot root;
  root.beta = beta;
  root.alpha = co.c / (2 * beta);
  root.T = (co.c * co.c / (4 * co.d) - co.b - 2 * beta) / denom;
  return root;
}

Rational quartic_eval(const QuarticCoeffs& co, const Rational& T) {
  // Horner form.
  return (((T + co.a) * T + co.b) * T + co.c) * T + co.d;
}

QuarticState quartic_state_from(const Integer& r, const Integer& s, unsigned k) {
  QuarticState st;
  st.k = k;
  st.t = rational_reduce(r, s);  // rejects s == 0
  st.r = st.t.get_num();
  st.s = st.t.get_den();
  st.p = st.r * st.r - st.s * st.s;
  st.q = 2 * st.r * st.s;
  Integer p2 = st.p * st.p;
  Integer q2 = st.q * st.q;
  st.x = p2 - q2;
  st.y = 2 * st.p * st.q;
  st.z = p2 + q2;
  return st;
}

QuarticState quartic_seed() { return quartic_state_from(1469, 84, 1); }

QuarticState quartic_step(const QuarticState& prev) {
  QuarticCoeffs co = quartic_coeffs(prev.r, prev.s);
  QuarticRoot root = quartic_root(co);
  Rational t = root.T + prev.t;
  return quartic_state_from(t.get_num(), t.get_den(), prev.k + 1);
}

StateRoots verify_state(const QuarticState& st) {
  if (st.t != rational_reduce(st.r, st.s) || sgn(st.s) <= 0) {
    throw std::logic_error("t is not the reduced r/s");
  }
  if (st.p != st.r * st.r - st.s * st.s || st.q != 2 * st.r * st.s) {
    throw std::logic_error("p, q do not match r, s");
  }
  Integer p2 = st.p * st.p;
  Integer q2 = st.q * st.q;
  if (st.x != p2 - q2 || st.y != 2 * st.p * st.q || st.z != p2 + q2) {
    throw std::logic_error("triple does not match p, q");
  }
  Integer rs = st.r * st.r + st.s * st.s;
  if (st.z != rs * rs) {
    throw std::logic_error("z != (r^2 + s^2)^2");
  }
  Integer sum = st.x + st.y;
  if (sgn(sum) < 0) {
    throw NotASquare("x+y", to_decimal(sum));
  }
  IsqrtResult f = isqrt(sum);
  if (!f.exact) {
    throw NotASquare("x+y", to_decimal(sum));
  }
  return {rs, f.root};
}

QuarticRun run_quartic(unsigned steps) {
  return run_quartic_from(1469, 84, steps);
}

QuarticRun run_quartic_from(const Integer& r, const Integer& s, unsigned steps,
                            unsigned first_index) {
  if (steps == 0) {
    throw std::domain_error("quartic chain needs at least one state");
  }
  QuarticRun run;
  try {
    QuarticState st = quartic_state_from(r, s, first_index);
    verify_state(st);
    run.states.push_back(st);
    while (run.states.size() < steps) {
      st = quartic_step(run.states.back());
      verify_state(st);
      run.states.push_back(st);
    }
  } catch (const std::exception& err) {
    run.error = err.what();
  }
  return run;
}

}  // namespace fermat
