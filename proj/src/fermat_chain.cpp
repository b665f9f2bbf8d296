#include "fermat/fermat_chain.hpp"

namespace fermat {

namespace {

Rational branch_value(const QuadraticSystem& s, bool first) {
  Integer cd = s.c * s.d;
  Integer dc = first ? Integer(s.d + s.c) : Integer(s.d - s.c);
  Integer bcad = first ? Integer(s.b * s.c + s.a * s.d)
                       : Integer(s.b * s.c - s.a * s.d);
  if (sgn(cd) == 0) {
    throw DegenerateSystem("c d = 0");
  }
  if (sgn(dc) == 0) {
    throw DegenerateSystem(first ? "d + c = 0" : "d - c = 0");
  }
  if (sgn(bcad) == 0) {
    throw DegenerateSystem(first ? "b c + a d = 0" : "b c - a d = 0");
  }
  Integer lead = s.a * s.d * s.d - s.b * s.c * s.c;
  Integer inner = 2 * cd * dc;
  return rational_reduce(lead * lead - inner * inner, 4 * cd * dc * bcad);
}

}  // namespace

Rational branch_root_t1(const QuadraticSystem& sys) {
  return branch_value(sys, true);
}

Rational branch_root_t2(const QuadraticSystem& sys) {
  return branch_value(sys, false);
}

BranchOffsets branch_offsets(const QuadraticSystem& sys, ChainBranch branch,
                             const Rational& t) {
  Integer lead = sys.a * sys.d * sys.d - sys.b * sys.c * sys.c;
  if (branch == ChainBranch::t1) {
    Rational alpha = t + rational_reduce(lead, 2 * sys.d * (sys.d + sys.c));
    Rational beta = t - rational_reduce(lead, 2 * sys.c * (sys.d + sys.c));
    return {alpha, beta};
  }
  Rational alpha = t + rational_reduce(lead, 2 * sys.d * (sys.d - sys.c));
  Rational beta = t + rational_reduce(lead, 2 * sys.c * (sys.d - sys.c));
  return {alpha, beta};
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::positive_primitive:
      return "positive_primitive";
    case Classification::negative_primitive:
      return "negative_primitive";
    case Classification::trivial:
      return "trivial";
  }
  return "unknown";
}

const char* to_string(ChainBranch b) {
  return b == ChainBranch::t1 ? "t1" : "t2";
}

SignedTriple substitute(const Rational& t, const GeneratorPair& g) {
  validate_generators(g);
  const Integer& p = t.get_num();
  const Integer& q = t.get_den();
  Integer w = p + g.m * q;  // q (t + m)
  Integer nq = g.n * q;
  Integer w2 = w * w;
  Integer nq2 = nq * nq;
  return {w2 - nq2, 2 * nq * w, w2 + nq2};
}

FermatSolution reduce_and_classify(const SignedTriple& raw, unsigned chain_index) {
  if (raw.x * raw.x + raw.y * raw.y != raw.z * raw.z) {
    throw std::invalid_argument("not a right-triangle triple");
  }
  if (sgn(raw.z) <= 0) {
    throw std::invalid_argument("hypotenuse must be positive");
  }
  Integer sum = raw.x + raw.y;
  if (sgn(sum) <= 0) {
    throw NonPositiveSum(to_decimal(sum));
  }
  Integer lambda = gcd(raw.x, raw.y);  // > 0 since x + y > 0
  FermatSolution s;
  s.x = raw.x / lambda;
  s.y = raw.y / lambda;
  s.z = raw.z / lambda;  // lambda^2 | Z^2 forces lambda | Z
  IsqrtResult e = isqrt(s.z);
  if (!e.exact) {
    throw NotASquare("z", to_decimal(s.z));
  }
  IsqrtResult f = isqrt(s.x + s.y);
  if (!f.exact) {
    throw NotASquare("x+y", to_decimal(s.x + s.y));
  }
  s.e = e.root;
  s.f = f.root;
  s.chain_index = chain_index;
  if (sgn(s.x) > 0 && sgn(s.y) > 0) {
    s.classification = Classification::positive_primitive;
  } else if (sgn(s.x) == 0 || sgn(s.y) == 0) {
    s.classification = Classification::trivial;
  } else {
    s.classification = Classification::negative_primitive;
  }
  return s;
}

const FermatSolution& fermat_seed() {
  static const FermatSolution seed{-119, 120, 169, 13, 1,
                                   Classification::negative_primitive, 0};
  return seed;
}

ChainStep chain_step(const FermatSolution& prev, ChainBranch branch) {
  GeneratorExtraction ext =
      generators_from_triple({prev.x, prev.y, prev.z});
  if (!ext.d) {
    throw NotASquare("Z", to_decimal(prev.z));
  }
  if (!ext.c) {
    throw NotASquare("X+Y", to_decimal(prev.x + prev.y));
  }
  GeneratorPair g = ext.gens;
  if (sgn(g.m) < 0) {
    // A negative previous arm extracts as a double-negative pair; the
    // positive representative generates the same triple and keeps a, b > 0.
    g.m = -g.m;
    g.n = -g.n;
  }
  ChainStep step;
  step.system = {2 * (g.m + g.n), 2 * g.m, *ext.c, *ext.d};
  step.t = branch == ChainBranch::t1 ? branch_root_t1(step.system)
                                     : branch_root_t2(step.system);
  step.gens = g;
  step.raw = substitute(step.t, g);
  step.lambda = gcd(step.raw.x, step.raw.y);
  step.solution = reduce_and_classify(step.raw, prev.chain_index + 1);
  step.arm_condition = step.t + Rational(g.m) > Rational(g.n);
  return step;
}

void verify_solution(const FermatSolution& s) {
  if (s.x * s.x + s.y * s.y != s.z * s.z) {
    throw std::logic_error("solution is not a right triangle");
  }
  if (s.z != s.e * s.e) {
    throw std::logic_error("z != e^2");
  }
  Integer sum = s.x + s.y;
  if (sgn(sum) <= 0) {
    throw std::logic_error("x + y is not positive");
  }
  if (sum != s.f * s.f) {
    throw std::logic_error("x + y != f^2");
  }
  if (gcd(s.x, s.y) != 1) {
    throw std::logic_error("arms are not coprime");
  }
  Classification expected;
  if (sgn(s.x) > 0 && sgn(s.y) > 0) {
    expected = Classification::positive_primitive;
  } else if (sgn(s.x) == 0 || sgn(s.y) == 0) {
    expected = Classification::trivial;
  } else {
    expected = Classification::negative_primitive;
  }
  if (s.classification != expected) {
    throw std::logic_error("classification does not match the sign pattern");
  }
}

ChainRun run_chain(const FermatSolution& seed, unsigned steps,
                   const std::vector<ChainBranch>& policy) {
  if (steps == 0) {
    throw std::domain_error("chain needs at least one step");
  }
  if (policy.size() != steps && policy.size() != 1) {
    throw std::invalid_argument(
        "branch policy must hold one entry or one per step");
  }
  ChainRun run;
  FermatSolution current = seed;
  for (unsigned i = 0; i < steps; ++i) {
    ChainBranch branch = policy.size() == 1 ? policy[0] : policy[i];
    try {
      ChainStep step = chain_step(current, branch);
      verify_solution(step.solution);
      current = step.solution;
      run.steps.push_back(std::move(step));
    } catch (const std::exception& err) {
      run.error = err.what();
      break;
    }
  }
  return run;
}

}  // namespace fermat
