#include "fermat/triples.hpp"

namespace fermat {

void validate_generators(const GeneratorPair& g) {
  if (sgn(g.m) == 0 || sgn(g.n) == 0) {
    throw InvalidGenerator("m and n must be nonzero");
  }
  if (g.m == g.n || g.m == -g.n) {
    throw InvalidGenerator("m = +-n does not generate a triangle");
  }
  Integer sum = g.m + g.n;
  if (mpz_even_p(sum.get_mpz_t())) {
    throw InvalidGenerator("m + n must be odd");
  }
  if (gcd(g.m, g.n) != 1) {
    throw InvalidGenerator("m and n must be coprime");
  }
}

SignedTriple triple_from_generators(const GeneratorPair& g) {
  validate_generators(g);
  Integer m2 = g.m * g.m;
  Integer n2 = g.n * g.n;
  SignedTriple t{m2 - n2, 2 * g.m * g.n, m2 + n2};
  // |m| < |n| with opposite signs would make both arms nonpositive.
  if (sgn(t.x) <= 0 && sgn(t.y) <= 0) {
    throw InvalidGenerator("pair yields nonpositive X and Y");
  }
  return t;
}

namespace {

Integer exact_root(const Integer& value, const char* quantity) {
  if (sgn(value) < 0) {
    throw NotASquare(quantity, to_decimal(value));
  }
  IsqrtResult r = isqrt(value);
  if (!r.exact) {
    throw NotASquare(quantity, to_decimal(value));
  }
  return r.root;
}

}  // namespace

GeneratorExtraction generators_from_triple(const SignedTriple& t) {
  Integer sum = t.x + t.y;
  if (sgn(sum) < 0) {
    throw std::domain_error("X + Y is negative: " + to_decimal(sum));
  }
  Integer zpx = t.z + t.x;
  Integer zmx = t.z - t.x;
  if (mpz_odd_p(zpx.get_mpz_t())) {
    throw NotASquare("(Z+X)/2", to_decimal(zpx) + "/2");
  }
  if (mpz_odd_p(zmx.get_mpz_t())) {
    throw NotASquare("(Z-X)/2", to_decimal(zmx) + "/2");
  }
  Integer m_abs = exact_root(zpx / 2, "(Z+X)/2");
  Integer n_abs = exact_root(zmx / 2, "(Z-X)/2");
  const int delta = (sgn(t.x) < 0 && sgn(t.y) > 0) ? -1 : 1;
  const int lambda = (sgn(t.x) > 0 && sgn(t.y) > 0) ? 1 : -1;
  GeneratorExtraction out{{delta * m_abs, lambda * n_abs}, {}, {}};
  if (sgn(t.z) >= 0) {
    IsqrtResult d = isqrt(t.z);
    if (d.exact) out.d = d.root;
  }
  IsqrtResult c = isqrt(sum);
  if (c.exact) out.c = c.root;
  return out;
}

FamilyRow sum_square_family(unsigned s) {
  if (s == 0) {
    throw std::domain_error("family index must be >= 1");
  }
  PellPair p = pell_pair(2 * s - 1);
  Integer x = 2 * p.v - 1;
  Integer x2 = x * x;
  return {s, p, x, (x2 - 1) / 2, (x2 + 1) / 2, p.u};
}

FamilyRow hyp_square_family(unsigned r) {
  if (r == 0) {
    throw std::domain_error("family index must be >= 1");
  }
  PellPair p = pell_pair(2 * r - 1);
  Integer x = p.u;
  Integer x2 = x * x;
  return {r, p, x, (x2 - 1) / 2, (x2 + 1) / 2, p.v};
}

}  // namespace fermat
