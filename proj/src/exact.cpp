#include "fermat/exact.hpp"

namespace fermat {

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

IsqrtResult isqrt(const Integer& n) {
  if (sgn(n) < 0) {
    throw std::domain_error("isqrt of negative value " + to_decimal(n));
  }
  IsqrtResult result;
  Integer rem;
  mpz_sqrtrem(result.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  result.exact = sgn(rem) == 0;
  return result;
}

bool is_perfect_square(const Integer& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Rational rational_reduce(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) {
    throw std::domain_error("rational_sqrt of negative value " + to_fraction(q));
  }
  IsqrtResult num = isqrt(q.get_num());
  IsqrtResult den = isqrt(q.get_den());
  if (!num.exact || !den.exact) {
    throw NotASquare("rational", to_fraction(q));
  }
  // q is canonical, so the roots are already coprime.
  return rational_reduce(num.root, den.root);
}

std::string to_decimal(const Integer& n) { return n.get_str(); }

Integer parse_decimal(std::string_view text) {
  std::string_view digits = text;
  const bool negative = !digits.empty() && digits.front() == '-';
  if (negative) digits.remove_prefix(1);
  bool ok = !digits.empty();
  for (char c : digits) ok = ok && c >= '0' && c <= '9';
  if (ok && digits.size() > 1 && digits.front() == '0') ok = false;
  if (ok && negative && digits == "0") ok = false;
  if (!ok) {
    throw std::invalid_argument("malformed decimal integer: '" +
                                std::string(text) + "'");
  }
  return Integer(std::string(text), 10);
}

std::string to_fraction(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace fermat
