#include "qcount/rational.hpp"

namespace qcount {

Rational rat_from_string(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("rational with zero denominator: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Integer isqrt_floor(const Integer& n) {
  if (n < 0) throw std::invalid_argument("isqrt_floor of negative value");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

long icbrt_ceil(long n) {
  if (n < 1) throw std::invalid_argument("icbrt_ceil requires n >= 1");
  Integer v(n), r;
  int exact = mpz_root(r.get_mpz_t(), v.get_mpz_t(), 3);
  long root = r.get_si();
  return exact ? root : root + 1;
}

long isqrt_ceil(long n) {
  if (n < 0) throw std::invalid_argument("isqrt_ceil of negative value");
  Integer v(n);
  Integer r = isqrt_floor(v);
  if (r * r == v) return r.get_si();
  return r.get_si() + 1;
}

long square_part(long n) {
  if (n < 1) throw std::invalid_argument("square_part requires n >= 1");
  long s = 1;
  for (long d = 2; d * d <= n; ++d) {
    long q = d * d;
    while (n % q == 0) {
      n /= q;
      s *= d;
    }
  }
  return s;
}

Rational pow2_rational(int bits) {
  Rational q(1);
  if (bits >= 0) {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned>(bits));
  } else {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned>(-bits));
  }
  return q;
}

}  // namespace qcount
