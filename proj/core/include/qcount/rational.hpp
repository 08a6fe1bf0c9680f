#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcount {

/// Exact arbitrary-precision rational scalar. mpq_class keeps values
/// canonical (lowest terms, positive denominator), which is exactly the
/// representation every validator in this project relies on.
using Rational = mpq_class;
using Integer = mpz_class;

/// Thrown when an operation would exceed an enumeration or matrix-size
/// budget. Deliberately distinct from logic errors: the caller asked for
/// something too large, not something malformed.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a lemma checker's hypothesis is violated. Kept separate from
/// a failed bound so reports can distinguish "inapplicable" from "false".
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "a/b" or "a". Throws on malformed input.
Rational rat_from_string(const std::string& text);

std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

inline Rational rabs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Exact binomial coefficient C(n, k); zero outside the triangle.
Integer binomial(long n, long k);

/// floor(sqrt(n)) for n >= 0.
Integer isqrt_floor(const Integer& n);

/// ceil(n^(1/3)) for n >= 1.
long icbrt_ceil(long n);

/// ceil(sqrt(n)) for n >= 0.
long isqrt_ceil(long n);

/// Largest s with s*s dividing n (n >= 1), so n = s^2 * b with b squarefree.
long square_part(long n);

/// 2^-bits as an exact rational, handy as a grid step or tolerance.
Rational pow2_rational(int bits);

}  // namespace qcount
