#include "qcount/bounds.hpp"

#include <mpfr.h>

#include <sstream>

namespace qcount {

BoundCheck BoundCheck::compare(const Rational& lhs, const Rational& rhs,
                               std::string note) {
  BoundCheck check;
  check.lhs = lhs;
  check.rhs = rhs;
  check.satisfied = lhs <= rhs;
  if (rhs > 0) check.slack_ratio = lhs / rhs;
  check.note = std::move(note);
  return check;
}

BoundCheck markov_check(const Polynomial& p, const Rational& a,
                        const Rational& b, const Rational& tol) {
  if (!(a < b)) throw PreconditionError("markov_check: requires a < b");
  if (p.degree() < 1) {
    throw PreconditionError("markov_check: requires deg(p) >= 1");
  }
  const RangeReport range = range_on_interval(p, a, b, tol);
  const RangeReport drange = range_on_interval(p.derivative(), a, b, tol);
  const Rational height = range.width();
  const int d = p.degree();
  return BoundCheck::compare(drange.max_abs(), height / (b - a) * (d * d));
}

Rational paturi_bound(int d, const Rational& mu, int precision_bits) {
  if (d < 0) throw PreconditionError("paturi_bound: d must be >= 0");
  if (mu < 0) throw PreconditionError("paturi_bound: mu must be >= 0");
  if (precision_bits < 64) {
    throw std::invalid_argument("paturi_bound: precision_bits must be >= 64");
  }
  // exp(2 d sqrt(2 mu + mu^2)) with every step rounded toward +inf.
  const Rational arg = 2 * mu + mu * mu;
  mpfr_t x;
  mpfr_init2(x, precision_bits);
  mpfr_set_q(x, arg.get_mpq_t(), MPFR_RNDU);
  mpfr_sqrt(x, x, MPFR_RNDU);
  mpfr_mul_si(x, x, 2L * d, MPFR_RNDU);
  mpfr_exp(x, x, MPFR_RNDU);
  mpq_t out;
  mpq_init(out);
  mpfr_get_q(out, x);
  Rational bound(out);
  mpq_clear(out);
  mpfr_clear(x);
  return bound;
}

BoundCheck paturi_check(const Polynomial& p, const Rational& mu,
                        const Rational& tol, int precision_bits) {
  if (mu < 0) throw PreconditionError("paturi_check: mu must be >= 0");
  const RangeReport base =
      range_on_interval(p, Rational(-1), Rational(1), tol);
  if (base.max_abs() > 1) {
    std::ostringstream msg;
    msg << "paturi_check: hypothesis |p| <= 1 on [-1, 1] fails, measured |p("
        << to_string(base.max_abs() == rabs(base.hi) ? base.witness_hi
                                                     : base.witness_lo)
        << ")| = " << to_string(base.max_abs());
    throw PreconditionError(msg.str());
  }
  Rational lhs;
  if (mu == 0) {
    lhs = rabs(p.eval(Rational(1)));
  } else {
    lhs = range_on_interval(p, Rational(1), 1 + mu, tol).max_abs();
  }
  return BoundCheck::compare(lhs, paturi_bound(p.degree(), mu, precision_bits));
}

BoundCheck paturi_check_chebyshev(int d, const Rational& mu,
                                  int precision_bits) {
  if (d < 0) throw PreconditionError("paturi_check_chebyshev: d >= 0");
  if (mu < 0) throw PreconditionError("paturi_check_chebyshev: mu >= 0");
  const Rational lhs = chebyshev(d).eval(1 + mu);
  return BoundCheck::compare(rabs(lhs), paturi_bound(d, mu, precision_bits),
                             "exact T_d(1+mu) against outward-rounded bound");
}

BoundCheck shrink_range_check(const Polynomial& p, const Rational& a,
                              const Rational& b, const Rational& eps,
                              const Rational& tol) {
  if (!(a < b)) throw PreconditionError("shrink_range_check: requires a < b");
  if (eps < 0 || eps >= 1) {
    throw PreconditionError("shrink_range_check: eps must lie in [0, 1)");
  }
  const int d = p.degree();
  if (d >= 1 && eps * (100 * d * d) > 1) {
    std::ostringstream msg;
    msg << "shrink_range_check: eps = " << to_string(eps)
        << " exceeds hypothesis 1/(100 d^2) with d = " << d;
    throw PreconditionError(msg.str());
  }
  const Rational a_shrunk = a + eps * (b - a);
  const Rational full = range_on_interval(p, a, b, tol).width();
  const Rational shrunk = range_on_interval(p, a_shrunk, b, tol).width();
  return BoundCheck::compare(full / 2, shrunk);
}

BoundCheck discrete_range_check(const Polynomial& p,
                                const std::vector<Rational>& points,
                                const Rational& lo, const Rational& hi,
                                const Rational& tol) {
  if (points.size() < 2) {
    throw PreconditionError("discrete_range_check: needs at least two points");
  }
  if (!(lo < hi)) throw PreconditionError("discrete_range_check: lo < hi");
  if (points.front() != lo || points.back() != hi) {
    throw PreconditionError(
        "discrete_range_check: points must span [lo, hi] exactly");
  }
  for (size_t i = 0; i + 1 < points.size(); ++i) {
    if (!(points[i] < points[i + 1])) {
      throw PreconditionError("discrete_range_check: points must be sorted");
    }
    const Rational gap = points[i + 1] - points[i];
    if (gap > 1) {
      std::ostringstream msg;
      msg << "discrete_range_check: gap " << to_string(gap)
          << " between points " << i << " and " << i + 1
          << " exceeds 1 after rescaling";
      throw PreconditionError(msg.str());
    }
  }
  const Rational length = hi - lo;  // interval shifted to [0, N], N = hi - lo
  const int d = p.degree();
  if (Rational(d) * d > length) {
    std::ostringstream msg;
    msg << "discrete_range_check: deg(p) = " << d
        << " exceeds sqrt(N) with N = " << to_string(length);
    throw PreconditionError(msg.str());
  }

  Rational dmin = p.eval(points[0]), dmax = dmin;
  for (size_t i = 1; i < points.size(); ++i) {
    const Rational v = p.eval(points[i]);
    if (v < dmin) dmin = v;
    if (v > dmax) dmax = v;
  }
  const Rational continuous = range_on_interval(p, lo, hi, tol).width();
  std::ostringstream note;
  note << "rescaled [" << to_string(lo) << ", " << to_string(hi)
       << "] to [0, " << to_string(length) << "]";
  return BoundCheck::compare(continuous / 2, dmax - dmin, note.str());
}

}  // namespace qcount
