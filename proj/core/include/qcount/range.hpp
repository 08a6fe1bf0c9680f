#pragma once

#include "qcount/polynomial.hpp"

namespace qcount {

/// Thrown when a certified enclosure cannot be reached within the iteration
/// cap. Never degrades to a silently loose bound.
class ToleranceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Certified enclosure of a polynomial's range on an interval.
/// lo and hi are attained values (at witness_lo / witness_hi); the true
/// extrema lie within certified_tolerance outside them:
///   true min in [lo - tol, lo],  true max in [hi, hi + tol].
struct RangeReport {
  Rational lo;
  Rational hi;
  Rational certified_tolerance;
  Rational witness_lo;
  Rational witness_hi;

  Rational width() const { return hi - lo; }
  Rational max_abs() const {
    Rational al = rabs(lo), ah = rabs(hi);
    return al > ah ? al : ah;
  }
};

/// Certified min/max of p on [a, b] by grid evaluation plus branch-and-bound
/// refinement. The refinement Lipschitz constant comes from the Markov
/// derivative bound applied to a crude initial range, so the enclosure is a
/// theorem, not a heuristic. Requires a < b and tol > 0; the degenerate
/// interval a = b is rejected.
RangeReport range_on_interval(const Polynomial& p, const Rational& a,
                              const Rational& b, const Rational& tol);

}  // namespace qcount
