#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcount/range.hpp"

namespace qcount {

/// One measured inequality: satisfied exactly when lhs <= rhs. Checks carry
/// the measured slack so scan reports can show how tight a lemma is, not
/// just that it held.
struct BoundCheck {
  Rational lhs;
  Rational rhs;
  bool satisfied = false;
  std::optional<Rational> slack_ratio;  // lhs / rhs when rhs > 0
  std::string note;

  static BoundCheck compare(const Rational& lhs, const Rational& rhs,
                            std::string note = {});
};

inline constexpr long kCheckTolDenominator = 1000000000000L;  // 1e-12

/// Markov brothers' inequality: max |p'| on [a, b] against
/// (H / (b - a)) * deg(p)^2 with H the measured range width of p on [a, b].
/// Requires a < b and deg(p) >= 1.
BoundCheck markov_check(const Polynomial& p, const Rational& a,
                        const Rational& b,
                        const Rational& tol = Rational(1,
                                                       kCheckTolDenominator));

/// Outward-rounded exp(2 d sqrt(2 mu + mu^2)); every intermediate step rounds
/// up at the given precision, so the result can only overestimate.
Rational paturi_bound(int d, const Rational& mu, int precision_bits = 128);

/// Growth bound check for a polynomial with |p| <= 1 on [-1, 1]:
/// max |p| on [1, 1 + mu] against paturi_bound(deg p, mu). The boundedness
/// hypothesis is verified first and its violation is reported as a
/// PreconditionError, never as a failed bound.
BoundCheck paturi_check(const Polynomial& p, const Rational& mu,
                        const Rational& tol = Rational(1,
                                                       kCheckTolDenominator),
                        int precision_bits = 128);

/// Same check specialized to T_d, where the left side is exact: T_d is
/// bounded by 1 on [-1, 1] identically and increasing on [1, inf), so
/// max |T_d| on [1, 1 + mu] is the exact rational T_d(1 + mu).
BoundCheck paturi_check_chebyshev(int d, const Rational& mu,
                                  int precision_bits = 128);

/// Domain-shrinking corollary: range width on [a + eps(b-a), b] must be at
/// least half the width on [a, b], provided eps <= 1/(100 deg^2).
BoundCheck shrink_range_check(const Polynomial& p, const Rational& a,
                              const Rational& b, const Rational& eps,
                              const Rational& tol = Rational(
                                  1, kCheckTolDenominator));

/// Discrete-vs-continuous range check on points z_1 < ... < z_M spanning
/// [lo, hi]: after shifting [lo, hi] to [0, N], consecutive gaps must be
/// <= 1 and deg(p)^2 <= N; then the discrete range over the points must be
/// at least half the continuous range. Hypothesis violations name the
/// offending gap or degree.
BoundCheck discrete_range_check(const Polynomial& p,
                                const std::vector<Rational>& points,
                                const Rational& lo, const Rational& hi,
                                const Rational& tol = Rational(
                                    1, kCheckTolDenominator));

}  // namespace qcount
