#pragma once

#include <vector>

#include "qcount/rational.hpp"

namespace qcount {

/// Coefficient basis. Chebyshev coefficients always carry the reference
/// interval [a, b] they were expanded on; an implicit interval is how
/// Chebyshev bugs happen.
struct Basis {
  enum class Kind { Monomial, Chebyshev };
  Kind kind = Kind::Monomial;
  Rational a = Rational(-1);
  Rational b = Rational(1);

  static Basis monomial() { return Basis{}; }
  static Basis chebyshev_on(const Rational& a, const Rational& b);
  bool operator==(const Basis& other) const;
};

/// Dense univariate polynomial over exact rationals.
/// coefficients()[i] multiplies the degree-i basis element; the vector is
/// trimmed so the leading coefficient is nonzero unless the polynomial is
/// identically zero (stored as the single coefficient 0).
class Polynomial {
 public:
  Polynomial() : basis_(Basis::monomial()), coeffs_{Rational(0)} {}

  static Polynomial constant(const Rational& c);
  static Polynomial from_coefficients(std::vector<Rational> coeffs,
                                      const Basis& basis = Basis::monomial());
  /// Monomial x^d.
  static Polynomial power(int d);

  const Basis& basis() const { return basis_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const;

  /// Exact value at x in the declared basis (Horner / Clenshaw).
  Rational eval(const Rational& x) const;

  /// Exact formal derivative, in the same basis family. Chebyshev input
  /// differentiates through the coefficient recurrence and picks up the
  /// 2/(b-a) chain-rule factor from the reference interval.
  Polynomial derivative() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  Polynomial scaled(const Rational& s) const;

  bool operator==(const Polynomial& other) const;

 private:
  Basis basis_;
  std::vector<Rational> coeffs_;
};

/// Degree-d Chebyshev polynomial of the first kind, monomial basis.
Polynomial chebyshev(int d);

/// p composed with the affine map of [a, b] onto [-1, 1]:
/// result(x) = p((2x - a - b) / (b - a)). Degree is preserved. Requires a < b.
Polynomial affine_compose(const Polynomial& p, const Rational& a,
                          const Rational& b);

/// p(alpha * x + beta) expanded in the monomial basis.
Polynomial compose_linear(const Polynomial& p, const Rational& alpha,
                          const Rational& beta);

/// Exact change of basis.
Polynomial to_monomial(const Polynomial& p);
Polynomial to_chebyshev(const Polynomial& p, const Rational& a,
                        const Rational& b);

/// q(k) = u(k) + v(1/k): a Laurent polynomial with maximum exponent deg(u)
/// and minimum exponent -deg(v).
struct LaurentPoly {
  Polynomial u;
  Polynomial v;

  int max_exponent() const { return u.degree(); }
  int min_exponent() const { return -v.degree(); }
};

/// Exact evaluation of a Laurent polynomial; k = 0 is a pole.
Rational laurent_eval(const LaurentPoly& q, const Rational& k);

}  // namespace qcount
