#include "qcount/polynomial.hpp"

#include <algorithm>

namespace qcount {

namespace {

void trim(std::vector<Rational>& c) {
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  if (c.empty()) c.push_back(Rational(0));
}

/// Monomial coefficient rows of T_0 .. T_n via the three-term recurrence.
std::vector<std::vector<Rational>> chebyshev_rows(int n) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(n + 1);
  rows.push_back({Rational(1)});
  if (n >= 1) rows.push_back({Rational(0), Rational(1)});
  for (int d = 2; d <= n; ++d) {
    std::vector<Rational> next(d + 1, Rational(0));
    const auto& prev = rows[d - 1];
    const auto& prev2 = rows[d - 2];
    for (size_t i = 0; i < prev.size(); ++i) next[i + 1] = 2 * prev[i];
    for (size_t i = 0; i < prev2.size(); ++i) next[i] -= prev2[i];
    rows.push_back(std::move(next));
  }
  return rows;
}

}  // namespace

Basis Basis::chebyshev_on(const Rational& a, const Rational& b) {
  if (!(a < b)) throw std::invalid_argument("Chebyshev basis requires a < b");
  Basis basis;
  basis.kind = Kind::Chebyshev;
  basis.a = a;
  basis.b = b;
  return basis;
}

bool Basis::operator==(const Basis& other) const {
  if (kind != other.kind) return false;
  if (kind == Kind::Monomial) return true;
  return a == other.a && b == other.b;
}

Polynomial Polynomial::constant(const Rational& c) {
  Polynomial p;
  p.coeffs_ = {c};
  return p;
}

Polynomial Polynomial::from_coefficients(std::vector<Rational> coeffs,
                                         const Basis& basis) {
  Polynomial p;
  p.basis_ = basis;
  p.coeffs_ = std::move(coeffs);
  trim(p.coeffs_);
  return p;
}

Polynomial Polynomial::power(int d) {
  if (d < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Rational> c(d + 1, Rational(0));
  c[d] = 1;
  return from_coefficients(std::move(c));
}

bool Polynomial::is_zero() const {
  return coeffs_.size() == 1 && coeffs_[0] == 0;
}

Rational Polynomial::eval(const Rational& x) const {
  if (basis_.kind == Basis::Kind::Monomial) {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }
  // Clenshaw on the mapped variable t in [-1, 1].
  Rational t = (2 * x - basis_.a - basis_.b) / (basis_.b - basis_.a);
  Rational b1(0), b2(0);
  for (int k = degree(); k >= 1; --k) {
    Rational bk = coeffs_[k] + 2 * t * b1 - b2;
    b2 = b1;
    b1 = bk;
  }
  return coeffs_[0] + t * b1 - b2;
}

Polynomial Polynomial::derivative() const {
  int n = degree();
  if (basis_.kind == Basis::Kind::Monomial) {
    if (n == 0) return Polynomial();
    std::vector<Rational> d(n);
    for (int k = 1; k <= n; ++k) d[k - 1] = Rational(k) * coeffs_[k];
    return from_coefficients(std::move(d));
  }
  // d/dt of sum c_k T_k(t): d_{k-1} = d_{k+1} + 2k c_k, then halve d_0;
  // chain rule multiplies by dt/dx = 2/(b-a).
  if (n == 0) return Polynomial::from_coefficients({Rational(0)}, basis_);
  std::vector<Rational> d(n + 2, Rational(0));
  for (int k = n; k >= 1; --k) {
    d[k - 1] = d[k + 1] + Rational(2 * k) * coeffs_[k];
  }
  d[0] /= 2;
  d.resize(n);
  Rational scale = Rational(2) / (basis_.b - basis_.a);
  for (auto& c : d) c *= scale;
  return from_coefficients(std::move(d), basis_);
}

Polynomial Polynomial::operator-() const { return scaled(Rational(-1)); }

Polynomial Polynomial::scaled(const Rational& s) const {
  std::vector<Rational> c = coeffs_;
  for (auto& v : c) v *= s;
  return from_coefficients(std::move(c), basis_);
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  if (!(p.basis_ == q.basis_)) {
    throw std::invalid_argument("polynomial addition across bases");
  }
  std::vector<Rational> c(std::max(p.coeffs_.size(), q.coeffs_.size()),
                          Rational(0));
  for (size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
  for (size_t i = 0; i < q.coeffs_.size(); ++i) c[i] += q.coeffs_[i];
  return Polynomial::from_coefficients(std::move(c), p.basis_);
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
  return p + (-q);
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.basis_.kind != Basis::Kind::Monomial ||
      q.basis_.kind != Basis::Kind::Monomial) {
    throw std::invalid_argument("polynomial product requires monomial basis");
  }
  std::vector<Rational> c(p.coeffs_.size() + q.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < q.coeffs_.size(); ++j) {
      c[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
  }
  return Polynomial::from_coefficients(std::move(c));
}

bool Polynomial::operator==(const Polynomial& other) const {
  return basis_ == other.basis_ && coeffs_ == other.coeffs_;
}

Polynomial chebyshev(int d) {
  if (d < 0) throw std::invalid_argument("chebyshev degree must be >= 0");
  auto rows = chebyshev_rows(d);
  return Polynomial::from_coefficients(std::move(rows[d]));
}

Polynomial compose_linear(const Polynomial& p, const Rational& alpha,
                          const Rational& beta) {
  const Polynomial mono = to_monomial(p);
  Polynomial acc = Polynomial::constant(mono.coefficients().back());
  Polynomial lin = Polynomial::from_coefficients({beta, alpha});
  for (int k = mono.degree() - 1; k >= 0; --k) {
    acc = acc * lin + Polynomial::constant(mono.coefficients()[k]);
  }
  return acc;
}

Polynomial affine_compose(const Polynomial& p, const Rational& a,
                          const Rational& b) {
  if (!(a < b)) throw std::invalid_argument("affine_compose requires a < b");
  // x |-> (2x - a - b) / (b - a)
  Rational alpha = Rational(2) / (b - a);
  Rational beta = -(a + b) / (b - a);
  return compose_linear(p, alpha, beta);
}

Polynomial to_monomial(const Polynomial& p) {
  if (p.basis().kind == Basis::Kind::Monomial) return p;
  auto rows = chebyshev_rows(p.degree());
  std::vector<Rational> in_t(p.degree() + 1, Rational(0));
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational& c = p.coefficients()[k];
    if (c == 0) continue;
    for (size_t i = 0; i < rows[k].size(); ++i) in_t[i] += c * rows[k][i];
  }
  // substitute t = (2x - a - b) / (b - a)
  Polynomial q = Polynomial::from_coefficients(std::move(in_t));
  Rational alpha = Rational(2) / (p.basis().b - p.basis().a);
  Rational beta = -(p.basis().a + p.basis().b) / (p.basis().b - p.basis().a);
  return compose_linear(q, alpha, beta);
}

Polynomial to_chebyshev(const Polynomial& p, const Rational& a,
                        const Rational& b) {
  if (!(a < b)) throw std::invalid_argument("to_chebyshev requires a < b");
  // q(t) = p(((b-a)t + a + b) / 2) as a monomial polynomial in t,
  // then peel Chebyshev coefficients from the top degree down.
  Polynomial mono = to_monomial(p);
  Polynomial q = compose_linear(mono, (b - a) / 2, (a + b) / 2);
  int n = q.degree();
  auto rows = chebyshev_rows(n);
  std::vector<Rational> work = q.coefficients();
  std::vector<Rational> cheb(n + 1, Rational(0));
  for (int k = n; k >= 2; --k) {
    // leading coefficient of T_k is 2^(k-1)
    Rational lead = rows[k][k];
    Rational ck = work[k] / lead;
    cheb[k] = ck;
    if (ck != 0) {
      for (size_t i = 0; i < rows[k].size(); ++i) work[i] -= ck * rows[k][i];
    }
  }
  if (n >= 1) cheb[1] = work[1];
  cheb[0] = work[0];
  return Polynomial::from_coefficients(std::move(cheb),
                                       Basis::chebyshev_on(a, b));
}

Rational laurent_eval(const LaurentPoly& q, const Rational& k) {
  if (k == 0) throw std::domain_error("Laurent polynomial pole at k = 0");
  return q.u.eval(k) + q.v.eval(Rational(1) / k);
}

}  // namespace qcount
