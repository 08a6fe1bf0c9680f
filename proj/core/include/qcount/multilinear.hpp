#pragma once

#include <cstdint>
#include <map>

#include "qcount/polynomial.hpp"

namespace qcount {

/// Real multilinear polynomial on {0,1}^N, stored as subset -> coefficient.
/// Monomials are squarefree by construction (subsets, not multisets).
class MultilinearPoly {
 public:
  explicit MultilinearPoly(int num_vars);

  int num_vars() const { return num_vars_; }
  int degree() const;

  /// Adds c * prod_{i in subset} x_i. Bits of `subset` index variables.
  void add_term(uint32_t subset, const Rational& coefficient);

  const std::map<uint32_t, Rational>& terms() const { return terms_; }

  /// Value on the假 assignment given by the bits of x.
  Rational eval(uint32_t x) const;

 private:
  int num_vars_;
  std::map<uint32_t, Rational> terms_;
};

/// Exact symmetrization: the unique polynomial of degree <= N interpolating
/// k -> E_{|X| = k}[p(X)] at k = 0..N, computed by brute-force enumeration
/// of every fixed-weight input. The interpolant's degree is verified to be
/// at most deg(p); enumeration is budget-guarded at max_vars variables.
Polynomial symmetrize(const MultilinearPoly& p, int max_vars = 20);

}  // namespace qcount
