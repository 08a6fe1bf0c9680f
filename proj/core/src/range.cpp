#include "qcount/range.hpp"

#include <queue>
#include <utility>
#include <vector>

namespace qcount {

namespace {

struct Segment {
  Rational xl, xr;
  Rational fl, fr;
  Rational ub;  // certified upper bound for f on [xl, xr]
};

struct SegmentLess {
  bool operator()(const Segment& s, const Segment& t) const {
    return s.ub < t.ub;
  }
};

Rational segment_ub(const Segment& s, const Rational& lipschitz) {
  Rational base = s.fl > s.fr ? s.fl : s.fr;
  return base + lipschitz * (s.xr - s.xl) / 2;
}

// Maximize sign*p over [a, b] given the precomputed grid, a certified
// Lipschitz constant, and a target tolerance. Returns (value, witness).
std::pair<Rational, Rational> bnb_max(const Polynomial& p, int sign,
                                      const std::vector<Rational>& xs,
                                      const std::vector<Rational>& fs,
                                      const Rational& lipschitz,
                                      const Rational& tol) {
  auto value = [&](const Rational& x) { return sign * p.eval(x); };

  Rational best = sign * fs[0];
  Rational witness = xs[0];
  std::priority_queue<Segment, std::vector<Segment>, SegmentLess> queue;
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    Rational fl = sign * fs[i], fr = sign * fs[i + 1];
    if (fl > best) best = fl, witness = xs[i];
    if (fr > best) best = fr, witness = xs[i + 1];
    Segment seg{xs[i], xs[i + 1], fl, fr, Rational(0)};
    seg.ub = segment_ub(seg, lipschitz);
    queue.push(std::move(seg));
  }

  constexpr long kSplitCap = 1 << 21;
  long splits = 0;
  while (!queue.empty()) {
    Segment top = queue.top();
    if (top.ub <= best + tol) break;
    queue.pop();
    if (++splits > kSplitCap) {
      throw ToleranceError(
          "range_on_interval: tolerance unreachable within iteration cap");
    }
    Rational mid = (top.xl + top.xr) / 2;
    Rational fm = value(mid);
    if (fm > best) best = fm, witness = mid;
    Segment left{top.xl, mid, top.fl, fm, Rational(0)};
    left.ub = segment_ub(left, lipschitz);
    Segment right{mid, top.xr, fm, top.fr, Rational(0)};
    right.ub = segment_ub(right, lipschitz);
    queue.push(std::move(left));
    queue.push(std::move(right));
  }
  return {best, witness};
}

}  // namespace

RangeReport range_on_interval(const Polynomial& p, const Rational& a,
                              const Rational& b, const Rational& tol) {
  if (!(a < b)) {
    throw std::invalid_argument(
        "range_on_interval: requires a < b (degenerate interval rejected)");
  }
  if (!(tol > 0)) {
    throw std::invalid_argument("range_on_interval: tol must be positive");
  }

  const int d = p.degree();
  if (d == 0) {
    const Rational c = p.coefficients()[0];
    return RangeReport{c, c, tol, a, a};
  }

  // Coarse grid with step (b-a)/(4d^2). For the true range width H,
  // Markov gives sup|p'| <= H d^2/(b-a), so the grid misses at most H/8 at
  // either end: H <= Hgrid + H/4, i.e. H <= (4/3) Hgrid. That certifies the
  // Lipschitz constant (4/3) Hgrid d^2/(b-a) used by the refinement.
  const long n0 = std::max(4L * d * d, 8L);
  std::vector<Rational> xs, fs;
  xs.reserve(n0 + 1);
  fs.reserve(n0 + 1);
  const Rational step = (b - a) / n0;
  for (long i = 0; i <= n0; ++i) {
    Rational x = (i == n0) ? b : a + step * i;
    xs.push_back(x);
    fs.push_back(p.eval(x));
  }
  Rational gmin = fs[0], gmax = fs[0];
  Rational wmin = xs[0], wmax = xs[0];
  for (size_t i = 1; i < fs.size(); ++i) {
    if (fs[i] < gmin) gmin = fs[i], wmin = xs[i];
    if (fs[i] > gmax) gmax = fs[i], wmax = xs[i];
  }
  if (gmin == gmax) {
    // Equal on more than d points: p is that constant.
    return RangeReport{gmin, gmax, tol, wmin, wmax};
  }
  const Rational lipschitz =
      Rational(4) / 3 * (gmax - gmin) * (d * d) / (b - a);

  auto [hi, whi] = bnb_max(p, +1, xs, fs, lipschitz, tol);
  auto [neg_lo, wlo] = bnb_max(p, -1, xs, fs, lipschitz, tol);
  return RangeReport{-neg_lo, hi, tol, wlo, whi};
}

}  // namespace qcount
