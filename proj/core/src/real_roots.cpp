#include "traverse/real_roots.hpp"

#include "traverse/error.hpp"

#include <algorithm>
#include <utility>

namespace traverse {

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  Rational lo = p[0], hi = p[0];
  for (const auto& v : p) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return {lo, hi};
}

RationalInterval evaluate(const UPoly& p, const RationalInterval& x) {
  if (x.lo == x.hi) {
    Rational v = p(x.lo);
    return {v, v};
  }
  RationalInterval acc{0, 0};
  const auto coeffs = p.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x;
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p.sign_normalized());
  UPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d.sign_normalized());
  while (true) {
    UPoly r = -(chain[chain.size() - 2] % chain.back());
    if (r.is_zero()) break;
    chain.push_back(r.sign_normalized());
  }
  return chain;
}

namespace {

int count_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int sign_variations(const std::vector<UPoly>& chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(q.sign_at(x));
  return count_changes(signs);
}

int sign_variations_at_infinity(const std::vector<UPoly>& chain, bool positive) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) {
    int s = sgn(q.leading());
    if (!positive && (q.degree() % 2 == 1)) s = -s;
    signs.push_back(s);
  }
  return count_changes(signs);
}

int count_roots_half_open(const std::vector<UPoly>& chain, const Rational& a, const Rational& b) {
  if (chain.empty() || a >= b) return 0;
  return sign_variations(chain, a) - sign_variations(chain, b);
}

int count_roots(const UPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "counting roots of the zero polynomial");
  if (a > b) return 0;
  UPoly sf = squarefree_part(p);
  int at_a = sf(a) == 0 ? 1 : 0;
  if (a == b) return at_a;
  return count_roots_half_open(sturm_sequence(sf), a, b) + at_a;
}

int count_real_roots(const UPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "counting roots of the zero polynomial");
  auto chain = sturm_sequence(squarefree_part(p));
  return sign_variations_at_infinity(chain, false) - sign_variations_at_infinity(chain, true);
}

Rational root_bound(const UPoly& p) {
  Rational m = 0;
  const Rational lc = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coefficient(i)) / lc;
    if (r > m) m = r;
  }
  return m + 1;
}

RealAlgebraic::RealAlgebraic(UPoly squarefree, Rational lo, Rational hi)
    : poly_(std::move(squarefree)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ != hi_) sign_lo_ = poly_.sign_at(lo_);
}

RealAlgebraic RealAlgebraic::from_rational(const Rational& value) {
  return RealAlgebraic(UPoly{-value, 1}, value, value);
}

void RealAlgebraic::refine() {
  if (is_exact()) return;
  Rational mid = midpoint(lo_, hi_);
  const int s = poly_.sign_at(mid);
  if (s == 0) {
    lo_ = hi_ = mid;
    poly_ = UPoly{-mid, 1};
  } else if (s == sign_lo_) {
    lo_ = std::move(mid);
  } else {
    hi_ = std::move(mid);
  }
}

void RealAlgebraic::refine_until(const Rational& width) {
  while (!is_exact() && hi_ - lo_ > width) refine();
}

double RealAlgebraic::approx() const { return to_double(midpoint(lo_, hi_)); }

std::optional<Rational> RealAlgebraic::rational_value() {
  if (is_exact()) return lo_;
  // A rational root p/q of the integer polynomial c * poly has q dividing its
  // leading coefficient L. Once the interval is narrower than 1/L^2 it holds at
  // most one rational with denominator <= L, and that is the simplest one.
  Integer den = 1;
  for (const auto& c : poly_.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  const Rational lead = abs(poly_.leading() * den);
  refine_until(Rational(1) / (lead * lead) / 2);
  if (is_exact()) return lo_;
  Rational candidate = simplest_between(lo_, hi_);
  if (poly_(candidate) == 0) {
    lo_ = hi_ = candidate;
    poly_ = UPoly{-candidate, 1};
    return candidate;
  }
  return std::nullopt;
}

void RealAlgebraic::restrict_polynomial(const UPoly& factor) {
  if (is_exact()) return;
  poly_ = factor;
  sign_lo_ = poly_.sign_at(lo_);
}

int RealAlgebraic::sign_of(const UPoly& p) {
  if (p.is_zero()) return 0;
  if (is_exact()) return p.sign_at(lo_);
  UPoly g = gcd(poly_, p);
  if (g.degree() > 0 && count_roots(g, lo_, hi_) > 0) return 0;
  while (true) {
    RationalInterval e = evaluate(p, {lo_, hi_});
    if (e.lo > 0) return 1;
    if (e.hi < 0) return -1;
    refine();
    if (is_exact()) return p.sign_at(lo_);
  }
}

int compare(RealAlgebraic& a, const Rational& q) {
  if (a.is_exact()) return a.lo() < q ? -1 : (a.lo() > q ? 1 : 0);
  if (q <= a.lo()) return 1;
  if (q >= a.hi()) return -1;
  const int s = a.polynomial().sign_at(q);
  if (s == 0) {
    a = RealAlgebraic::from_rational(q);
    return 0;
  }
  // Bisect at q: the sign at q tells which side holds the root.
  const int s_lo = a.polynomial().sign_at(a.lo());
  if (s == s_lo) {
    a = RealAlgebraic(a.polynomial(), q, a.hi());
    return 1;
  }
  a = RealAlgebraic(a.polynomial(), a.lo(), q);
  return -1;
}

int compare(RealAlgebraic& a, RealAlgebraic& b) {
  if (a.is_exact()) return -compare(b, a.lo());
  if (b.is_exact()) return compare(a, b.lo());
  bool known_distinct = false;
  while (true) {
    if (a.hi() < b.lo()) return -1;
    if (b.hi() < a.lo()) return 1;
    if (a.is_exact()) return -compare(b, a.lo());
    if (b.is_exact()) return compare(a, b.lo());
    if (!known_distinct) {
      UPoly g = gcd(a.polynomial(), b.polynomial());
      if (g.degree() > 0 && count_roots(g, a.lo(), a.hi()) > 0 &&
          count_roots(g, b.lo(), b.hi()) > 0) {
        a.restrict_polynomial(g);
        b.restrict_polynomial(g);
        const Rational lo = std::min(a.lo(), b.lo());
        const Rational hi = std::max(a.hi(), b.hi());
        if (count_roots(g, lo, hi) == 1) return 0;
      }
      known_distinct = true;
    }
    if (a.hi() - a.lo() >= b.hi() - b.lo()) {
      a.refine();
    } else {
      b.refine();
    }
  }
}

std::vector<RealAlgebraic> isolate_real_roots(const UPoly& squarefree) {
  std::vector<RealAlgebraic> roots;
  if (squarefree.degree() <= 0) return roots;
  const auto chain = sturm_sequence(squarefree);
  const Rational bound = root_bound(squarefree);
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    const int n = count_roots_half_open(chain, lo, hi);
    if (n == 0) continue;
    if (n > 1) {
      Rational mid = midpoint(lo, hi);
      stack.emplace_back(mid, hi);
      stack.emplace_back(lo, mid);
      continue;
    }
    if (squarefree.sign_at(hi) == 0) {
      roots.push_back(RealAlgebraic::from_rational(hi));
      continue;
    }
    // The root lies in (lo, hi); move lo off a neighbouring root if necessary.
    while (squarefree.sign_at(lo) == 0) {
      Rational mid = midpoint(lo, hi);
      if (squarefree.sign_at(mid) == 0) {
        // Cannot be the neighbour at lo, so it is ours.
        lo = hi = mid;
        break;
      }
      if (count_roots_half_open(chain, mid, hi) == 1) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    if (lo == hi) {
      roots.push_back(RealAlgebraic::from_rational(lo));
    } else {
      roots.emplace_back(squarefree, lo, hi);
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const RealAlgebraic& x, const RealAlgebraic& y) { return x.lo() < y.lo(); });
  return roots;
}

bool separate(std::vector<RealAlgebraic*>& numbers) {
  bool distinct = true;
  std::stable_sort(numbers.begin(), numbers.end(), [&](RealAlgebraic* x, RealAlgebraic* y) {
    const int c = compare(*x, *y);
    if (c == 0) distinct = false;
    return c < 0;
  });
  if (!distinct) return false;
  for (std::size_t i = 0; i + 1 < numbers.size(); ++i) {
    if (compare(*numbers[i], *numbers[i + 1]) == 0) return false;
  }
  return true;
}

std::vector<RealRoot> real_roots_with_multiplicities(const UPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "real roots of the zero polynomial");
  const auto factors = squarefree_decomposition(p);
  std::vector<RealRoot> roots;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    for (auto& r : isolate_real_roots(factors[k])) {
      roots.push_back({std::move(r), static_cast<int>(k) + 1});
    }
  }
  std::vector<RealAlgebraic*> ptrs;
  for (auto& r : roots) ptrs.push_back(&r.value);
  // Roots of distinct square-free factors never coincide.
  separate(ptrs);
  std::vector<RealRoot> sorted;
  sorted.reserve(roots.size());
  for (auto* ptr : ptrs) {
    auto it = std::find_if(roots.begin(), roots.end(), [&](const RealRoot& r) { return &r.value == ptr; });
    sorted.push_back(*it);
  }
  return sorted;
}

}  // namespace traverse
