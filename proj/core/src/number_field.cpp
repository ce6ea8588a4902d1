#include "traverse/number_field.hpp"

#include "traverse/error.hpp"

#include <algorithm>
#include <utility>

namespace traverse {

NumberField::NumberField(RealAlgebraic alpha) : alpha_(std::move(alpha)) {
  if (alpha_.polynomial().degree() < 1) {
    throw Error(ErrorCode::Internal, "number field needs a nonconstant defining polynomial");
  }
}

NumberField::Element NumberField::reduce(const Element& e) const {
  if (e.degree() < modulus().degree()) return e;
  return e % modulus();
}

bool NumberField::is_zero(const Element& e) {
  Element r = reduce(e);
  if (r.is_zero()) return true;
  if (r.is_constant()) return false;
  UPoly g = traverse::gcd(modulus(), r);
  if (g.degree() <= 0) return false;
  if (alpha_.sign_of(g) == 0) {
    alpha_.restrict_polynomial(g);
    return true;
  }
  alpha_.restrict_polynomial((modulus() / g).monic());
  return false;
}

int NumberField::sign(const Element& e) {
  if (is_zero(e)) return 0;
  return alpha_.sign_of(reduce(e));
}

RationalInterval NumberField::enclosure(const Element& e) const {
  return traverse::evaluate(reduce(e), {alpha_.lo(), alpha_.hi()});
}

NumberField::Element NumberField::inverse(const Element& e) {
  if (is_zero(e)) throw Error(ErrorCode::Internal, "inverting zero in a number field");
  Element r = reduce(e);
  auto x = extended_gcd(r, modulus());
  if (x.g.degree() != 0) throw Error(ErrorCode::Internal, "non-invertible number field element");
  return reduce(x.s);
}

void NumberField::trim(Poly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
  for (auto& c : p) c = reduce(c);
}

int NumberField::degree(Poly& p) {
  trim(p);
  return static_cast<int>(p.size()) - 1;
}

NumberField::Poly NumberField::derivative(const Poly& p) const {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  return d;
}

std::pair<NumberField::Poly, NumberField::Poly> NumberField::divmod(Poly a, Poly b) {
  trim(a);
  trim(b);
  if (b.empty()) throw Error(ErrorCode::Internal, "division by zero polynomial over number field");
  if (a.size() < b.size()) return {Poly{}, a};
  const Element inv = inverse(b.back());
  Poly q(a.size() - b.size() + 1);
  const std::size_t db = b.size() - 1;
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i].is_zero()) continue;
    Element f = mul(a[i], inv);
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = sub(a[i - db + j], mul(f, b[j]));
  }
  a.resize(db);
  trim(a);
  return {q, a};
}

NumberField::Poly NumberField::gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  const Element inv = inverse(a.back());
  for (auto& c : a) c = mul(c, inv);
  return a;
}

NumberField::Poly NumberField::squarefree_part(Poly p) {
  trim(p);
  if (p.size() <= 1) return p;
  Poly g = gcd(p, derivative(p));
  if (g.size() <= 1) return p;
  return divmod(p, g).first;
}

NumberField::Element NumberField::evaluate(const Poly& p, const Rational& t) const {
  Element acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return reduce(acc);
}

int NumberField::sign_at(Poly& p, const std::optional<Rational>& t, bool positive_infinity) {
  trim(p);
  if (p.empty()) return 0;
  if (t) return sign(evaluate(p, *t));
  int s = sign(p.back());
  if (!positive_infinity && (p.size() % 2 == 0)) s = -s;
  return s;
}

std::vector<NumberField::Poly> NumberField::sturm_sequence(Poly p) {
  std::vector<Poly> chain;
  trim(p);
  if (p.empty()) return chain;
  auto normalize = [this](Poly q) {
    const Element lc = q.back();
    Element scale = inverse(lc);
    if (sign(lc) < 0) scale = -scale;
    for (auto& c : q) c = mul(c, scale);
    return q;
  };
  chain.push_back(normalize(p));
  Poly d = derivative(chain.back());
  trim(d);
  if (d.empty()) return chain;
  chain.push_back(normalize(d));
  while (true) {
    Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(normalize(r));
  }
  return chain;
}

namespace {

int changes(const std::vector<int>& signs) {
  int n = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++n;
    last = s;
  }
  return n;
}

}  // namespace

int NumberField::count_roots_half_open(std::vector<Poly>& chain, const std::optional<Rational>& a,
                                       const std::optional<Rational>& b) {
  if (chain.empty()) return 0;
  if (a && b && *a >= *b) return 0;
  auto variations = [&](const std::optional<Rational>& x, bool positive) {
    std::vector<int> signs;
    for (auto& q : chain) signs.push_back(sign_at(q, x, positive));
    return changes(signs);
  };
  return variations(a, false) - variations(b, true);
}

int NumberField::count_roots(Poly p, const Rational& a, const Rational& b) {
  if (a > b) return 0;
  Poly sf = squarefree_part(std::move(p));
  if (sf.empty()) throw Error(ErrorCode::Internal, "counting roots of zero polynomial");
  const int at_a = is_zero(evaluate(sf, a)) ? 1 : 0;
  if (a == b) return at_a;
  auto chain = sturm_sequence(sf);
  return count_roots_half_open(chain, a, b) + at_a;
}

int NumberField::count_roots_open(Poly p, const std::optional<Rational>& a,
                                  const std::optional<Rational>& b) {
  Poly sf = squarefree_part(std::move(p));
  if (sf.empty()) throw Error(ErrorCode::Internal, "counting roots of zero polynomial");
  auto chain = sturm_sequence(sf);
  int n = count_roots_half_open(chain, a, b);
  if (b && is_zero(evaluate(sf, *b))) --n;
  return n;
}

Rational NumberField::root_bound(Poly p) {
  trim(p);
  if (p.size() <= 1) return 1;
  // Cauchy bound from enclosures: 1 + max |c_i| / |c_n|.
  RationalInterval lc = enclosure(p.back());
  while (lc.contains_zero()) {
    alpha_.refine();
    lc = enclosure(p.back());
  }
  const Rational lc_min = lc.lo > 0 ? lc.lo : -lc.hi;
  Rational m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    RationalInterval e = enclosure(p[i]);
    Rational mag = abs(e.lo) > abs(e.hi) ? abs(e.lo) : abs(e.hi);
    if (mag / lc_min > m) m = mag / lc_min;
  }
  return m + 2;
}

std::vector<RationalInterval> NumberField::isolate_roots(Poly p, const std::optional<Rational>& a,
                                                          const std::optional<Rational>& b) {
  std::vector<RationalInterval> out;
  trim(p);
  if (p.size() <= 1) return out;
  auto chain = sturm_sequence(p);
  const Rational bound = root_bound(p);
  const Rational lo = a ? *a : -bound;
  const Rational hi = b ? *b : bound;
  if (lo >= hi) return out;
  auto root_at = [&](const Rational& x) { return is_zero(evaluate(p, x)); };
  // Bisection over half-open cells (l, h]; roots at lo are excluded by construction.
  std::vector<std::pair<Rational, Rational>> stack{{lo, hi}};
  while (!stack.empty()) {
    auto [l, h] = stack.back();
    stack.pop_back();
    const int n = count_roots_half_open(chain, l, h);
    if (n == 0) continue;
    if (n > 1) {
      Rational mid = midpoint(l, h);
      stack.emplace_back(mid, h);
      stack.emplace_back(l, mid);
      continue;
    }
    if (root_at(h)) {
      if (h != hi || !b) out.push_back({h, h});
      continue;
    }
    // One root in (l, h) and p(h) != 0; push l off a neighbouring root.
    while (l != h && root_at(l)) {
      Rational mid = midpoint(l, h);
      if (root_at(mid)) {
        l = h = mid;
        break;
      }
      if (count_roots_half_open(chain, mid, h) == 1) {
        l = mid;
      } else {
        h = mid;
      }
    }
    out.push_back({l, h});
  }
  std::sort(out.begin(), out.end(),
            [](const RationalInterval& x, const RationalInterval& y) { return x.lo < y.lo; });
  return out;
}

void NumberField::refine_root(Poly& p, RationalInterval& interval) {
  if (interval.lo == interval.hi) return;
  Rational mid = midpoint(interval.lo, interval.hi);
  const int s_mid = sign_at(p, mid);
  if (s_mid == 0) {
    interval = {mid, mid};
    return;
  }
  const int s_lo = sign_at(p, interval.lo);
  if (s_mid == s_lo) {
    interval.lo = mid;
  } else {
    interval.hi = mid;
  }
}

NumberField::Poly specialize(const std::vector<UPoly>& coeffs_in_s) {
  return NumberField::Poly(coeffs_in_s.begin(), coeffs_in_s.end());
}

}  // namespace traverse
