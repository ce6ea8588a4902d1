#include "traverse/bpoly.hpp"

#include <algorithm>
#include <sstream>

namespace traverse {

BPoly::BPoly(std::map<Exponent, Rational> terms) : terms_(std::move(terms)) { prune(); }

void BPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      it->second.canonicalize();
      ++it;
    }
  }
}

BPoly BPoly::constant(const Rational& c) { return monomial(c, 0, 0); }

BPoly BPoly::monomial(const Rational& c, int i, int j) {
  BPoly p;
  if (c != 0) p.terms_[{i, j}] = c;
  return p;
}

BPoly BPoly::circle(const Rational& cx, const Rational& cy, const Rational& r) {
  BPoly dx = first() - constant(cx);
  BPoly dy = second() - constant(cy);
  return dx * dx + dy * dy - constant(r * r);
}

int BPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

int BPoly::degree_first() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int BPoly::degree_second() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

Rational BPoly::operator()(const Rational& a, const Rational& b) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int k = 0; k < e.first; ++k) term *= a;
    for (int k = 0; k < e.second; ++k) term *= b;
    acc += term;
  }
  return acc;
}

BPoly BPoly::partial_first() const {
  BPoly r;
  for (const auto& [e, c] : terms_) {
    if (e.first > 0) r.terms_[{e.first - 1, e.second}] += c * e.first;
  }
  r.prune();
  return r;
}

BPoly BPoly::partial_second() const {
  BPoly r;
  for (const auto& [e, c] : terms_) {
    if (e.second > 0) r.terms_[{e.first, e.second - 1}] += c * e.second;
  }
  r.prune();
  return r;
}

BPoly BPoly::substitute(const BPoly& a, const BPoly& b) const {
  const int da = degree_first(), db = degree_second();
  std::vector<BPoly> pa{constant(1)}, pb{constant(1)};
  for (int k = 1; k <= da; ++k) pa.push_back(pa.back() * a);
  for (int k = 1; k <= db; ++k) pb.push_back(pb.back() * b);
  BPoly r;
  for (const auto& [e, c] : terms_) r += pa[static_cast<std::size_t>(e.first)] * pb[static_cast<std::size_t>(e.second)] * c;
  return r;
}

std::vector<UPoly> BPoly::coefficients_in_second() const {
  const int dt = degree_second();
  if (dt < 0) return {};
  std::vector<std::vector<Rational>> raw(static_cast<std::size_t>(dt) + 1);
  for (const auto& [e, c] : terms_) {
    auto& v = raw[static_cast<std::size_t>(e.second)];
    if (static_cast<int>(v.size()) <= e.first) v.resize(static_cast<std::size_t>(e.first) + 1);
    v[static_cast<std::size_t>(e.first)] = c;
  }
  std::vector<UPoly> out;
  out.reserve(raw.size());
  for (auto& v : raw) out.emplace_back(std::move(v));
  return out;
}

UPoly BPoly::at_first(const Rational& a) const {
  std::vector<Rational> v(static_cast<std::size_t>(std::max(degree_second(), 0)) + 1);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int k = 0; k < e.first; ++k) term *= a;
    v[static_cast<std::size_t>(e.second)] += term;
  }
  return UPoly(std::move(v));
}

UPoly BPoly::at_second(const Rational& b) const {
  std::vector<Rational> v(static_cast<std::size_t>(std::max(degree_first(), 0)) + 1);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int k = 0; k < e.second; ++k) term *= b;
    v[static_cast<std::size_t>(e.first)] += term;
  }
  return UPoly(std::move(v));
}

BPoly& BPoly::operator+=(const BPoly& o) {
  for (const auto& [e, c] : o.terms_) terms_[e] += c;
  prune();
  return *this;
}

BPoly& BPoly::operator-=(const BPoly& o) {
  for (const auto& [e, c] : o.terms_) terms_[e] -= c;
  prune();
  return *this;
}

BPoly& BPoly::operator*=(const BPoly& o) {
  std::map<Exponent, Rational> r;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) r[{e1.first + e2.first, e1.second + e2.second}] += c1 * c2;
  }
  terms_ = std::move(r);
  prune();
  return *this;
}

BPoly& BPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

std::string BPoly::to_string(char first, char second) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool lead = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    out << (lead ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    lead = false;
    const Rational mag = abs(c);
    const bool bare = e.first == 0 && e.second == 0;
    if (mag != 1 || bare) out << traverse::to_string(mag);
    bool need_star = mag != 1;
    auto var = [&](char v, int k) {
      if (k == 0) return;
      if (need_star) out << "*";
      out << v;
      if (k > 1) out << "^" << k;
      need_star = true;
    };
    var(first, e.first);
    var(second, e.second);
  }
  return out.str();
}

BPoly pow(const BPoly& base, int exponent) {
  BPoly r = BPoly::constant(1);
  for (int k = 0; k < exponent; ++k) r *= base;
  return r;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

Rational sylvester_resultant(const std::vector<Rational>& f, const std::vector<Rational>& g) {
  const int m = static_cast<int>(f.size()) - 1;
  const int n = static_cast<int>(g.size()) - 1;
  if (m < 0 || n < 0) return 0;
  if (m == 0 && n == 0) return 1;
  const int size = m + n;
  std::vector<std::vector<Rational>> s(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size)));
  // Rows hold coefficients from the highest degree down.
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = f[static_cast<std::size_t>(m - k)];
  }
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = g[static_cast<std::size_t>(n - k)];
  }
  return determinant(std::move(s));
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  }
  UPoly result;
  for (std::size_t i = n; i-- > 0;) {
    result *= UPoly{-xs[i], 1};
    result += UPoly::constant(dd[i]);
  }
  return result;
}

UPoly resultant_second(const BPoly& a, const BPoly& b) {
  const auto ca = a.coefficients_in_second();
  const auto cb = b.coefficients_in_second();
  if (ca.empty() || cb.empty()) return {};
  const int ma = static_cast<int>(ca.size()) - 1;
  const int mb = static_cast<int>(cb.size()) - 1;
  const int bound = ma * std::max(b.degree_first(), 0) + mb * std::max(a.degree_first(), 0);
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= bound; ++k) {
    const Rational s(k);
    std::vector<Rational> fa, fb;
    for (const auto& c : ca) fa.push_back(c(s));
    for (const auto& c : cb) fb.push_back(c(s));
    xs.push_back(s);
    ys.push_back(sylvester_resultant(fa, fb));
  }
  return interpolate(xs, ys);
}

}  // namespace traverse
