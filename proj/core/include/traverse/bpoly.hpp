#pragma once

#include "traverse/rational.hpp"
#include "traverse/upoly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace traverse {

/// Sparse bivariate polynomial sum c_ij * a^i * b^j with rational coefficients.
/// The two variables are positional: (x, y) for scene curves, (s, t) for line
/// families after substitution.
class BPoly {
 public:
  using Exponent = std::pair<int, int>;

  BPoly() = default;
  explicit BPoly(std::map<Exponent, Rational> terms);

  static BPoly constant(const Rational& c);
  static BPoly first() { return monomial(1, 1, 0); }
  static BPoly second() { return monomial(1, 0, 1); }
  static BPoly monomial(const Rational& c, int i, int j);
  /// (x - cx)^2 + (y - cy)^2 - r^2
  static BPoly circle(const Rational& cx, const Rational& cy, const Rational& r);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  int total_degree() const;
  int degree_first() const;
  int degree_second() const;

  Rational operator()(const Rational& a, const Rational& b) const;

  BPoly partial_first() const;
  BPoly partial_second() const;

  /// p(a(s,t), b(s,t)).
  BPoly substitute(const BPoly& a, const BPoly& b) const;
  /// Coefficients of powers of the second variable, as polynomials in the first.
  std::vector<UPoly> coefficients_in_second() const;
  /// Restriction to a fixed value of the first variable.
  UPoly at_first(const Rational& a) const;
  /// Restriction to a fixed value of the second variable.
  UPoly at_second(const Rational& b) const;

  BPoly& operator+=(const BPoly& o);
  BPoly& operator-=(const BPoly& o);
  BPoly& operator*=(const BPoly& o);
  BPoly& operator*=(const Rational& s);
  friend BPoly operator+(BPoly a, const BPoly& b) { return a += b; }
  friend BPoly operator-(BPoly a, const BPoly& b) { return a -= b; }
  friend BPoly operator*(BPoly a, const BPoly& b) { return a *= b; }
  friend BPoly operator*(BPoly a, const Rational& s) { return a *= s; }
  friend BPoly operator*(const Rational& s, BPoly a) { return a *= s; }
  BPoly operator-() const { return *this * Rational(-1); }
  friend bool operator==(const BPoly& a, const BPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string(char first = 'x', char second = 'y') const;

 private:
  void prune();
  std::map<Exponent, Rational> terms_;
};

BPoly pow(const BPoly& base, int exponent);

/// Determinant over Q by Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

/// Sylvester-matrix resultant of two univariate polynomials given by formal
/// degree (coefficient lists may carry zero leading entries).
Rational sylvester_resultant(const std::vector<Rational>& f, const std::vector<Rational>& g);

/// Res_t(a, b) as a polynomial in s, computed by evaluation at integer points
/// and Newton interpolation; the formal t-degrees of a and b are kept at every
/// evaluation point so the result is the polynomial resultant.
UPoly resultant_second(const BPoly& a, const BPoly& b);

/// Newton interpolation through (xs[i], ys[i]).
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace traverse
