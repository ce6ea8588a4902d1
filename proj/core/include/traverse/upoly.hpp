#pragma once

#include "traverse/rational.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace traverse {

/// Dense univariate polynomial with rational coefficients, lowest degree first.
/// The coefficient vector never carries trailing zeros; the zero polynomial is empty.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coefficients);
  UPoly(std::initializer_list<Rational> coefficients);

  static UPoly constant(const Rational& c);
  static UPoly monomial(const Rational& c, int degree);
  static UPoly variable() { return monomial(1, 1); }
  /// Product of (u - root) over the list.
  static UPoly from_roots(std::span<const Rational> roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of u^i; zero past the degree.
  Rational coefficient(int i) const;
  const Rational& leading() const { return coeffs_.back(); }
  std::span<const Rational> coefficients() const { return coeffs_; }

  Rational operator()(const Rational& u) const;
  int sign_at(const Rational& u) const;

  UPoly derivative() const;
  UPoly monic() const;
  /// Scales so that the leading coefficient is +1 or -1 (keeps the sign of every value).
  UPoly sign_normalized() const;
  /// p(q(u)).
  UPoly compose(const UPoly& inner) const;

  UPoly& operator+=(const UPoly& other);
  UPoly& operator-=(const UPoly& other);
  UPoly& operator*=(const UPoly& other);
  UPoly& operator*=(const Rational& scalar);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
  friend UPoly operator*(const Rational& s, UPoly a) { return a *= s; }
  UPoly operator-() const;

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char variable = 'u') const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

UPoly pow(const UPoly& base, int exponent);

/// Euclidean division; throws std::domain_error when dividing by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly operator/(const UPoly& a, const UPoly& b);
UPoly operator%(const UPoly& a, const UPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/// Returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
  UPoly g, s, t;
};
ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b);

/// p / gcd(p, p'), monic.
UPoly squarefree_part(const UPoly& p);

/// Yun decomposition: factors[k] is the product of the irreducible factors of
/// multiplicity exactly k + 1 (each monic, possibly constant 1).
std::vector<UPoly> squarefree_decomposition(const UPoly& p);

}  // namespace traverse
