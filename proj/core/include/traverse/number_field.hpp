#pragma once

#include "traverse/rational.hpp"
#include "traverse/real_roots.hpp"
#include "traverse/upoly.hpp"

#include <optional>
#include <vector>

namespace traverse {

/// Arithmetic in Q(alpha) for a real algebraic alpha, without factoring its
/// defining polynomial: zero tests split the modulus by gcd and keep the factor
/// that vanishes at alpha (dynamic evaluation). Elements are polynomials in
/// alpha; they stay valid when the modulus shrinks since each new modulus
/// divides the old one.
class NumberField {
 public:
  using Element = UPoly;
  /// Polynomial in t over the field, lowest degree first, trimmed lazily.
  using Poly = std::vector<Element>;

  explicit NumberField(RealAlgebraic alpha);

  const RealAlgebraic& generator() const { return alpha_; }
  RealAlgebraic& generator() { return alpha_; }
  const UPoly& modulus() const { return alpha_.polynomial(); }

  Element reduce(const Element& e) const;
  Element lift(const Rational& q) const { return UPoly::constant(q); }

  bool is_zero(const Element& e);
  int sign(const Element& e);
  /// Enclosure of the element's value at the current isolating interval.
  RationalInterval enclosure(const Element& e) const;
  /// Requires a nonzero element.
  Element inverse(const Element& e);

  Element add(const Element& a, const Element& b) const { return reduce(a + b); }
  Element sub(const Element& a, const Element& b) const { return reduce(a - b); }
  Element mul(const Element& a, const Element& b) const { return reduce(a * b); }

  // Polynomials over the field.
  /// Removes leading coefficients that vanish at alpha.
  void trim(Poly& p);
  int degree(Poly& p);
  Poly derivative(const Poly& p) const;
  std::pair<Poly, Poly> divmod(Poly a, Poly b);
  Poly gcd(Poly a, Poly b);
  Poly squarefree_part(Poly p);
  Element evaluate(const Poly& p, const Rational& t) const;
  /// Sign of p at t, or at +-infinity when t is empty.
  int sign_at(Poly& p, const std::optional<Rational>& t, bool positive_infinity = true);

  std::vector<Poly> sturm_sequence(Poly p);
  /// Distinct real roots in (a, b]; an empty bound means infinity of that side.
  int count_roots_half_open(std::vector<Poly>& chain, const std::optional<Rational>& a,
                            const std::optional<Rational>& b);
  /// Distinct real roots in the closed interval [a, b].
  int count_roots(Poly p, const Rational& a, const Rational& b);
  /// Distinct real roots in the open interval (a, b); empty bounds are infinite.
  int count_roots_open(Poly p, const std::optional<Rational>& a, const std::optional<Rational>& b);

  /// A rational bound B with every real root in (-B, B).
  Rational root_bound(Poly p);

  /// Isolating intervals [lo, hi] (lo == hi for rational roots) of the real
  /// roots of a square-free p inside the open interval (a, b).
  std::vector<RationalInterval> isolate_roots(Poly p, const std::optional<Rational>& a,
                                              const std::optional<Rational>& b);

  /// Shrinks an isolating interval of the unique root of squarefree p inside it.
  void refine_root(Poly& p, RationalInterval& interval);

 private:
  RealAlgebraic alpha_;
};

/// Substitutes alpha for the first variable of coefficient polynomials:
/// coeffs[i](alpha) becomes the coefficient of t^i.
NumberField::Poly specialize(const std::vector<UPoly>& coeffs_in_s);

}  // namespace traverse
