#pragma once

#include "traverse/rational.hpp"
#include "traverse/upoly.hpp"

#include <optional>
#include <vector>

namespace traverse {

/// Closed rational interval used for enclosures.
struct RationalInterval {
  Rational lo, hi;

  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  Rational width() const { return hi - lo; }
};

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
/// Horner enclosure of p over [x.lo, x.hi].
RationalInterval evaluate(const UPoly& p, const RationalInterval& x);

/// Sturm chain p, p', -rem(...), each scaled to a +-1 leading coefficient.
std::vector<UPoly> sturm_sequence(const UPoly& p);

int sign_variations(const std::vector<UPoly>& chain, const Rational& x);
int sign_variations_at_infinity(const std::vector<UPoly>& chain, bool positive);

/// Number of distinct real roots of p in (a, b].
int count_roots_half_open(const std::vector<UPoly>& chain, const Rational& a, const Rational& b);
/// Number of distinct real roots of p in the closed interval [a, b].
int count_roots(const UPoly& p, const Rational& a, const Rational& b);
/// Number of distinct real roots of p.
int count_real_roots(const UPoly& p);

/// Bound strictly exceeding the modulus of every complex root.
Rational root_bound(const UPoly& p);

/// A real algebraic number: the unique root of a square-free polynomial inside
/// an isolating interval. Either lo == hi (the number is that rational), or the
/// defining polynomial is nonzero with opposite signs at lo and hi.
class RealAlgebraic {
 public:
  RealAlgebraic() = default;
  RealAlgebraic(UPoly squarefree, Rational lo, Rational hi);
  static RealAlgebraic from_rational(const Rational& value);

  const UPoly& polynomial() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool is_exact() const { return lo_ == hi_; }

  /// Halves the isolating interval.
  void refine();
  void refine_until(const Rational& width);
  double approx() const;
  /// Exact value when the number is rational and recognisable by its
  /// simplest rational approximation.
  std::optional<Rational> rational_value();

  /// Swaps the defining polynomial for a factor that still vanishes here.
  void restrict_polynomial(const UPoly& factor);

  /// Signs of a polynomial at this number, exact.
  int sign_of(const UPoly& p);

 private:
  UPoly poly_;
  Rational lo_, hi_;
  int sign_lo_ = 0;
};

/// Three-way exact comparison; refines the operands.
int compare(RealAlgebraic& a, RealAlgebraic& b);
int compare(RealAlgebraic& a, const Rational& q);

/// Sorted isolating intervals for all real roots of a square-free polynomial.
std::vector<RealAlgebraic> isolate_real_roots(const UPoly& squarefree);

struct RealRoot {
  RealAlgebraic value;
  int multiplicity = 1;
};

/// Real roots of a nonzero polynomial, sorted, with exact multiplicities.
/// Throws Error(InvalidArgument) on the zero polynomial.
std::vector<RealRoot> real_roots_with_multiplicities(const UPoly& p);

/// Sorts numbers in place and refines until consecutive intervals are disjoint.
/// Returns false when two of them are equal.
bool separate(std::vector<RealAlgebraic*>& numbers);

}  // namespace traverse
