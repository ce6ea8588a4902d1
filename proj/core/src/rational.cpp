#include "traverse/rational.hpp"

#include "traverse/error.hpp"

#include <stdexcept>

namespace traverse {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "PARSE";
    case ErrorCode::Io: return "IO";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::Validation: return "VALIDATION";
    case ErrorCode::DegenerateScene: return "DEGENERATE_SCENE";
    case ErrorCode::MatchingAmbiguous: return "MATCHING_AMBIGUOUS";
    case ErrorCode::BoundaryMismatch: return "BOUNDARY_MISMATCH";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return make_rational(Integer(text), Integer(1));
    return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::Parse, "not a rational number: '" + text + "'");
  }
}

double to_double(const Rational& q) { return q.get_d(); }

Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = (a + b) / 2;
  m.canonicalize();
  return m;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) return simplest_between(hi, lo);
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_between(-hi, -lo);
  const Integer c = ceil(lo);
  if (Rational(c) <= hi) return Rational(c);
  // lo and hi share the integer part; recurse on the reciprocals of the fractional parts.
  const Integer f = floor(lo);
  Rational inner = simplest_between(1 / (hi - f), 1 / (lo - f));
  Rational result = Rational(f) + 1 / inner;
  result.canonicalize();
  return result;
}

}  // namespace traverse
