#include <doctest.h>

#include "traverse/bpoly.hpp"
#include "traverse/error.hpp"
#include "traverse/number_field.hpp"
#include "traverse/parallel.hpp"
#include "traverse/rational.hpp"
#include "traverse/real_roots.hpp"
#include "traverse/upoly.hpp"

#include <atomic>
#include <random>
#include <stdexcept>

using namespace traverse;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

UPoly random_poly(std::mt19937_64& rng, int degree) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(q(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 5)));
  if (c.back() == 0) c.back() = 1;
  return UPoly(c);
}

}  // namespace

TEST_SUITE("kernel") {
  TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("-3/6") == q(-1, 2));
    CHECK(to_string(q(4, 2)) == "2");
    CHECK(to_string(q(-1, 3)) == "-1/3");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
  }

  TEST_CASE("simplest rational in an interval") {
    CHECK(simplest_between(q(1, 3), q(1, 2)) == q(1, 2));
    CHECK(simplest_between(q(3, 10), q(4, 10)) == q(1, 3));
    CHECK(simplest_between(q(-7, 5), q(-6, 5)) == q(-4, 3));
    CHECK(simplest_between(q(2), q(2)) == q(2));
  }

  TEST_CASE("polynomial division identity on random inputs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      UPoly a = random_poly(rng, static_cast<int>(rng() % 7));
      UPoly b = random_poly(rng, 1 + static_cast<int>(rng() % 4));
      auto [quot, rem] = divmod(a, b);
      CHECK(quot * b + rem == a);
      CHECK(rem.degree() < b.degree());
    }
  }

  TEST_CASE("gcd and extended gcd") {
    const Rational r1[] = {q(1), q(2), q(-1, 3)};
    const Rational r2[] = {q(2), q(5), q(-1, 3)};
    UPoly a = UPoly::from_roots(r1), b = UPoly::from_roots(r2);
    const Rational common[] = {q(2), q(-1, 3)};
    CHECK(gcd(a, b) == UPoly::from_roots(common));
    auto x = extended_gcd(a, b);
    CHECK(x.s * a + x.t * b == x.g);
  }

  TEST_CASE("square-free decomposition") {
    // (u-1)^3 (u+2)^2 (u-5)
    UPoly p = pow(UPoly{q(-1), q(1)}, 3) * pow(UPoly{q(2), q(1)}, 2) * UPoly{q(-5), q(1)};
    auto f = squarefree_decomposition(p);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == UPoly({q(-5), q(1)}));
    CHECK(f[1] == UPoly({q(2), q(1)}));
    CHECK(f[2] == UPoly({q(-1), q(1)}));
    CHECK(squarefree_part(p).degree() == 3);
  }

  TEST_CASE("Sturm counts agree with known roots") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Rational> roots;
      const int n = 1 + static_cast<int>(rng() % 6);
      for (int i = 0; i < n; ++i) roots.push_back(q(static_cast<long>(rng() % 41) - 20, 4));
      UPoly p = UPoly::from_roots(roots) * UPoly{q(1), q(0), q(1)};
      std::sort(roots.begin(), roots.end());
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      const Rational a = q(static_cast<long>(rng() % 41) - 20, 4) - q(1, 8);
      const Rational b = a + q(static_cast<long>(rng() % 20), 3);
      const auto expected = std::count_if(roots.begin(), roots.end(), [&](const Rational& r) { return a <= r && r <= b; });
      CHECK(count_roots(p, a, b) == expected);
      CHECK(count_real_roots(p) == static_cast<int>(roots.size()));
    }
  }

  TEST_CASE("real roots with multiplicities") {
    auto r = real_roots_with_multiplicities(pow(UPoly{q(-1), q(1)}, 2) * UPoly{q(-3), q(1)});
    REQUIRE(r.size() == 2);
    CHECK(r[0].multiplicity == 2);
    CHECK(r[0].value.approx() == doctest::Approx(1.0));
    CHECK(r[1].multiplicity == 1);
    CHECK(r[1].value.approx() == doctest::Approx(3.0));
    CHECK(real_roots_with_multiplicities(UPoly{q(1), q(0), q(1)}).empty());
    CHECK_THROWS_AS(real_roots_with_multiplicities(UPoly{}), Error);
  }

  TEST_CASE("perturbed double root decided by the discriminant") {
    for (int sign : {1, -1}) {
      const Rational x0 = q(sign, 1000);
      // (u-1)((u-2)^2 + x0)(u-3); the quadratic factor has discriminant -4 x0.
      UPoly quad = pow(UPoly{q(-2), q(1)}, 2) + UPoly::constant(x0);
      UPoly p = UPoly{q(-1), q(1)} * quad * UPoly{q(-3), q(1)};
      const Rational disc = -4 * x0;
      const std::size_t near_two = disc > 0 ? 2 : 0;
      auto roots = real_roots_with_multiplicities(p);
      CHECK(roots.size() == 2 + near_two);
      for (const auto& root : roots) CHECK(root.multiplicity == 1);
    }
  }

  TEST_CASE("real algebraic comparison and rational recognition") {
    auto roots = isolate_real_roots(UPoly{q(-2), q(0), q(1)});
    REQUIRE(roots.size() == 2);
    RealAlgebraic sqrt2 = roots[1];
    CHECK(compare(sqrt2, q(14142, 10000)) > 0);
    CHECK(compare(sqrt2, q(14143, 10000)) < 0);
    // The same number defined by a different polynomial compares equal.
    auto other = isolate_real_roots(UPoly{q(-2), q(0), q(1)} * UPoly{q(-5), q(1)});
    REQUIRE(other.size() == 3);
    CHECK(compare(sqrt2, other[1]) == 0);
    CHECK_FALSE(sqrt2.rational_value().has_value());

    auto mixed = isolate_real_roots(UPoly{q(-3), q(7)} * UPoly{q(-2), q(0), q(1)});
    REQUIRE(mixed.size() == 3);
    auto value = mixed[1].rational_value();
    REQUIRE(value.has_value());
    CHECK(*value == q(3, 7));
  }

  TEST_CASE("number field zero tests split the modulus") {
    // alpha = sqrt 2 defined through the reducible (u^2-2)(u^2-3).
    UPoly mod = UPoly{q(-2), q(0), q(1)} * UPoly{q(-3), q(0), q(1)};
    RealAlgebraic alpha(mod, q(1), q(3, 2));
    NumberField k(alpha);
    CHECK(k.sign(UPoly{q(-3), q(2)}) < 0);  // 2 sqrt2 - 3
    CHECK(k.is_zero(UPoly{q(-2), q(0), q(1)}));
    CHECK(k.modulus().degree() == 2);
    CHECK_FALSE(k.is_zero(UPoly{q(-3), q(0), q(1)}));
    auto inv = k.inverse(UPoly{q(0), q(1)});
    CHECK(k.is_zero(k.mul(inv, UPoly{q(0), q(1)}) - UPoly::constant(1)));
  }

  TEST_CASE("root isolation over a number field") {
    RealAlgebraic alpha(UPoly{q(-2), q(0), q(1)}, q(1), q(2));
    NumberField k(alpha);
    // t^2 - alpha has roots +-2^(1/4) ~ 1.1892.
    NumberField::Poly p{UPoly{q(0), q(-1)}, UPoly{}, UPoly::constant(1)};
    CHECK(k.count_roots_open(p, std::nullopt, std::nullopt) == 2);
    CHECK(k.count_roots_open(p, q(0), std::nullopt) == 1);
    auto iv = k.isolate_roots(p, std::nullopt, std::nullopt);
    REQUIRE(iv.size() == 2);
    for (auto& box : iv) {
      while (box.hi - box.lo > q(1, 1000)) k.refine_root(p, box);
    }
    CHECK(to_double(iv[1].lo) == doctest::Approx(1.1892).epsilon(0.002));
    CHECK(to_double(iv[0].hi) == doctest::Approx(-1.1892).epsilon(0.002));
    // gcd with t - alpha^... : (t^2 - alpha) and (t^2 - 2t + ...) share nothing; with itself it is monic.
    auto g = k.gcd(p, k.derivative(p));
    CHECK(k.degree(g) == 0);
  }

  TEST_CASE("rational root exactly on an isolation boundary") {
    RealAlgebraic alpha(UPoly{q(-2), q(0), q(1)}, q(1), q(2));
    NumberField k(alpha);
    // (t - 1)(t - alpha): the rational root 1 must be isolated exactly.
    NumberField::Poly p{UPoly{q(0), q(1)}, UPoly{q(-1), q(-1)}, UPoly::constant(1)};
    auto iv = k.isolate_roots(p, q(0), std::nullopt);
    REQUIRE(iv.size() == 2);
    CHECK(iv[0].lo <= 1);
    CHECK(iv[0].hi >= 1);
    CHECK(k.count_roots_open(p, q(1), std::nullopt) == 1);
  }

  TEST_CASE("resultant matches the product of root differences") {
    // f = (t - s)(t - 2s - 1), g = (t - s^2)(t - 1).
    BPoly s = BPoly::first(), t = BPoly::second();
    BPoly f = (t - s) * (t - Rational(2) * s - BPoly::constant(1));
    BPoly g = (t - s * s) * (t - BPoly::constant(1));
    UPoly S = UPoly::variable();
    UPoly one = UPoly::constant(1);
    UPoly a1 = S, a2 = Rational(2) * S + one;
    UPoly b1 = S * S, b2 = one;
    UPoly expected = (a1 - b1) * (a1 - b2) * (a2 - b1) * (a2 - b2);
    CHECK(resultant_second(f, g) == expected);
  }

  TEST_CASE("bivariate substitution is a ring homomorphism") {
    BPoly x = BPoly::first(), y = BPoly::second();
    BPoly f = BPoly::circle(q(1), q(-2), q(3));
    BPoly g = x * x * y - Rational(3) * y + BPoly::constant(q(1, 2));
    BPoly a = x + Rational(2) * y, b = Rational(-1) * x + y;
    CHECK((f * g).substitute(a, b) == f.substitute(a, b) * g.substitute(a, b));
    CHECK((f + g).substitute(a, b) == f.substitute(a, b) + g.substitute(a, b));
  }

  TEST_CASE("parallel_for rethrows the lowest failing index") {
    set_thread_count(4);
    std::atomic<int> ran{0};
    try {
      parallel_for(100, [&](std::size_t i) {
        ++ran;
        if (i == 17 || i == 63) throw std::runtime_error(std::to_string(i));
      });
      FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "17");
    }
    CHECK(ran.load() == 100);
    set_thread_count(0);
  }
}
