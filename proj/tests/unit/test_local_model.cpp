#include <doctest.h>

#include "traverse/error.hpp"
#include "traverse/local_model.hpp"
#include "traverse/parallel.hpp"

using namespace traverse;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

UPoly lin(long root) { return UPoly{q(-root), q(1)}; }

}  // namespace

TEST_SUITE("local_model") {
  TEST_CASE("models at zero parameters") {
    CHECK(build_model(Pattern({2})).expand() == pow(lin(1), 2));
    CHECK(build_model(Pattern({1, 2, 1})).expand() == lin(1) * pow(lin(2), 2) * lin(3));
    auto m = build_model(Pattern({1, 2, 2, 1}));
    CHECK(m.expand() == lin(1) * pow(lin(2), 2) * pow(lin(3), 2) * lin(4));
    CHECK(m.parameters.size() == 2);
  }

  TEST_CASE("models are monic of degree |w| and unperturbed roots are the centers") {
    for (const auto& w : enumerate_patterns(3)) {
      auto m = build_model(w);
      UPoly p = m.expand();
      CHECK(p.degree() == w.norm());
      CHECK(p.leading() == 1);
      auto roots = real_roots_with_multiplicities(p);
      REQUIRE(roots.size() == w.entries().size());
      for (std::size_t i = 0; i < roots.size(); ++i) {
        CHECK(roots[i].multiplicity == w.entries()[i]);
        CHECK(roots[i].value.rational_value() == q(static_cast<long>(i) + 1));
      }
      CHECK(trajectory_patterns(p) == PatternSequence{w});
    }
  }

  TEST_CASE("perturbed double root follows the discriminant") {
    auto m = build_model(Pattern({1, 2, 1}));
    m.parameters[{2, 0}] = q(1, 1000);
    CHECK(real_roots_with_multiplicities(m.expand()).size() == 2);
    CHECK(trajectory_patterns(m.expand()) == PatternSequence{Pattern({1, 1})});
    m.parameters[{2, 0}] = q(-1, 1000);
    CHECK(real_roots_with_multiplicities(m.expand()).size() == 4);
    CHECK(trajectory_patterns(m.expand()) == PatternSequence{Pattern({1, 1}), Pattern({1, 1})});
  }

  TEST_CASE("real root parity matches the degree") {
    for (const auto& w : enumerate_patterns(2)) {
      auto models = run_oracle(w, 20, q(1, 1000), 5);
      for (const auto& seq : models.observed) {
        int total = 0;
        for (const auto& p : seq) total += p.norm();
        CHECK(total % 2 == w.norm() % 2);
      }
    }
  }

  TEST_CASE("quadratic trichotomy") {
    auto seen = sampled_patterns(Pattern({2}), 50, q(1, 1000));
    for (const auto& s : seen) {
      CHECK((s.empty() || s == PatternSequence{Pattern({1, 1})} || s == PatternSequence{Pattern({2})}));
    }
  }

  TEST_CASE("oracle containment and chamber counts") {
    auto r121 = run_oracle(Pattern({1, 2, 1}), 100, q(1, 1000));
    CHECK(r121.contained);
    CHECK(r121.chamber_count == 3);
    auto r1221 = run_oracle(Pattern({1, 2, 2, 1}), 200, q(1, 1000));
    CHECK(r1221.contained);
    CHECK(r1221.all_simple_sequences == 3);
    CHECK(r1221.chamber_count == 6);
    CHECK(r1221.expected_chambers == 6);
  }

  TEST_CASE("sampling is deterministic across thread counts") {
    set_thread_count(1);
    auto a = run_oracle(Pattern({1, 2, 2, 1}), 60, q(1, 1000), 42);
    set_thread_count(4);
    auto b = run_oracle(Pattern({1, 2, 2, 1}), 60, q(1, 1000), 42);
    set_thread_count(0);
    CHECK(a.observed == b.observed);
    CHECK(a.chamber_count == b.chamber_count);
  }

  TEST_CASE("invalid oracle arguments") {
    CHECK_THROWS_AS(run_oracle(Pattern({2}), 0, q(1, 1000)), Error);
    CHECK_THROWS_AS(run_oracle(Pattern({2}), 5, q(0)), Error);
  }
}
