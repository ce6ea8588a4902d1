#include "traverse/local_model.hpp"

#include "traverse/error.hpp"
#include "traverse/parallel.hpp"

#include <algorithm>
#include <random>

namespace traverse {

UPoly ModelPolynomial::factor(int i) const {
  const int m = pattern.entries().at(static_cast<std::size_t>(i - 1));
  const UPoly shift{Rational(-i), Rational(1)};
  UPoly f = pow(shift, m);
  for (int l = 0; l <= m - 2; ++l) {
    auto it = parameters.find({i, l});
    if (it != parameters.end() && it->second != 0) f += pow(shift, l) * it->second;
  }
  return f;
}

UPoly ModelPolynomial::expand() const {
  UPoly p = UPoly::constant(1);
  for (int i = 1; i <= pattern.support(); ++i) p *= factor(i);
  return p;
}

ModelPolynomial build_model(const Pattern& w) {
  ModelPolynomial model{w, {}};
  for (int i = 1; i <= w.support(); ++i) {
    for (int l = 0; l <= w.entries()[static_cast<std::size_t>(i - 1)] - 2; ++l) model.parameters[{i, l}] = 0;
  }
  return model;
}

PatternSequence trajectory_patterns(const UPoly& p) {
  std::vector<int> mult;
  for (const auto& r : real_roots_with_multiplicities(p)) mult.push_back(r.multiplicity);
  return segment_patterns(mult);
}

namespace {

constexpr long kGrid = 1000;

struct Sample {
  PatternSequence sequence;
  std::vector<LabelledTrajectory> simple_trajectories;
  bool all_simple = false;
};

std::vector<ModelPolynomial> draw_models(const Pattern& w, int count, const Rational& magnitude,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ModelPolynomial> models;
  models.reserve(static_cast<std::size_t>(count));
  for (int s = 0; s < count; ++s) {
    ModelPolynomial m = build_model(w);
    for (auto& [key, value] : m.parameters) {
      long k = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * kGrid));
      k = k < kGrid ? k - kGrid : k - kGrid + 1;
      value = magnitude * make_rational(k, kGrid);
      value.canonicalize();
    }
    models.push_back(std::move(m));
  }
  return models;
}

Sample evaluate_sample(const ModelPolynomial& model) {
  Sample out;
  out.sequence = trajectory_patterns(model.expand());
  out.all_simple = std::all_of(out.sequence.begin(), out.sequence.end(),
                               [](const Pattern& p) { return p.entries() == std::vector<int>{1, 1}; });
  if (!out.all_simple) return out;
  struct Labelled {
    RealAlgebraic value;
    std::pair<int, int> label;
  };
  std::vector<Labelled> roots;
  for (int i = 1; i <= model.pattern.support(); ++i) {
    int position = 0;
    for (auto& r : real_roots_with_multiplicities(model.factor(i))) roots.push_back({r.value, {i, position++}});
  }
  std::vector<RealAlgebraic*> ptrs;
  for (auto& r : roots) ptrs.push_back(&r.value);
  separate(ptrs);
  std::vector<std::pair<int, int>> ordered;
  for (auto* ptr : ptrs) {
    for (auto& r : roots) {
      if (&r.value == ptr) ordered.push_back(r.label);
    }
  }
  for (std::size_t k = 0; k + 1 < ordered.size(); k += 2) out.simple_trajectories.push_back({ordered[k], ordered[k + 1]});
  return out;
}

std::vector<Sample> run_samples(const Pattern& w, int count, const Rational& magnitude, std::uint64_t seed) {
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "sample count must be positive");
  if (magnitude <= 0) throw Error(ErrorCode::InvalidArgument, "sampling magnitude must be positive");
  const auto models = draw_models(w, count, magnitude, seed);
  std::vector<Sample> samples(models.size());
  parallel_for(models.size(), [&](std::size_t i) { samples[i] = evaluate_sample(models[i]); });
  return samples;
}

}  // namespace

std::set<PatternSequence> sampled_patterns(const Pattern& w, int sample_count, const Rational& magnitude,
                                           std::uint64_t seed) {
  std::set<PatternSequence> out;
  for (auto& s : run_samples(w, sample_count, magnitude, seed)) out.insert(std::move(s.sequence));
  return out;
}

OracleReport run_oracle(const Pattern& w, int sample_count, const Rational& magnitude, std::uint64_t seed) {
  OracleReport report{w, sample_count, magnitude, seed, {}, resolutions(w), false, 0, 0, 0};
  std::set<PatternSequence> simple;
  std::set<LabelledTrajectory> chambers;
  for (auto& s : run_samples(w, sample_count, magnitude, seed)) {
    if (s.all_simple) {
      simple.insert(s.sequence);
      chambers.insert(s.simple_trajectories.begin(), s.simple_trajectories.end());
    }
    report.observed.insert(std::move(s.sequence));
  }
  report.contained = std::includes(report.expected.begin(), report.expected.end(), report.observed.begin(),
                                   report.observed.end());
  report.all_simple_sequences = static_cast<int>(simple.size());
  report.chamber_count = static_cast<int>(chambers.size());
  const int n = w.reduced_norm();
  report.expected_chambers = n < 30 ? (1 << n) + n : 0;
  return report;
}

}  // namespace traverse
