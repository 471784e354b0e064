/*
 * Copyright 2026 lrsym developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lrsym/errors.hpp"
#include "lrsym/symmetry.hpp"

using namespace lrsym;

namespace {

constexpr double kPi = std::numbers::pi;

SpeedSeries speeds(std::vector<double> values,
                   JointId source = JointId::RAnkle,
                   SpeedMode mode = SpeedMode::Horizontal) {
  SpeedSeries s;
  s.values = std::move(values);
  s.source = source;
  s.mode = mode;
  return s;
}

std::vector<double> random_series(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> out(n);
  for (double& v : out) v = dist(rng);
  return out;
}

// Periodic speed waveform with a couple of harmonics; period p frames.
std::vector<double> periodic_speed(std::size_t n, int p, double phase = 0.0) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double ph = 2.0 * kPi * (static_cast<double>(i) / p) + phase;
    out[i] = std::sin(ph) + 0.4 * std::sin(2.0 * ph + 0.7);
  }
  return out;
}

JointTrajectory traj(JointId joint, std::vector<double> x,
                     std::vector<double> y) {
  JointTrajectory t;
  t.joint = joint;
  t.x = std::move(x);
  t.y = std::move(y);
  t.confidence.assign(t.x.size(), 0.9);
  t.gap_mask.assign(t.x.size(), false);
  return t;
}

CycleEstimate cycle_of(int t) { return CycleEstimate{t, 0.8, 15, 2 * t}; }

}  // namespace

TEST_CASE("coupling case tables") {
  CHECK(case_input_mode(CouplingCase::HV) == SpeedMode::Horizontal);
  CHECK(case_output_mode(CouplingCase::HV) == SpeedMode::Vertical);
  CHECK(case_input_mode(CouplingCase::VH) == SpeedMode::Vertical);
  CHECK(case_output_mode(CouplingCase::VH) == SpeedMode::Horizontal);
  CHECK(case_input_mode(CouplingCase::HH) == SpeedMode::Horizontal);
  CHECK(case_output_mode(CouplingCase::HH) == SpeedMode::Horizontal);
  CHECK(case_input_mode(CouplingCase::VV) == SpeedMode::Vertical);
  CHECK(case_output_mode(CouplingCase::VV) == SpeedMode::Vertical);
  for (CouplingCase c : kAllCases)
    CHECK(coupling_case_from_name(coupling_case_name(c)) == c);
}

TEST_CASE("quarter shift realigns antiphase sides") {
  // left is the right side half a cycle later; T = 32, M = 96
  const int t = 32;
  const auto right = periodic_speed(96, t);
  const auto left = periodic_speed(96, t, -kPi);  // half-cycle delay
  const auto result = quarter_shift_correlation(speeds(left, JointId::LAnkle),
                                                speeds(right), cycle_of(t));
  CHECK(result.rho >= 1.0 - 1e-6);
  CHECK(result.cycle_frames == t);
  CHECK(result.left_shift == doctest::Approx(8.0));
  CHECK(result.right_shift == doctest::Approx(-8.0));
  CHECK(result.analyzed_length == 96);
  CHECK(result.analyzed_length % result.cycle_frames == 0);
  CHECK(result.left_shift - result.right_shift ==
        doctest::Approx(t / 2.0).epsilon(1e-15));
}

TEST_CASE("quarter shift of identical sides equals a half-cycle self-shift") {
  const int t = 32;
  std::vector<double> sine(96);
  for (int n = 0; n < 96; ++n) sine[n] = std::sin(2.0 * kPi * n / t);
  const auto result = quarter_shift_correlation(speeds(sine, JointId::LAnkle),
                                                speeds(sine), cycle_of(t));
  const auto half = fractional_circular_shift(sine, t / 2.0);
  CHECK(result.rho == doctest::Approx(pearson(sine, half)).epsilon(1e-9));
  // a sinusoid negates under a half-period shift
  CHECK(result.rho == doctest::Approx(-1.0).epsilon(1e-6));
}

TEST_CASE("quarter shift trims to whole cycles") {
  const int t = 32;
  const auto right = periodic_speed(100, t);  // 3 cycles + 4 samples
  const auto left = periodic_speed(100, t, -kPi);
  const auto result = quarter_shift_correlation(speeds(left, JointId::LAnkle),
                                                speeds(right), cycle_of(t));
  CHECK(result.analyzed_length == 96);
  CHECK(result.rho >= 0.999);
}

TEST_CASE("quarter shift rejects short records and mismatches") {
  const auto series = periodic_speed(60, 32);
  CHECK_THROWS_AS(quarter_shift_correlation(speeds(series), speeds(series),
                                            cycle_of(32)),
                  Error);
  try {
    quarter_shift_correlation(speeds(series), speeds(series), cycle_of(32));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InsufficientRecord);
  }
  CHECK_THROWS_AS(
      quarter_shift_correlation(speeds(periodic_speed(96, 32)),
                                speeds(periodic_speed(95, 32)), cycle_of(32)),
      Error);
}

TEST_CASE("case_series picks the documented joints and modes") {
  const std::size_t m = 12;
  TrajectoryMap map;
  // distinct ramps so the series are identifiable: x slope = 1, 2, 3, 4;
  // y slope = 10, 20, 30, 40
  const std::array<std::pair<JointId, double>, 4> joints = {{
      {JointId::RAnkle, 1.0},
      {JointId::RWrist, 2.0},
      {JointId::LAnkle, 3.0},
      {JointId::LWrist, 4.0},
  }};
  for (auto [id, slope] : joints) {
    std::vector<double> x(m), y(m);
    for (std::size_t i = 0; i < m; ++i) {
      x[i] = slope * static_cast<double>(i);
      y[i] = 10.0 * slope * static_cast<double>(i);
    }
    map.emplace(id, traj(id, x, y));
  }

  const CaseSeries hh = case_series(map, CouplingCase::HH);
  CHECK(hh.a.values[0] == doctest::Approx(1.0));
  CHECK(hh.b.values[0] == doctest::Approx(2.0));
  CHECK(hh.x.values[0] == doctest::Approx(3.0));
  CHECK(hh.y.values[0] == doctest::Approx(4.0));
  for (const SpeedSeries* s : {&hh.a, &hh.b, &hh.x, &hh.y})
    CHECK(s->size() == m - 1);

  const CaseSeries hv = case_series(map, CouplingCase::HV);
  CHECK(hv.a.values[0] == doctest::Approx(1.0));   // ankle horizontal
  CHECK(hv.b.values[0] == doctest::Approx(20.0));  // wrist vertical
  CHECK(hv.x.values[0] == doctest::Approx(3.0));
  CHECK(hv.y.values[0] == doctest::Approx(40.0));
  CHECK(hv.a.source == JointId::RAnkle);
  CHECK(hv.b.source == JointId::RWrist);
  CHECK(hv.x.source == JointId::LAnkle);
  CHECK(hv.y.source == JointId::LWrist);
}

TEST_CASE("case_series on a static subject yields zero series") {
  TrajectoryMap map;
  for (JointId id : {JointId::RAnkle, JointId::RWrist, JointId::LAnkle,
                     JointId::LWrist})
    map.emplace(id, traj(id, std::vector<double>(10, 50.0),
                         std::vector<double>(10, 80.0)));
  const CaseSeries vv = case_series(map, CouplingCase::VV);
  for (const SpeedSeries* s : {&vv.a, &vv.b, &vv.x, &vv.y})
    for (double v : s->values) CHECK(v == 0.0);
}

TEST_CASE("case_series reports the missing joint by name") {
  TrajectoryMap map;
  for (JointId id : {JointId::RAnkle, JointId::RWrist, JointId::LAnkle})
    map.emplace(id, traj(id, std::vector<double>(10, 1.0),
                         std::vector<double>(10, 2.0)));
  try {
    case_series(map, CouplingCase::HH);
    FAIL("expected missing-data error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingData);
    CHECK(std::string(e.what()).find("LWrist") != std::string::npos);
  }
}

TEST_CASE("dissimilarity hand-computed example") {
  // u = [1,0]*[1,0] = [1,0,0]; v = [0,1]*[1,0] = [0,1,0]; dis = 2/1
  const auto value = dissimilarity(speeds({1, 0}), speeds({1, 0}),
                                   speeds({0, 1}), speeds({1, 0}));
  CHECK(value.dis == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(value.pair.u == std::vector<double>{1, 0, 0});
  CHECK(value.pair.v == std::vector<double>{0, 1, 0});
}

TEST_CASE("dissimilarity is zero when both systems coincide") {
  const auto a = random_series(30, 1);
  const auto b = random_series(30, 2);
  const auto value = dissimilarity(speeds(a), speeds(b), speeds(a), speeds(b));
  CHECK(value.dis == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("dissimilarity symmetry under pair swap") {
  const auto a = random_series(25, 11);
  const auto b = random_series(25, 12);
  const auto x = random_series(25, 13);
  const auto y = random_series(25, 14);
  const double one = dissimilarity(speeds(a), speeds(b), speeds(x), speeds(y)).dis;
  const double two = dissimilarity(speeds(x), speeds(y), speeds(a), speeds(b)).dis;
  CHECK(one == two);  // u and v swap roles exactly
}

TEST_CASE("dissimilarity scale invariances") {
  const auto a = random_series(25, 21);
  const auto b = random_series(25, 22);
  const auto x = random_series(25, 23);
  const auto y = random_series(25, 24);
  const double base = dissimilarity(speeds(a), speeds(b), speeds(x), speeds(y)).dis;

  auto scaled = [](const std::vector<double>& v, double c) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
  };
  for (double c : {0.1, 2.0, 100.0}) {
    // side: scale the whole left system
    const double side = dissimilarity(speeds(a), speeds(b),
                                      speeds(scaled(x, c)),
                                      speeds(scaled(y, c)))
                            .dis;
    CHECK(side == doctest::Approx(base).epsilon(1e-9));
    // channel: scale both wrist series
    const double chan = dissimilarity(speeds(a), speeds(scaled(b, c)),
                                      speeds(x), speeds(scaled(y, c)))
                            .dis;
    CHECK(chan == doctest::Approx(base).epsilon(1e-9));
  }
}

TEST_CASE("dissimilarity common-delay invariance") {
  // x and y are a and b delayed by d with explicit zero padding, so
  // X(z) = z^-d A(z) and Y(z) = z^-d B(z) exactly.
  const std::size_t n = 40;
  const int d = 9;
  const auto a0 = random_series(n, 31);
  const auto b0 = random_series(n, 32);
  std::vector<double> a(n + d, 0.0), b(n + d, 0.0), x(n + d, 0.0), y(n + d, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = a0[i];
    b[i] = b0[i];
    x[i + d] = a0[i];
    y[i + d] = b0[i];
  }
  const auto value = dissimilarity(speeds(a), speeds(b), speeds(x), speeds(y));
  CHECK(value.dis < 1e-9);
}

TEST_CASE("dissimilarity non-negativity") {
  for (unsigned seed = 0; seed < 10; ++seed) {
    const auto value = dissimilarity(
        speeds(random_series(20, 100 + seed)), speeds(random_series(20, 200 + seed)),
        speeds(random_series(20, 300 + seed)), speeds(random_series(20, 400 + seed)));
    CHECK(value.dis >= 0.0);
  }
}

TEST_CASE("dissimilarity flags motionless limbs") {
  const auto moving = random_series(20, 51);
  const std::vector<double> still(20, 0.0);
  try {
    dissimilarity(speeds(moving, JointId::RAnkle), speeds(moving, JointId::RWrist),
                  speeds(moving, JointId::LAnkle),
                  speeds(still, JointId::LWrist));
    FAIL("expected degenerate-system error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateSignal);
  }
  CHECK_THROWS_AS(dissimilarity(speeds({1.0}), speeds({1.0}), speeds({1.0}),
                                speeds({1.0})),
                  Error);
}

TEST_CASE("evaluate_all_cases classifies and isolates degenerate cases") {
  const std::size_t m = 64;
  const int p = 16;
  TrajectoryMap map;
  // moving ankles and right wrist; left wrist moves horizontally but is
  // vertically frozen, so exactly the cases with vertical wrist output
  // degenerate
  auto wave = [&](double scale, double phase) {
    std::vector<double> v(m);
    for (std::size_t i = 0; i < m; ++i)
      v[i] = scale * std::sin(2.0 * kPi * static_cast<double>(i) / p + phase);
    return v;
  };
  map.emplace(JointId::RAnkle,
              traj(JointId::RAnkle, wave(10, 0), wave(4, 1)));
  map.emplace(JointId::RWrist,
              traj(JointId::RWrist, wave(6, 2), wave(3, 0.5)));
  map.emplace(JointId::LAnkle,
              traj(JointId::LAnkle, wave(10, kPi), wave(4, 1 + kPi)));
  map.emplace(JointId::LWrist,
              traj(JointId::LWrist, wave(6, 2 + kPi),
                   std::vector<double>(m, 120.0)));

  const DissimilarityReport report = evaluate_all_cases(map, 1.0);
  CHECK(report.threshold == 1.0);
  CHECK(report.outcome(CouplingCase::HV).classification ==
        CaseClassification::Degenerate);
  CHECK(report.outcome(CouplingCase::VV).classification ==
        CaseClassification::Degenerate);
  CHECK(!report.outcome(CouplingCase::HV).error.empty());
  CHECK(report.outcome(CouplingCase::VH).value.has_value());
  CHECK(report.outcome(CouplingCase::HH).value.has_value());
  for (CouplingCase c : {CouplingCase::VH, CouplingCase::HH}) {
    const CaseOutcome& o = report.outcome(c);
    CHECK(o.classification == (o.value->dis < 1.0
                                   ? CaseClassification::Symmetric
                                   : CaseClassification::Asymmetric));
  }
}

TEST_CASE("evaluate_all_cases threshold semantics") {
  const std::size_t m = 48;
  TrajectoryMap map;
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (JointId id : {JointId::RAnkle, JointId::RWrist, JointId::LAnkle,
                     JointId::LWrist}) {
    std::vector<double> x(m), y(m);
    for (std::size_t i = 0; i < m; ++i) {
      x[i] = 100.0 + 10.0 * dist(rng);
      y[i] = 200.0 + 10.0 * dist(rng);
    }
    map.emplace(id, traj(id, x, y));
  }
  const DissimilarityReport strict = evaluate_all_cases(map, 1e-9);
  const DissimilarityReport loose = evaluate_all_cases(map, 1e9);
  for (CouplingCase c : kAllCases) {
    CHECK(strict.outcome(c).classification == CaseClassification::Asymmetric);
    CHECK(loose.outcome(c).classification == CaseClassification::Symmetric);
    CHECK(strict.outcome(c).value->dis ==
          doctest::Approx(loose.outcome(c).value->dis).epsilon(1e-15));
  }
}

TEST_CASE("combined_cycle merges per-side estimates") {
  auto sine = [](std::size_t m, int p) {
    std::vector<double> v(m);
    for (std::size_t i = 0; i < m; ++i)
      v[i] = std::sin(2.0 * kPi * static_cast<double>(i) / p);
    return v;
  };
  {
    const auto est = combined_cycle(speeds(sine(99, 33), JointId::LAnkle),
                                    speeds(sine(99, 33), JointId::RAnkle));
    CHECK(est.period_frames == 33);
  }
  {
    const auto est = combined_cycle(speeds(sine(150, 30), JointId::LAnkle),
                                    speeds(sine(160, 32), JointId::RAnkle));
    CHECK(est.period_frames == 31);  // rounded mean of 30 and 32
  }
  {
    try {
      combined_cycle(speeds(sine(180, 30), JointId::LAnkle),
                     speeds(sine(180, 60), JointId::RAnkle));
      FAIL("expected ambiguous-cycle error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::AmbiguousCycle);
    }
  }
  {
    // per-side no-periodicity propagates
    std::vector<double> impulse(80, 5.0);
    impulse[40] = 6.0;
    CHECK_THROWS_AS(combined_cycle(speeds(impulse, JointId::LAnkle),
                                   speeds(sine(99, 33), JointId::RAnkle)),
                    Error);
  }
}
