#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "logsob/grid.hpp"

using namespace logsob;

TEST_CASE("domain validation") {
  CHECK_THROWS(Domain(3, 1.0, 64));
  CHECK_THROWS(Domain(1, 1.0, 8));
  CHECK_THROWS(Domain(1, -1.0, 64));
  CHECK_THROWS(Domain(1, 0.0, 64));
  const Domain d(2, 2.0, 32);
  CHECK(d.node_count() == 1024);
  CHECK(d.spacing() == doctest::Approx(4.0 / 32));
}

TEST_CASE("constant sample is constant") {
  for (int dim : {1, 2}) {
    const Domain dom(dim, 1.5, 32);
    const auto f = sample(AnalyticFunction::constant(1.0), dom);
    for (double v : f.values) CHECK(v == 1.0);
  }
}

TEST_CASE("indicator pattern on a coarse grid is exact") {
  const Domain dom(1, 1.0, 16);
  const auto f = sample(AnalyticFunction::indicator_ball(0.25), dom);
  // cell centers -1 + (i+1/2)/8; |x| < 1/4 exactly at i = 6..9
  for (int i = 0; i < 16; ++i) {
    const double expected = (i >= 6 && i <= 9) ? 1.0 : 0.0;
    CHECK(f.values[static_cast<std::size_t>(i)] == expected);
  }
}

TEST_CASE("gaussian sample matches a long double evaluation") {
  const Domain dom(1, 8.0, 2048);
  const auto f = sample(AnalyticFunction::gaussian(1.0), dom);
  for (int i = 0; i < 2048; i += 37) {
    const long double x = -8.0L + (i + 0.5L) * (16.0L / 2048.0L);
    const long double expected = expl(-x * x / 2.0L);
    CHECK(std::abs(f.values[static_cast<std::size_t>(i)] -
                   static_cast<double>(expected)) <= 1e-15);
  }
}

TEST_CASE("sample rejects out-of-range parameters") {
  const Domain dom(1, 1.0, 64);
  CHECK_THROWS(sample(AnalyticFunction::indicator_ball(1.0), dom));
  CHECK_THROWS(sample(AnalyticFunction::indicator_ball(-0.1), dom));
  CHECK_THROWS(sample(AnalyticFunction::step_sum(0), dom));
  CHECK_THROWS(sample(AnalyticFunction::step_sum(4), Domain(2, 2.0, 32)));
  CHECK_THROWS(sample(AnalyticFunction::step_sum(4), Domain(1, 0.5, 64)));
  CHECK_THROWS(sample(AnalyticFunction::trig_poly(1, 0), dom));
  CHECK_THROWS(sample(AnalyticFunction::gaussian(0.0), dom));
}

TEST_CASE("step_sum alternates with the right-continuous convention") {
  const Domain dom(1, 2.0, 512);
  const auto f = sample(AnalyticFunction::step_sum(4), dom);
  double sup = 0.0;
  for (double v : f.values) {
    CHECK((v == 0.0 || v == 1.0 || v == -1.0));
    sup = std::max(sup, std::abs(v));
  }
  CHECK(sup == 1.0);
  const auto eval = evaluator(AnalyticFunction::step_sum(4), dom);
  CHECK(eval({0.0, 0.0}) == 1.0);    // right-continuous at 0
  CHECK(eval({0.25, 0.0}) == -1.0);  // and at interior breakpoints
  CHECK(eval({0.1, 0.0}) == 1.0);
  CHECK(eval({0.3, 0.0}) == -1.0);
  CHECK(eval({1.0, 0.0}) == -1.0);
  CHECK(eval({1.5, 0.0}) == 0.0);
  CHECK(eval({-0.1, 0.0}) == 0.0);
}

TEST_CASE("evaluate uses nearest cell inside, zero outside") {
  const Domain dom(1, 1.0, 64);
  const auto f = sample(AnalyticFunction::gaussian(0.5), dom);
  CHECK(f.evaluate({2.0, 0.0}) == 0.0);
  CHECK(f.evaluate({-1.0001, 0.0}) == 0.0);
  for (int i = 0; i < 64; i += 7)
    CHECK(f.evaluate(dom.node(i)) == f.values[static_cast<std::size_t>(i)]);
  const auto c = sample(AnalyticFunction::constant(1.0), dom);
  CHECK(c.evaluate({0.123, 0.0}) == 1.0);
}

TEST_CASE("evaluate-after-sample reproduces indicator and constant exactly") {
  const Domain dom(2, 1.0, 32);
  for (const auto& g : {AnalyticFunction::indicator_ball(0.4),
                        AnalyticFunction::constant(2.5)}) {
    const auto f = sample(g, dom);
    const auto eval = evaluator(g, dom);
    for (std::int64_t i = 0; i < dom.node_count(); ++i)
      CHECK(f.evaluate(dom.node(i)) == eval(dom.node(i)));
  }
}

TEST_CASE("lp_norm basics") {
  const Domain dom(1, 1.0, 512);
  CHECK(lp_norm(sample(AnalyticFunction::constant(0.0), dom), 1.0) == 0.0);
  CHECK_THROWS(lp_norm(sample(AnalyticFunction::constant(1.0), dom), 0.0));
  CHECK_THROWS(lp_norm(sample(AnalyticFunction::constant(1.0), dom), -2.0));

  const auto ind = sample(AnalyticFunction::indicator_ball(0.25), dom);
  CHECK(std::abs(lp_norm(ind, 1.0) - 0.5) <= dom.spacing());

  const Domain gdom(1, 8.0, 2048);
  const auto g = sample(AnalyticFunction::gaussian(1.0), gdom);
  const double expected = std::pow(std::numbers::pi, 0.25);
  CHECK(lp_norm(g, 2.0) == doctest::Approx(expected).epsilon(1e-6));
}

TEST_CASE("weak quasinorm of an indicator matches its distribution") {
  const Domain dom(1, 1.0, 512);
  CHECK(weak_lp_quasinorm(sample(AnalyticFunction::constant(0.0), dom), 2.0) ==
        0.0);
  CHECK_THROWS(
      weak_lp_quasinorm(sample(AnalyticFunction::constant(1.0), dom), 0.0));
  for (double p : {1.0, 2.0}) {
    const auto ind = sample(AnalyticFunction::indicator_ball(0.25), dom);
    const double w = weak_lp_quasinorm(ind, p);
    CHECK(std::abs(std::pow(w, p) - 0.5) <= dom.spacing() + 1e-12);
  }
}

TEST_CASE("weak quasinorm of the canonical weak-Lp profile is grid stable") {
  const double p = 2.0;
  auto truncated_power = [p](const Point& x) {
    return std::min(std::pow(std::abs(x[0]), -1.0 / p), 1e6);
  };
  const double w1 =
      weak_lp_quasinorm(sample(Domain(1, 1.0, 1024), truncated_power), p);
  const double w2 =
      weak_lp_quasinorm(sample(Domain(1, 1.0, 2048), truncated_power), p);
  CHECK(w1 > 0.0);
  CHECK(std::abs(w2 / w1 - 1.0) <= 0.05);
}

TEST_CASE("triangle inequality and Chebyshev comparison") {
  const Domain dom(1, 1.0, 256);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto f = sample(AnalyticFunction::trig_poly(seed, 6), dom);
    const auto g = sample(AnalyticFunction::trig_poly(seed + 100, 6), dom);
    SampledFunction sum = f;
    for (std::size_t i = 0; i < sum.values.size(); ++i)
      sum.values[i] += g.values[i];
    for (double p : {1.0, 2.0, 3.5}) {
      CHECK(lp_norm(sum, p) <=
            lp_norm(f, p) + lp_norm(g, p) + 1e-12);
      CHECK(weak_lp_quasinorm(f, p) <= lp_norm(f, p) * (1.0 + 1e-12));
    }
  }
  const auto ind = sample(AnalyticFunction::indicator_ball(0.125), dom);
  CHECK(weak_lp_quasinorm(ind, 1.5) <= lp_norm(ind, 1.5) * (1.0 + 1e-12));
}

TEST_CASE("trig coefficients are seed deterministic") {
  CHECK(trig_coefficients(42, 8) == trig_coefficients(42, 8));
  CHECK(trig_coefficients(42, 8) != trig_coefficients(43, 8));
}

TEST_CASE("enlarged domain keeps cell centers aligned") {
  const Domain dom(1, 1.0, 64);
  const Domain big = enlarged(dom, 1.0 / 3.0);
  CHECK(big.spacing() == dom.spacing());
  const int m = (big.points_per_axis - dom.points_per_axis) / 2;
  CHECK(big.axis_coord(m) == doctest::Approx(dom.axis_coord(0)).epsilon(1e-14));
}
