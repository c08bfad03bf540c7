#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "rieszlab/approx.hpp"
#include "rieszlab/ledger.hpp"

using namespace rieszlab;

TEST_CASE("Bernstein approximant sandwich") {
  const auto a = bernstein_approx(2.0, 0.5);
  CHECK(a.sandwich.holds);
  CHECK(a.w(0.0) >= 1.0);
  CHECK(a.w(0.0) <= 1.5);
  CHECK(a.w(1.0) >= std::sqrt(0.5));
  CHECK(a.w(1.0) <= 1.5 * std::sqrt(0.5));
  CHECK(bernstein_approx(3.0, 0.2).w.degree() <= 100);
  CHECK(bernstein_order(0.2) == 100);
}

TEST_CASE("Bernstein operator against direct binomial sums") {
  const double p = 1.5, eps = 0.5;
  const auto a = bernstein_approx(p, eps);
  const int n = bernstein_order(eps);
  for (double x : {0.0, 0.1, 0.37, 0.5, 0.93, 1.0}) {
    const double direct = oracle::bernstein([p](double t) { return f_p(p, t); }, n, x) + 0.5 / std::sqrt(n);
    CHECK(std::abs(a.w(x) - direct) < 1e-13);
  }
}

TEST_CASE("halving eps never widens the gap") {
  for (double p : {1.5, 3.0}) {
    double prev = bernstein_approx(p, 0.5).sup_relative_gap;
    for (double eps : {0.25, 0.125}) {
      const double g = bernstein_approx(p, eps).sup_relative_gap;
      CHECK(g <= prev);
      prev = g;
    }
  }
}

TEST_CASE("weight majorants") {
  const auto s = make_sequence(8, Rational(8), 2);
  const WeightSpec ones{.k = 1, .l = 2, .p = 2.0, .choices = {WeightChoice::One, WeightChoice::One}};
  const auto h1 = weight_majorant(ones, s);
  CHECK(h1.degree == 0);
  CHECK(h1.sandwich.holds);

  const auto one = make_sequence(8, Rational(8), 1);
  for (int k : {1, 2}) {
    const WeightSpec half{.k = k, .l = 1, .p = 1.5, .choices = {WeightChoice::HalfPhi}};
    const auto h = weight_majorant(half, one);
    CHECK(h.sandwich.holds);
    CHECK(h.sandwich.worst_lower == doctest::Approx(0.0).epsilon(1e-12));
  }

  const WeightSpec both{.k = 1, .l = 2, .p = 2.0,
                        .choices = {WeightChoice::OneMinusHalfPhi, WeightChoice::OneMinusHalfPhi}};
  const auto h = weight_majorant(both, s);
  CHECK(h.sandwich.holds);
  CHECK(static_cast<double>(h.degree) <= 64.0 * 4.0 / std::pow(std::log(2.0), 2) * 64.0);

  const auto slow = make_sequence(1, Rational(3), 2);
  CHECK(testing::error_kind_of([&] { weight_majorant(both, slow); }) == ErrorKind::RatioViolation);
}

TEST_CASE("Weierstrass polynomial and lambda constants") {
  const auto w = weierstrass_wp(2.0);
  CHECK(w.lambda1 < 1.0);
  CHECK(w.lambda1 >= 1.0 / std::sqrt(1.5) - 1e-12);
  CHECK(w.lambda1 >= w.lower_envelope);
  CHECK(w.w(0.0) >= 0.0);
  CHECK(w.w(0.0) <= w.eps + 1e-12);

  CHECK(lambda2(2.0, 0.82, 0.0) == doctest::Approx(0.82));
  CHECK(lambda2(2.0, 0.82, 0.05) == doctest::Approx(1.05 / std::sqrt(0.95) * 0.82));
  double prev = 0.0;
  for (double eps = 0.0; eps < 0.3; eps += 0.05) {
    const double v = lambda2(3.0, 0.8, eps);
    CHECK(v >= prev);
    prev = v;
  }
  const auto lc = lambda_constants(2.0, w.lambda1);
  CHECK(lc.lambda2 < 1.0);
  CHECK(testing::error_kind_of([] { lambda_constants(2.0, 1.0); }) == ErrorKind::NoAdmissibleEps);
}

TEST_CASE("formula constants") {
  CHECK(upper_C(2.0) == doctest::Approx(32768.0));
  CHECK(upper_d(1.5) == doctest::Approx(180.0));
  CHECK(C1(1.0) == doctest::Approx(64.0 / std::pow(std::log(2.0), 2)));
  CHECK(phi_moment(2, 1.5) == doctest::Approx(oracle::phi_moment(2, 1.5)));
  CHECK(main_theorem_candidates(1.0).lower == doctest::Approx(2e-5));
  ConstantLedger led;
  record_formula_constants(led, 2.0, 2);
  const auto c = led.find("C_p", 2.0);
  REQUIRE(c.has_value());
  CHECK(c->tag == ConstantTag::Formula);
  CHECK_FALSE(c->provenance.empty());
  for (const auto& e : led.entries()) CHECK_FALSE(e.provenance.empty());
}
