#include <doctest.h>

#include <numbers>

#include "helpers.hpp"
#include "rieszlab/moments.hpp"
#include "rieszlab/riesz.hpp"

using namespace rieszlab;

TEST_CASE("x moment against the Gamma closed form") {
  for (double p : {0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 5.0, 7.25}) {
    const auto m = x_moment(p);
    CHECK(std::abs(m.value - oracle::x_moment_gamma(p)) <= 1e-10 * oracle::x_moment_gamma(p));
  }
  for (unsigned m = 0; m <= 12; ++m) CHECK(testing::equals(x_moment_exact(m), oracle::x_moment_int(m)));
  CHECK(x_moment_exact(4) == Dyadic(35) * Dyadic::ratio(1, 3));
}

TEST_CASE("exact even moments") {
  const auto s = make_sequence(3, Rational(3), 3);
  CHECK(lp_even_exact(TrigPoly::constant(DyadicComplex(1)), 5).value == 1.0);
  CHECK(*lp_even_exact(riesz_product(s, 2), 1).exact == Dyadic(9) * Dyadic::ratio(1, 2));
  CHECK(*lp_even_exact(riesz_factor(1), 2).exact == Dyadic(35) * Dyadic::ratio(1, 3));
  // ratio 5 keeps sums with digits in [-2, 2] distinct, so the fourth moment factorizes
  const auto five = make_sequence(5, Rational(5), 3);
  CHECK(testing::equals(*lp_even_exact(riesz_product(five, 3), 2).exact,
                        oracle::x_moment_int(4) * oracle::x_moment_int(4) * oracle::x_moment_int(4)));
}

TEST_CASE("quadrature agrees with exact values") {
  const auto s = make_sequence(3, Rational(3), 3);
  CHECK(lp_quadrature(TrigPoly::constant(DyadicComplex(3)), 2.0).value == 9.0);
  const auto q = lp_quadrature(riesz_factor(1), 2.0, {.tol = 1e-10});
  CHECK(std::abs(q.value - 1.5) < 1e-10);
  for (unsigned m : {1U, 2U, 3U}) {
    const TrigPoly R = riesz_product(s, 3);
    const double e = lp_even_exact(R, m).value;
    CHECK(std::abs(lp_quadrature(R, 2.0 * m).value - e) <= 1e-8 * e);
  }
  // a kinked integrand against a slow independent rule
  const auto c = lp_quadrature(TrigPoly::cosine(1), 1.0, {.tol = 1e-9});
  CHECK(std::abs(c.value - 2.0 / std::numbers::pi) < 1e-7);
  CHECK(std::abs(c.value - oracle::midpoint_lp([](double t) { return std::cos(t); }, 1.0, 1 << 16)) < 1e-8);
}

TEST_CASE("quadrature reports non-convergence") {
  const auto r = lp_quadrature(TrigPoly::cosine(1), 1.0, {.tol = 1e-15, .max_points = 256});
  CHECK_FALSE(r.converged);
}

TEST_CASE("weighted moments") {
  const auto s = make_sequence(3, Rational(3), 2);
  const WeightSpec ones{.k = 1, .l = 2, .p = 2.0, .choices = {WeightChoice::One, WeightChoice::One}};
  Eigen::MatrixXd c(1, 3);
  c << 1, -0.5, 0.25;
  const auto f = weighted_sum(c, s, 2);
  const double plain = lp_quadrature(f, 2.0).value;
  CHECK(std::abs(weighted_moment(f, ones, s, 2.0).value - plain) < 1e-12);

  // R_1 against half phi_1(n_1 t)^2: integer p, so the weight is a polynomial
  const WeightSpec half{.k = 1, .l = 1, .p = 2.0, .choices = {WeightChoice::HalfPhi}};
  Eigen::MatrixXd r1(1, 2);
  r1 << 0, 1;
  const auto g = weighted_sum(r1, s, 1);
  const Dyadic exact = exact_integral_of_product(riesz_product(s, 1) * riesz_product(s, 1), weight_poly(half, s)).real();
  CHECK(std::abs(weighted_moment(g, half, s, 2.0).value - exact.to_double()) < 1e-12);

  // constants factor out
  Eigen::MatrixXd v(2, 1);
  v << 3, 4;
  const auto cst = weighted_sum(v, s, 0);
  const double mass = lp_quadrature([&](const GridPoint& gp) { return weight_at(half, s, gp); }, 1.0, {}).value;
  CHECK(std::abs(weighted_moment(cst, half, s, 2.0).value - 25.0 * mass) < 1e-11);
}

TEST_CASE("lifted product norms") {
  CHECK(tilde_norm_product(1.0, 7).value == 1.0);
  CHECK(*tilde_norm_product(2.0, 2).exact == Dyadic(9) * Dyadic::ratio(1, 2));
  CHECK(*tilde_norm_product(4.0, 1).exact == Dyadic(35) * Dyadic::ratio(1, 3));
  CHECK(std::abs(tilde_norm_product(1.5, 3).value - std::pow(oracle::x_moment_gamma(1.5), 3)) < 1e-12);
}

TEST_CASE("two-torus norms") {
  const auto g = [](double x, double y) { return std::pow((1 + std::cos(x)) * (1 + std::cos(y)), 2); };
  CHECK(std::abs(torus2_norm(g, 2.0).value - 1225.0 / 64.0) < 1e-9);
  CHECK(std::abs(torus2_norm([](double, double) { return 1.0; }, 3.0).value - 1.0) < 1e-15);
  const auto one_d = [](double x, double) { return 1 + std::cos(3 * x); };
  CHECK(std::abs(torus2_norm(one_d, 1.5).value - lp_quadrature(riesz_factor(3), 1.5).value) < 1e-9);
}
