#include <doctest.h>

#include <numbers>

#include "helpers.hpp"
#include "rieszlab/riesz.hpp"

using namespace rieszlab;

TEST_CASE("Riesz product structure") {
  const auto s = make_sequence(3, Rational(3), 3);
  CHECK(riesz_product(s, 0).exact_terms() == TrigPoly::constant(DyadicComplex(1)).exact_terms());
  const TrigPoly R2 = riesz_product(s, 2);
  CHECK(R2.size() == 9);
  CHECK(R2.exact_coeff(12) == DyadicComplex(Dyadic::ratio(1, 2)));
  CHECK(R2.exact_coeff(0) == DyadicComplex(1));
  CHECK(riesz_product(s, 3).size() == 27);
}

TEST_CASE("Riesz coefficients against a DFT oracle") {
  const auto s = make_sequence(1, Rational(3), 4);
  const std::vector<std::int64_t> modes{1, 3, 9, 27};
  const TrigPoly R = riesz_product(s, 4);
  const auto f = [&](long double t) { return oracle::riesz_direct(modes, 4, t); };
  for (std::int64_t n : {0, 1, 2, 8, 13, 26, 40}) {
    const auto c = oracle::fourier_coeff(f, n, 128);
    CHECK(std::abs(R.coeff(n) - std::complex<double>(static_cast<double>(c.real()), static_cast<double>(c.imag()))) <
          1e-15);
  }
}

TEST_CASE("shifted products") {
  const auto s = make_sequence(3, Rational(3), 3);
  const TrigPoly z = riesz_shifted(s, 3, {0.0, 0.0, 0.0});
  const TrigPoly R = riesz_product(s, 3);
  for (const auto& [n, c] : z.float_terms()) CHECK(c == R.coeff(n));
  const TrigPoly one = riesz_shifted(s, 1, {std::numbers::pi / 2});
  CHECK(std::abs(one.coeff(3) - std::complex<double>(0.0, 0.5)) < 1e-16);
  const TrigPoly any = riesz_shifted(s, 3, {0.3, 2.0, 5.1});
  CHECK(std::abs(any.coeff(0) - 1.0) < 1e-15);
  const TrigPoly h = half_riesz_shifted(s, 2, {0.0, 0.0});
  CHECK(std::abs(h.coeff(3).real() - 0.25) < 1e-16);
}

TEST_CASE("partial products") {
  const auto s = make_sequence(3, Rational(3), 3);
  CHECK(partial_product(s, 3, 3).exact_terms() == riesz_factor(27).exact_terms());
  CHECK(partial_product(s, 1, 3).exact_terms() == riesz_product(s, 3).exact_terms());
  const TrigPoly p = partial_product(s, 2, 3);
  CHECK(p.size() == 9);
  for (const auto& [n, c] : p.exact_terms()) CHECK(n % 9 == 0);
}

TEST_CASE("phi_k") {
  const TrigPoly p1 = phi_k(1);
  CHECK(p1.exact_coeff(0) == DyadicComplex(Dyadic::ratio(1, 1)));
  CHECK(p1.exact_coeff(1) == DyadicComplex(-Dyadic::ratio(1, 2)));
  CHECK(p1.exact_coeff(-1) == DyadicComplex(-Dyadic::ratio(1, 2)));
  for (int k : {1, 2, 3, 5}) {
    CHECK(std::abs(phi_value(k, 0.0)) < 1e-300);
    CHECK(phi_value(k, std::numbers::pi) == doctest::Approx(1.0));
    CHECK(testing::equals(phi_k(k).exact_coeff(0).real(),
                          oracle::cpp_rational(oracle::binomial(2 * k, k), oracle::cpp_int(1) << (2 * k))));
  }
}

TEST_CASE("weights") {
  const auto s = make_sequence(8, Rational(8), 2);
  WeightSpec all_one{.k = 1, .l = 2, .p = 2.0, .choices = {WeightChoice::One, WeightChoice::One}};
  for (double t : {0.0, 0.4, 3.0}) CHECK(weight_eval(all_one, s, t) == 1.0);
  const auto one = make_sequence(1, Rational(8), 1);
  WeightSpec half{.k = 1, .l = 1, .p = 1.0, .choices = {WeightChoice::HalfPhi}};
  CHECK(weight_eval(half, one, std::numbers::pi) == doctest::Approx(0.5));
  WeightSpec mixed{.k = 2, .l = 2, .p = 1.5, .choices = {WeightChoice::HalfPhi, WeightChoice::OneMinusHalfPhi}};
  for (double t = 0.05; t < 6.3; t += 0.37) {
    const double g = weight_eval(mixed, s, t);
    CHECK(g >= 0.0);
    CHECK(g <= 1.0);
  }
  WeightSpec bad{.k = 0, .l = 1, .p = 1.0, .choices = {WeightChoice::One}};
  CHECK(testing::error_kind_of([&] { bad.validate(); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("weighted sums") {
  const auto s = make_sequence(3, Rational(3), 2);
  Eigen::MatrixXd v0(2, 1);
  v0 << 1.5, -2.0;
  const auto c = weighted_sum(v0, s, 0);
  CHECK(c.dim() == 2);
  CHECK(c(1.0)(0) == 1.5);
  CHECK(c(1.0)(1) == -2.0);
  Eigen::MatrixXd alt(1, 3);
  alt << 1, -1, 1;
  const auto a = weighted_sum(alt, s, 2);
  // 1 - R_1 + R_2 = 1 + cos(9t)(1 + cos 3t): the +-3 terms cancel
  CHECK(a.coords[0].size() == 7);
  CHECK(a.coords[0].is_real());
  CHECK(weighted_sum(Eigen::MatrixXd::Zero(1, 3), s, 2).coords[0].is_zero());
}
