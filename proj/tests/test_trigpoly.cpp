#include <doctest.h>

#include <numbers>

#include "helpers.hpp"
#include "rieszlab/riesz.hpp"
#include "rieszlab/trigpoly.hpp"

using namespace rieszlab;

namespace {

const double kPi = std::numbers::pi;

Dyadic half(int k) { return Dyadic::ratio(1, k); }

}  // namespace

TEST_CASE("dyadic arithmetic is exact") {
  const Dyadic a = Dyadic::from_double(0.1);
  CHECK(a.to_double() == 0.1);
  CHECK((a + a - a) == a);
  CHECK((half(3) * Dyadic(8)) == Dyadic(1));
  CHECK(half(2).to_string() == "1/2^2");
  CHECK(Dyadic(6).to_string() == "6/2^0");
  CHECK(Dyadic(3) < Dyadic(4));
}

TEST_CASE("product of two Riesz factors") {
  const TrigPoly f = multiply(riesz_factor(1), riesz_factor(3));
  CHECK(f.size() == 9);
  CHECK(f.exact_coeff(0) == DyadicComplex(1));
  for (std::int64_t n : {1, 3, -1, -3}) CHECK(f.exact_coeff(n) == DyadicComplex(half(1)));
  for (std::int64_t n : {2, 4, -2, -4}) CHECK(f.exact_coeff(n) == DyadicComplex(half(2)));
  CHECK(multiply(f, TrigPoly::constant(DyadicComplex(1))).exact_terms() == f.exact_terms());
}

TEST_CASE("cos squared") {
  const TrigPoly c = TrigPoly::cosine(1);
  const TrigPoly sq = c * c;
  CHECK(sq.exact_coeff(0) == DyadicComplex(half(1)));
  CHECK(sq.exact_coeff(2) == DyadicComplex(half(2)));
  CHECK(sq.size() == 3);
  CHECK(sq.is_real());
  CHECK(sq.conjugate_symmetric());
}

TEST_CASE("evaluation") {
  const auto seq = make_sequence(3, Rational(3), 2);
  CHECK(std::abs(riesz_product(seq, 2)(0.0) - 4.0) < 1e-15);
  CHECK(std::abs(phi_k(1)(kPi) - 1.0) < 1e-15);
  for (int d : {1, 2, 5, 9}) CHECK(std::abs(vpoussin_kernel(d)(0.0) - 3.0 * d) < 1e-12);
  // against direct evaluation of the product
  const auto s = make_sequence(1, Rational(3), 4);
  const TrigPoly R = riesz_product(s, 4);
  const std::vector<std::int64_t> modes{1, 3, 9, 27};
  for (double t : {0.1, 1.3, 2.9, 5.7}) {
    CHECK(std::abs(R(t).real() - static_cast<double>(oracle::riesz_direct(modes, 4, t))) < 1e-13);
    CHECK(std::abs(R(t).imag()) < 1e-13);
  }
}

TEST_CASE("derivative") {
  const TrigPoly d = derivative(TrigPoly::cosine(5));
  const TrigPoly want = TrigPoly::sine(5, Dyadic(-5));
  CHECK(d.exact_terms() == want.exact_terms());
  CHECK(derivative(TrigPoly::constant(DyadicComplex(7))).is_zero());
  CHECK(std::abs(derivative(riesz_factor(3))(0.0)) < 1e-15);
}

TEST_CASE("Fourier-side convolution") {
  const TrigPoly x = riesz_factor(4);
  const TrigPoly c = convolve_fourier(x, x);
  CHECK(c.exact_coeff(0) == DyadicComplex(1));
  CHECK(c.exact_coeff(4) == DyadicComplex(half(2)));
  CHECK(c.size() == 3);
  // the de la Vallee Poussin kernel is 1 on [-d, d]
  const TrigPoly f = riesz_product(make_sequence(1, Rational(3), 2), 2);
  CHECK(convolve_fourier(f, vpoussin_kernel(4)).exact_terms() == f.exact_terms());
}

TEST_CASE("de la Vallee Poussin kernel") {
  for (int d = 1; d <= 6; ++d) {
    const TrigPoly V = vpoussin_kernel(d);
    CHECK(V.coeff(0).real() == 1.0);
    CHECK(V.coeff(d).real() == 1.0);
    CHECK(V.coeff(2 * d) == std::complex<double>(0.0));
    CHECK(V.degree() == 2 * d - 1);
    // 3d at the origin from the coefficient sum (2d+1) + 2 sum_{j=d+1}^{2d-1} (2 - j/d)
    double s = 2.0 * d + 1.0;
    for (int j = d + 1; j <= 2 * d - 1; ++j) s += 2.0 * (2.0 - static_cast<double>(j) / d);
    CHECK(s == doctest::Approx(3.0 * d));
  }
}

TEST_CASE("Plancherel sums") {
  const TrigPoly R = riesz_product(make_sequence(3, Rational(3), 2), 2);
  CHECK(exact_plancherel_sum(R) == Dyadic(9) * half(2));
  const long double direct =
      oracle::grid_mean([](long double t) { return std::pow(oracle::riesz_direct({3, 9}, 2, t), 2.0L); }, 64);
  CHECK(std::abs(plancherel_sum(R) - static_cast<double>(direct)) < 1e-15);
}

TEST_CASE("mixing modes promotes to float") {
  const TrigPoly e = riesz_factor(1);
  const TrigPoly f = TrigPoly::constant_float({0.5, 0.0});
  const TrigPoly g = e + f;
  CHECK_FALSE(g.is_exact());
  CHECK(g.promoted());
  CHECK(g.coeff(0).real() == 1.5);
}

TEST_CASE("interpolation recovers a polynomial") {
  const TrigPoly R = riesz_product(make_sequence(1, Rational(3), 2), 2);
  const TrigPoly I = interpolate_trig([&](double t) { return R(t).real(); }, 4, 1e-14);
  for (std::int64_t n = -4; n <= 4; ++n) CHECK(std::abs(I.coeff(n) - R.coeff(n)) < 1e-14);
}

TEST_CASE("vector norms") {
  Eigen::VectorXd v(3);
  v << 3, -4, 0;
  CHECK(norm(v, ENorm::L1) == 7.0);
  CHECK(norm(v, ENorm::L2) == 5.0);
  CHECK(norm(v, ENorm::Linf) == 4.0);
  CHECK(parse_enorm("linf") == ENorm::Linf);
  CHECK(testing::error_kind_of([] { parse_enorm("l3"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("term budget") {
  const auto seq = make_sequence(1, Rational(3), 12);
  CHECK(testing::error_kind_of([&] { riesz_product(seq, 12, ArithmeticBudget{.max_pairs = 1000}); }) ==
        ErrorKind::Budget);
}
