#include <doctest.h>

#include <cmath>
#include <limits>

#include "helpers.hpp"
#include "rieszlab/verify.hpp"

using namespace rieszlab;

namespace {

Eigen::MatrixXd row(std::initializer_list<double> v) {
  Eigen::MatrixXd m(1, static_cast<Eigen::Index>(v.size()));
  Eigen::Index k = 0;
  for (double x : v) m(0, k++) = x;
  return m;
}

}  // namespace

TEST_CASE("N = 0 ratio is one") {
  const auto seq = make_sequence(1, Rational(3), 4);
  const TheoremEvaluator ev(seq, 0, 1.5);
  Eigen::MatrixXd v(2, 1);
  v << 0.3, -2.0;
  CHECK(ev(v, ENorm::Linf).ratio == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("p = 2 scalar ratio through Plancherel") {
  const auto seq = make_sequence(3, Rational(3), 2);
  const TheoremEvaluator ev(seq, 2, 2.0);
  const auto r = ev(row({1.0, -1.0, 1.0}), ENorm::L2);
  CHECK(r.method == Method::PlancherelExact);
  REQUIRE(r.exact_numerator);
  const std::vector<std::int64_t> modes{3, 9};
  const long double num = oracle::grid_mean(
      [&](long double t) {
        const long double s = 1 - oracle::riesz_direct(modes, 1, t) + oracle::riesz_direct(modes, 2, t);
        return s * s;
      },
      64);
  const double den = 1.0 + 1.5 + 2.25;
  CHECK(r.exact_numerator->to_double() == doctest::Approx(static_cast<double>(num)).epsilon(1e-15));
  CHECK(r.ratio == doctest::Approx(static_cast<double>(num) / den).epsilon(1e-14));
}

TEST_CASE("kinked quadrature against midpoint sums") {
  const auto seq = make_sequence(1, Rational(3), 3);
  SUBCASE("single factor, p = 1") {
    const TheoremEvaluator ev(seq, 1, 1.0);
    const auto r = ev(row({0.0, 1.0}), ENorm::L2);
    CHECK(r.converged);
    CHECK(r.numerator == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("sign changes, p = 1.5") {
    const TheoremEvaluator ev(seq, 3, 1.5);
    const auto r = ev(row({1.0, -1.0, 0.5, -1.0}), ENorm::L2);
    CHECK(r.converged);
    const std::vector<std::int64_t> modes{1, 3, 9};
    const double mid = oracle::midpoint_lp(
        [&](double t) {
          return static_cast<double>(1 - oracle::riesz_direct(modes, 1, t) + 0.5 * oracle::riesz_direct(modes, 2, t) -
                                     oracle::riesz_direct(modes, 3, t));
        },
        1.5, std::uint64_t{1} << 20);
    CHECK(r.numerator == doctest::Approx(mid).epsilon(1e-9));
  }
  SUBCASE("vector values under linf") {
    const TheoremEvaluator ev(seq, 2, 1.0);
    Eigen::MatrixXd v(2, 3);
    v << 1.0, -1.0, 0.25, 0.0, 0.5, -1.0;
    const auto r = ev(v, ENorm::Linf);
    CHECK(r.converged);
    const std::vector<std::int64_t> modes{1, 3};
    const double mid = oracle::midpoint_lp(
        [&](double t) {
          const double a = static_cast<double>(1 - oracle::riesz_direct(modes, 1, t) + 0.25 * oracle::riesz_direct(modes, 2, t));
          const double b = static_cast<double>(0.5 * oracle::riesz_direct(modes, 1, t) - oracle::riesz_direct(modes, 2, t));
          return std::max(std::abs(a), std::abs(b));
        },
        1.0, std::uint64_t{1} << 20);
    CHECK(r.numerator == doctest::Approx(mid).epsilon(1e-9));
  }
}

TEST_CASE("main theorem checks pass on a sign pattern") {
  const auto seq = make_sequence(1, Rational(3), 4);
  const auto [lo, up] = check_main_theorem(seq, 1.0, row({1.0, -1.0, 1.0, -1.0, 1.0}), ENorm::L2);
  CHECK(lo.pass);
  CHECK(up.pass);
  CHECK(lo.statement_id == "T1.1-lower");
  CHECK(testing::error_kind_of([&] { check_main_theorem(seq, 1.0, row({1.0, 1.0, 1.0, 1.0, 1.0, 1.0}), ENorm::L2); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("quadrature slack") {
  CHECK(quadrature_slack(1e-12, 1.0) == doctest::Approx(1e-10));
  CHECK(quadrature_slack(1e-9, 1.0) == doctest::Approx(1e-8));
  CHECK(quadrature_slack(0.0, 1e6) == doctest::Approx(1e-4));
}

TEST_CASE("lemma equality cases") {
  const auto a = check_lemma("L4.2", {{"p", 1}, {"k", 1}});
  CHECK(a.pass);
  CHECK(a.margin == 0.0);
  REQUIRE(a.exact_lhs);
  CHECK(testing::equals(*a.exact_lhs, oracle::cpp_rational(1, 8)));

  const auto b = check_lemma("L4.5a", {{"form", "cos"}, {"d", 3}, {"p", 2.0}});
  CHECK(b.pass);
  REQUIRE(b.exact_lhs);
  CHECK(*b.exact_lhs == *b.exact_rhs);
  CHECK(b.margin == 0.0);

  const auto c = check_lemma("L4.5", {{"d", 1}, {"modes", {1, 2}}, {"form", "riesz"}});
  CHECK(c.pass);
  CHECK(c.method == Method::PlancherelExact);
}

TEST_CASE("lemma errors") {
  CHECK(testing::error_kind_of([] { check_lemma("L9.9", nlohmann::json::object()); }) == ErrorKind::InvalidArgument);
  CHECK(testing::error_kind_of([] { check_lemma("C6.2", {{"p", 2.0}, {"d", 3}, {"k", 1}, {"l", 2}}); }) ==
        ErrorKind::HypothesisViolation);
}

TEST_CASE("every documented instance grid is non-empty") {
  for (const auto& id : statement_ids()) CHECK_FALSE(default_instances(id).empty());
}

TEST_CASE("counterexample growth, p = 4") {
  const auto rs = check_schneider_counterexample(4, 3);
  REQUIRE(rs.size() == 9);
  const oracle::cpp_rational x4 = oracle::x_moment_int(4);
  CHECK(x4 == oracle::cpp_rational(35, 8));
  int k = 0;
  for (const auto& r : rs) {
    CHECK(r.pass);
    if (r.statement_id == "CE-denominator") {
      ++k;
      REQUIRE(r.exact_rhs);
      oracle::cpp_rational want = 1;
      for (int i = 0; i < 2 * k; ++i) want *= x4;
      CHECK(testing::equals(*r.exact_rhs, want));
    }
  }
  CHECK(k == 3);
}

TEST_CASE("p discrepancy of the two-mode product") {
  const auto rows = check_p_discrepancy(4, {1.0, 2.0, 4.0});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].torus.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rows[0].lifted.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(rows[0].differs);
  CHECK_FALSE(rows[1].differs);
  CHECK(rows[1].torus.value == doctest::Approx(2.25));
  CHECK(rows[2].differs);
  const double direct = static_cast<double>(oracle::grid_mean(
      [](long double t) { return std::pow((1 + std::cos(t)) * (1 + std::cos(4 * t)), 4.0L); }, 64));
  CHECK(rows[2].torus.value == doctest::Approx(direct).epsilon(1e-15));
  CHECK(testing::error_kind_of([] { check_p_discrepancy(3, {2.0}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("Monte-Carlo twin") {
  const auto v = row({1.0, -0.5, 2.0});
  const auto m = montecarlo_iid(2.0, 2, v, ENorm::L2, 100000, 7);
  CHECK(std::abs(m.value - oracle::iid_second_moment({1.0, -0.5, 2.0})) <= 4.0 * m.error_estimate);
  const auto one = montecarlo_iid(1.0, 2, v, ENorm::L2, 1, 7);
  CHECK(std::isinf(one.error_estimate));
  const auto unit = montecarlo_iid(1.0, 3, row({0.0, 0.0, 0.0, 1.0}), ENorm::L1, 100000, 3);
  CHECK(std::abs(unit.value - 1.0) <= 4.0 * unit.error_estimate);
}

TEST_CASE("L1 transfer") {
  const auto seq = make_sequence(1, Rational(3), 3);
  const auto rs = check_l1_transfer(seq, 3, row({1.0, -1.0, 0.5, 0.25}), 3, 11);
  REQUIRE(rs.size() == 6);
  for (const auto& r : rs) CHECK(r.pass);

  const auto zero = check_l1_transfer(seq, 0, row({2.0}), 2, 11);
  for (const auto& r : zero) {
    CHECK(r.pass);
    if (r.statement_id == "TR-contraction") CHECK(r.lhs == doctest::Approx(r.rhs).epsilon(1e-12));
  }
  // v_N alone: the shifted side is int prod (1 + cos(.)/2) = 1 and the plain side is 1
  const auto last = check_l1_transfer(seq, 2, row({0.0, 0.0, 1.0}), 2, 5);
  for (const auto& r : last) {
    if (r.statement_id == "TR-contraction") {
      CHECK(r.lhs == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(r.rhs == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
  CHECK(testing::error_kind_of([&] { check_l1_transfer(make_sequence(1, Rational(2), 3), 2, row({1, 1, 1}), 1, 1); }) ==
        ErrorKind::HypothesisViolation);
}

TEST_CASE("constant search") {
  const auto seq = make_sequence(1, Rational(3), 3);
  const auto zero = estimate_lower_constant(seq, 1.5, 0, ENorm::L2, SearchStrategy::Random, 10, 1);
  CHECK(zero.empirical_lower == doctest::Approx(1.0));
  CHECK(zero.empirical_upper == doctest::Approx(1.0));

  const auto small = estimate_lower_constant(seq, 2.0, 3, ENorm::L2, SearchStrategy::Random, 20, 4);
  const auto large = estimate_lower_constant(seq, 2.0, 3, ENorm::L2, SearchStrategy::Random, 60, 4);
  CHECK(large.empirical_lower <= small.empirical_lower);
  CHECK(large.empirical_upper >= small.empirical_upper);
  CHECK(small.empirical_lower > 0.0);
  CHECK(parse_search_strategy(to_string(SearchStrategy::Refine)) == SearchStrategy::Refine);
}
