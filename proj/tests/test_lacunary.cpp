#include <doctest.h>

#include "helpers.hpp"
#include "rieszlab/lacunary.hpp"

using namespace rieszlab;

TEST_CASE("geometric sequences") {
  const auto s = make_sequence(3, Rational(3), 3);
  CHECK(std::vector<std::int64_t>(s.modes().begin(), s.modes().end()) == std::vector<std::int64_t>{3, 9, 27});
  CHECK(s.ratio_floor() == Rational(3));
  const auto t = make_sequence(4, Rational(4), 4);
  CHECK(t.mode(4) == 256);
  CHECK(t.prefix_sum(4) == 4 + 16 + 64 + 256);
}

TEST_CASE("fractional ratio rounds each step up") {
  const auto s = make_sequence(2, Rational(5, 2), 3, std::vector<std::int64_t>{2, 5, 13});
  CHECK(s.min_ratio() == Rational(5, 2));
  CHECK(Rational::parse("7/2") == Rational(7, 2));
}

TEST_CASE("ratio and overflow guards") {
  CHECK(testing::error_kind_of([] { make_sequence(1, Rational(3), 3, std::vector<std::int64_t>{1, 2, 4}); }) ==
        ErrorKind::RatioViolation);
  CHECK(testing::error_kind_of([] { make_sequence(1, Rational(1000), 9); }) == ErrorKind::Overflow);
}

TEST_CASE("dissociation by enumeration") {
  const LacunarySeq pow2({1, 2, 4}, Rational(2));
  const LacunarySeq pow3({1, 3, 9}, Rational(3));
  CHECK_FALSE(dissociation_check(pow2, 1, 3));
  CHECK(dissociation_check(pow3, 1, 3));
  CHECK_FALSE(dissociation_check(pow3, 2, 3));
  CHECK(testing::error_kind_of([&] { dissociation_check(pow3, 1, 3, 10); }) == ErrorKind::TooLarge);
}

TEST_CASE("frequency lifting") {
  const auto s = make_sequence(3, Rational(3), 3);
  CHECK(lift_frequency(s, 12, 1) == std::optional<EpsVector>(EpsVector{1, 1, 0}));
  CHECK(lift_frequency(s, 0, 1) == std::optional<EpsVector>(EpsVector{0, 0, 0}));
  CHECK_FALSE(lift_frequency(s, 5, 1).has_value());
  const LacunarySeq pow2({1, 2, 4}, Rational(2));
  CHECK(testing::error_kind_of([&] { lift_frequency(pow2, 1, 1); }) == ErrorKind::NotDissociate);
  const std::vector<int> eps{1, -1, 1};
  CHECK(frequency_of(s, eps) == 3 - 9 + 27);
}
