#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "oracles.hpp"
#include "rieszlab/dyadic.hpp"
#include "rieszlab/errors.hpp"

namespace testing {

/// Exact comparison of a dyadic against a rational oracle.
inline bool equals(const rieszlab::Dyadic& d, const oracle::cpp_rational& q) {
  using oracle::cpp_int;
  oracle::cpp_rational v(d.numerator());
  if (d.exponent() >= 0) {
    v *= cpp_int(1) << static_cast<unsigned>(d.exponent());
  } else {
    v /= cpp_int(1) << static_cast<unsigned>(-d.exponent());
  }
  return v == q;
}

template <class Fn>
rieszlab::ErrorKind error_kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const rieszlab::Error& e) {
    return e.kind();
  }
  FAIL("expected a rieszlab::Error");
  return rieszlab::ErrorKind::InvalidArgument;
}

}  // namespace testing
