#include "rieszlab/dyadic.hpp"

#include <cmath>
#include <limits>

#include "rieszlab/errors.hpp"

namespace rieszlab {

namespace mp = boost::multiprecision;

Dyadic::Dyadic(std::int64_t integer) : num_(integer), exp_(0) { normalize(); }

Dyadic::Dyadic(BigInt numerator, std::int64_t exponent)
    : num_(std::move(numerator)), exp_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (num_.is_zero()) {
    exp_ = 0;
    return;
  }
  const auto shift = static_cast<std::int64_t>(mp::lsb(mp::abs(num_)));
  if (shift > 0) {
    num_ >>= static_cast<unsigned>(shift);
    exp_ += shift;
  }
}

Dyadic Dyadic::from_double(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::InvalidArgument, "non-finite value has no dyadic form");
  }
  if (value == 0.0) return {};
  int exp2 = 0;
  const double mantissa = std::frexp(value, &exp2);  // value = mantissa * 2^exp2
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  return Dyadic(BigInt(scaled), static_cast<std::int64_t>(exp2) - 53);
}

double Dyadic::to_double() const {
  if (num_.is_zero()) return 0.0;
  BigInt n = num_;
  std::int64_t e = exp_;
  const auto bits = static_cast<std::int64_t>(mp::msb(mp::abs(n))) + 1;
  if (bits > 64) {
    // keep 64 leading bits, rounding is within one ulp of the final double
    const auto drop = bits - 64;
    n >>= static_cast<unsigned>(drop);
    e += drop;
  }
  const double mantissa = n.convert_to<double>();
  if (e > std::numeric_limits<int>::max()) return std::copysign(HUGE_VAL, mantissa);
  if (e < std::numeric_limits<int>::min()) return 0.0;
  return std::ldexp(mantissa, static_cast<int>(e));
}

std::string Dyadic::to_string() const {
  if (exp_ >= 0) {
    BigInt v = num_ << static_cast<unsigned>(exp_);
    return v.str() + "/2^0";
  }
  return num_.str() + "/2^" + std::to_string(-exp_);
}

Dyadic Dyadic::ldexp(std::int64_t shift) const {
  if (num_.is_zero()) return {};
  Dyadic r = *this;
  r.exp_ += shift;
  return r;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.num_.is_zero()) return b;
  if (b.num_.is_zero()) return a;
  if (a.exp_ == b.exp_) return Dyadic(a.num_ + b.num_, a.exp_);
  if (a.exp_ < b.exp_) {
    return Dyadic(a.num_ + (b.num_ << static_cast<unsigned>(b.exp_ - a.exp_)), a.exp_);
  }
  return Dyadic((a.num_ << static_cast<unsigned>(a.exp_ - b.exp_)) + b.num_, b.exp_);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  if (a.num_.is_zero() || b.num_.is_zero()) return {};
  // product of odd numerators is odd: already normalized
  Dyadic r;
  r.num_ = a.num_ * b.num_;
  r.exp_ = a.exp_ + b.exp_;
  return r;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const Dyadic d = a - b;
  const int s = d.sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

DyadicComplex DyadicComplex::times_i(std::int64_t n) const {
  const Dyadic factor(n);
  return {-(im_ * factor), re_ * factor};
}

DyadicComplex operator*(const DyadicComplex& a, const DyadicComplex& b) {
  if (a.im_.is_zero() && b.im_.is_zero()) return {a.re_ * b.re_};
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

DyadicComplex::SharedForm DyadicComplex::shared_form() const {
  std::int64_t e = 0;
  if (!re_.is_zero()) e = std::min(e, re_.exponent());
  if (!im_.is_zero()) e = std::min(e, im_.exponent());
  auto lift = [e](const Dyadic& d) -> BigInt {
    if (d.is_zero()) return 0;
    return d.numerator() << static_cast<unsigned>(d.exponent() - e);
  };
  return {lift(re_), lift(im_), -e};
}

DyadicComplex DyadicComplex::from_shared(const BigInt& re_num, const BigInt& im_num,
                                         std::int64_t log2_den) {
  return {Dyadic(re_num, -log2_den), Dyadic(im_num, -log2_den)};
}

}  // namespace rieszlab
