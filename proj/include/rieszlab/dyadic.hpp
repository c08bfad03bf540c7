#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rieszlab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact dyadic rational num * 2^exponent.
///
/// Kept normalized: the numerator is odd, or zero with exponent 0, so equal
/// values compare equal field by field. Every finite double converts exactly.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(std::int64_t integer);  // NOLINT(google-explicit-constructor)
  Dyadic(BigInt numerator, std::int64_t exponent);

  static Dyadic from_double(double value);
  /// numerator / 2^log2_denominator
  static Dyadic ratio(BigInt numerator, std::int64_t log2_denominator) {
    return Dyadic(std::move(numerator), -log2_denominator);
  }

  const BigInt& numerator() const { return num_; }
  std::int64_t exponent() const { return exp_; }
  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }

  double to_double() const;
  /// "num/2^k" with k >= 0.
  std::string to_string() const;

  /// Multiply by 2^shift.
  Dyadic ldexp(std::int64_t shift) const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic operator-() const { return Dyadic(-num_, exp_); }
  Dyadic& operator+=(const Dyadic& b) { return *this = *this + b; }
  Dyadic& operator-=(const Dyadic& b) { return *this = *this - b; }
  Dyadic& operator*=(const Dyadic& b) { return *this = *this * b; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void normalize();

  BigInt num_ = 0;
  std::int64_t exp_ = 0;
};

/// Exact complex dyadic value re + i*im.
class DyadicComplex {
 public:
  DyadicComplex() = default;
  DyadicComplex(Dyadic re, Dyadic im = Dyadic()) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT
  DyadicComplex(std::int64_t re) : re_(re) {}  // NOLINT

  static DyadicComplex from_complex(std::complex<double> z) {
    return {Dyadic::from_double(z.real()), Dyadic::from_double(z.imag())};
  }

  const Dyadic& real() const { return re_; }
  const Dyadic& imag() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  DyadicComplex conj() const { return {re_, -im_}; }
  /// |z|^2
  Dyadic norm() const { return re_ * re_ + im_ * im_; }
  DyadicComplex ldexp(std::int64_t shift) const { return {re_.ldexp(shift), im_.ldexp(shift)}; }
  /// Multiply by i*n.
  DyadicComplex times_i(std::int64_t n) const;

  friend DyadicComplex operator+(const DyadicComplex& a, const DyadicComplex& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend DyadicComplex operator-(const DyadicComplex& a, const DyadicComplex& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend DyadicComplex operator*(const DyadicComplex& a, const DyadicComplex& b);
  DyadicComplex operator-() const { return {-re_, -im_}; }
  DyadicComplex& operator+=(const DyadicComplex& b) { return *this = *this + b; }

  friend bool operator==(const DyadicComplex& a, const DyadicComplex& b) = default;

  /// Shared-denominator form: (re_num + i im_num) / 2^log2_den with log2_den >= 0.
  struct SharedForm {
    BigInt re_num;
    BigInt im_num;
    std::int64_t log2_den;
  };
  SharedForm shared_form() const;
  static DyadicComplex from_shared(const BigInt& re_num, const BigInt& im_num,
                                   std::int64_t log2_den);

 private:
  Dyadic re_;
  Dyadic im_;
};

}  // namespace rieszlab
