#pragma once
// Independent reference values. Nothing here calls into the library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

inline cpp_int binomial(unsigned n, unsigned k) {
  cpp_int r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// int (1 + cos t)^m dm = sum over even j of C(m, j) C(j, j/2) / 2^j.
inline cpp_rational x_moment_int(unsigned m) {
  cpp_rational s = 0;
  for (unsigned j = 0; j <= m; j += 2) s += cpp_rational(binomial(m, j) * binomial(j, j / 2), cpp_int(1) << j);
  return s;
}

/// int (1 + cos t)^p dm = 2^p Gamma(p + 1/2) / (sqrt(pi) Gamma(p + 1)).
inline double x_moment_gamma(double p) {
  return std::exp(p * std::log(2.0) + std::lgamma(p + 0.5) - std::lgamma(p + 1.0)) / std::sqrt(std::numbers::pi);
}

/// int |cos t|^p dm = Gamma((p+1)/2) / (sqrt(pi) Gamma(p/2 + 1)).
inline double abs_cos_moment(double p) {
  return std::exp(std::lgamma((p + 1.0) / 2.0) - std::lgamma(p / 2.0 + 1.0)) / std::sqrt(std::numbers::pi);
}

/// int ((1 - cos t)/2)^(k p) dm, the same Beta integral with exponent kp.
inline double phi_moment(int k, double p) {
  const double a = k * p;
  return std::exp(std::lgamma(a + 0.5) - std::lgamma(a + 1.0)) / std::sqrt(std::numbers::pi);
}

/// B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b).
inline double beta(double a, double b) { return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b)); }

/// Mean over an M-point periodic grid in long double. Exact for trigonometric
/// polynomials of degree < M, up to rounding.
inline long double grid_mean(const std::function<long double(long double)>& f, std::uint64_t M) {
  long double s = 0;
  for (std::uint64_t j = 0; j < M; ++j) s += f(2.0L * std::numbers::pi_v<long double> * j / M);
  return s / M;
}

/// Fourier coefficient n of a real trigonometric polynomial of degree < M/2.
inline std::complex<long double> fourier_coeff(const std::function<long double(long double)>& f, std::int64_t n,
                                               std::uint64_t M) {
  std::complex<long double> s = 0;
  for (std::uint64_t j = 0; j < M; ++j) {
    const long double t = 2.0L * std::numbers::pi_v<long double> * j / M;
    s += f(t) * std::polar(1.0L, -static_cast<long double>(n) * t);
  }
  return s / static_cast<long double>(M);
}

/// prod_j (1 + cos(n_j t)), evaluated directly.
inline long double riesz_direct(const std::vector<std::int64_t>& modes, std::size_t N, long double t) {
  long double r = 1;
  for (std::size_t j = 0; j < N; ++j) r *= 1 + std::cos(modes[j] * t);
  return r;
}

/// Midpoint rule for int |f|^p dm; slow but independent of the library grids.
inline double midpoint_lp(const std::function<double(double)>& f, double p, std::uint64_t M) {
  long double s = 0;
  for (std::uint64_t j = 0; j < M; ++j) {
    const double t = 2.0 * std::numbers::pi * (static_cast<double>(j) + 0.5) / static_cast<double>(M);
    s += std::pow(std::abs(f(t)), p);
  }
  return static_cast<double>(s / M);
}

/// E (sum_k a_k prod_{j<=k} (1 + cos U_j))^2 = sum_{k,l} a_k a_l (3/2)^min(k,l).
inline double iid_second_moment(const std::vector<double>& a) {
  double s = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t l = 0; l < a.size(); ++l) s += a[k] * a[l] * std::pow(1.5, static_cast<double>(std::min(k, l)));
  return s;
}

/// Bernstein operator of order n applied to f on [0, 1] at x, by direct binomial sums.
inline double bernstein(const std::function<double(double)>& f, int n, double x) {
  if (x <= 0.0) return f(0.0);
  if (x >= 1.0) return f(1.0);
  long double s = 0;
  for (int k = 0; k <= n; ++k) {
    const long double lb = std::lgamma(n + 1.0L) - std::lgamma(k + 1.0L) - std::lgamma(n - k + 1.0L);
    const long double w = std::exp(lb + k * std::log(static_cast<long double>(x)) +
                                   (n - k) * std::log1p(-static_cast<long double>(x)));
    s += w * f(static_cast<double>(k) / n);
  }
  return static_cast<double>(s);
}

}  // namespace oracle
