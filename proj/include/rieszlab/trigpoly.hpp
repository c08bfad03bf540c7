#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "rieszlab/dyadic.hpp"

namespace rieszlab {

enum class CoefficientMode { Exact, Float };

/// Caps on sparse products: term pairs visited and terms produced.
struct ArithmeticBudget {
  std::uint64_t max_pairs = std::uint64_t{1} << 31;
  std::uint64_t max_terms = std::uint64_t{1} << 25;
};

/// Sparse trigonometric polynomial sum_n c_n e^{int}.
///
/// Terms are sorted by frequency with no stored zeros. Coefficients are either
/// all exact complex dyadics or all complex doubles; combining the two modes
/// promotes to float and sets promoted(). The real flag means
/// c_{-n} = conj(c_n); in exact mode it is verified on construction.
class TrigPoly {
 public:
  using ExactTerm = std::pair<std::int64_t, DyadicComplex>;
  using FloatTerm = std::pair<std::int64_t, std::complex<double>>;
  using ExactTerms = std::vector<ExactTerm>;
  using FloatTerms = std::vector<FloatTerm>;

  TrigPoly() : terms_(ExactTerms{}), real_(true) {}
  /// Terms may be unsorted and contain duplicates or zeros.
  explicit TrigPoly(ExactTerms terms);
  TrigPoly(FloatTerms terms, bool real);

  static TrigPoly constant(const DyadicComplex& c);
  static TrigPoly constant_float(std::complex<double> c);
  /// c e^{int}; real only when n == 0 and c real.
  static TrigPoly monomial(std::int64_t n, const DyadicComplex& c);
  /// amplitude * cos(n t) = amplitude/2 (e^{int} + e^{-int}), exact.
  static TrigPoly cosine(std::int64_t n, const Dyadic& amplitude = Dyadic(1));
  /// amplitude * sin(n t), exact.
  static TrigPoly sine(std::int64_t n, const Dyadic& amplitude = Dyadic(1));

  CoefficientMode mode() const {
    return std::holds_alternative<ExactTerms>(terms_) ? CoefficientMode::Exact
                                                      : CoefficientMode::Float;
  }
  bool is_exact() const { return mode() == CoefficientMode::Exact; }
  bool is_real() const { return real_; }
  bool promoted() const { return promoted_; }
  bool is_zero() const { return size() == 0; }
  std::size_t size() const;
  std::int64_t degree() const;

  const ExactTerms& exact_terms() const;
  const FloatTerms& float_terms() const;

  std::complex<double> coeff(std::int64_t n) const;
  /// Throws unless exact.
  DyadicComplex exact_coeff(std::int64_t n) const;

  /// Sum of coefficients times e^{int}, each phase reduced from n*t directly.
  std::complex<double> operator()(double t) const;

  TrigPoly to_float() const;
  /// Exact test in exact mode; bitwise in float mode.
  bool conjugate_symmetric() const;

  TrigPoly& mark_promoted() {
    promoted_ = true;
    return *this;
  }

 private:
  std::variant<ExactTerms, FloatTerms> terms_;
  bool real_ = false;
  bool promoted_ = false;
};

TrigPoly operator+(const TrigPoly& f, const TrigPoly& g);
TrigPoly operator-(const TrigPoly& f, const TrigPoly& g);
TrigPoly operator-(const TrigPoly& f);
TrigPoly scale(const TrigPoly& f, const DyadicComplex& c);
TrigPoly scale(const TrigPoly& f, std::complex<double> c);

/// Sparse convolution of the coefficient maps (pointwise product of functions).
TrigPoly multiply(const TrigPoly& f, const TrigPoly& g, const ArithmeticBudget& budget = {});
inline TrigPoly operator*(const TrigPoly& f, const TrigPoly& g) { return multiply(f, g); }
/// f^m by repeated squaring.
TrigPoly power(const TrigPoly& f, unsigned m, const ArithmeticBudget& budget = {});

/// c_n -> i n c_n.
TrigPoly derivative(const TrigPoly& f);
/// Circular convolution on the torus: c_n -> f_n g_n.
TrigPoly convolve_fourier(const TrigPoly& f, const TrigPoly& g);
/// t -> f(n t): frequency k moves to n k.
TrigPoly dilate(const TrigPoly& f, std::int64_t n);
/// e^{ist} f(t).
TrigPoly modulate(const TrigPoly& f, std::int64_t s);

/// de la Vallee Poussin kernel of order d: coefficients 1 on |n| <= d,
/// (2d-|n|)/d for d < |n| < 2d. Degree 2d-1; exact when d is a power of two.
TrigPoly vpoussin_kernel(int d);

/// Zero mode of f*g, i.e. the integral of f g dm: sum_n f_n g_{-n}.
std::complex<double> integral_of_product(const TrigPoly& f, const TrigPoly& g);
DyadicComplex exact_integral_of_product(const TrigPoly& f, const TrigPoly& g);
/// sum |c_n|^2.
double plancherel_sum(const TrigPoly& f);
Dyadic exact_plancherel_sum(const TrigPoly& f);

/// Float polynomial of degree <= `degree` interpolating a real 2pi-periodic
/// function from equispaced samples (exact for trigonometric polynomials of
/// that degree up to rounding). Coefficients below `chop` times the l1 mass
/// are dropped.
template <class Fn>
TrigPoly interpolate_trig(Fn&& fn, std::int64_t degree, double chop = 1e-17);
TrigPoly interpolate_samples(std::span<const double> samples, std::int64_t degree, double chop);

enum class ENorm { L1, L2, Linf };

double norm(const Eigen::Ref<const Eigen::VectorXd>& v, ENorm which);
const char* to_string(ENorm which);
ENorm parse_enorm(const std::string& text);

/// E = R^m valued polynomial, one real TrigPoly per coordinate.
struct VecTrigPoly {
  std::vector<TrigPoly> coords;
  ENorm e_norm = ENorm::L2;

  VecTrigPoly() = default;
  VecTrigPoly(std::vector<TrigPoly> c, ENorm n);

  std::size_t dim() const { return coords.size(); }
  std::int64_t degree() const;
  std::size_t term_count() const;
  Eigen::VectorXd operator()(double t) const;
  double norm_at(double t) const { return norm((*this)(t), e_norm); }
};

// ---------------------------------------------------------------------------

template <class Fn>
TrigPoly interpolate_trig(Fn&& fn, std::int64_t degree, double chop) {
  std::size_t M = 8;
  while (M <= static_cast<std::size_t>(2 * degree + 1)) M *= 2;
  std::vector<double> samples(M);
  const double two_pi = 6.283185307179586476925286766559;
  for (std::size_t j = 0; j < M; ++j) {
    samples[j] = fn(two_pi * static_cast<double>(j) / static_cast<double>(M));
  }
  return interpolate_samples(samples, degree, chop);
}

}  // namespace rieszlab
