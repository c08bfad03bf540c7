#include "rieszlab/riesz.hpp"

#include <cmath>

#include "rieszlab/errors.hpp"

namespace rieszlab {

const char* to_string(WeightChoice c) {
  switch (c) {
    case WeightChoice::One: return "ONE";
    case WeightChoice::HalfPhi: return "HALF_PHI";
    case WeightChoice::OneMinusHalfPhi: return "ONE_MINUS_HALF_PHI";
  }
  return "?";
}

WeightChoice parse_weight_choice(const std::string& text) {
  if (text == "ONE") return WeightChoice::One;
  if (text == "HALF_PHI") return WeightChoice::HalfPhi;
  if (text == "ONE_MINUS_HALF_PHI") return WeightChoice::OneMinusHalfPhi;
  throw Error(ErrorKind::InvalidArgument, "unknown weight choice '" + text + "'");
}

void WeightSpec::validate() const {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "weight k must be >= 1");
  if (l < 0) throw Error(ErrorKind::InvalidArgument, "weight l must be >= 0");
  if (!(p >= 1.0)) throw Error(ErrorKind::InvalidArgument, "weight p must be >= 1");
  if (choices.size() != static_cast<std::size_t>(l)) {
    throw Error(ErrorKind::InvalidArgument, "weight needs exactly l choices");
  }
}

bool WeightSpec::integer_power() const { return p == std::floor(p) && p <= 64; }

TrigPoly riesz_factor(std::int64_t n) {
  return TrigPoly::constant(DyadicComplex(1)) + TrigPoly::cosine(n);
}

TrigPoly riesz_product(const LacunarySeq& seq, std::size_t N, const ArithmeticBudget& budget) {
  if (N > seq.length()) throw Error(ErrorKind::InvalidArgument, "N exceeds sequence length");
  TrigPoly r = TrigPoly::constant(DyadicComplex(1));
  for (std::size_t j = 0; j < N; ++j) r = multiply(r, riesz_factor(seq[j]), budget);
  return r;
}

namespace {

TrigPoly shifted_factor(std::int64_t n, double psi, double amplitude) {
  const std::complex<double> c = 0.5 * amplitude * std::complex<double>(std::cos(psi), std::sin(psi));
  return TrigPoly(TrigPoly::FloatTerms{{0, 1.0}, {n, c}, {-n, std::conj(c)}}, true);
}

TrigPoly shifted_product(const LacunarySeq& seq, std::size_t N, const std::vector<double>& psi,
                         double amplitude, const ArithmeticBudget& budget) {
  if (N > seq.length()) throw Error(ErrorKind::InvalidArgument, "N exceeds sequence length");
  if (psi.size() < N) throw Error(ErrorKind::InvalidArgument, "need one phase per factor");
  TrigPoly r = TrigPoly::constant_float(1.0);
  for (std::size_t j = 0; j < N; ++j) r = multiply(r, shifted_factor(seq[j], psi[j], amplitude), budget);
  return r;
}

}  // namespace

TrigPoly riesz_shifted(const LacunarySeq& seq, std::size_t N, const std::vector<double>& psi,
                       const ArithmeticBudget& budget) {
  return shifted_product(seq, N, psi, 1.0, budget);
}

TrigPoly half_riesz_shifted(const LacunarySeq& seq, std::size_t N, const std::vector<double>& psi) {
  return shifted_product(seq, N, psi, 0.5, {});
}

TrigPoly partial_product(const LacunarySeq& seq, std::size_t l, std::size_t N,
                         const ArithmeticBudget& budget) {
  if (l < 1 || l > N || N > seq.length()) {
    throw Error(ErrorKind::InvalidArgument, "partial product needs 1 <= l <= N <= length");
  }
  TrigPoly r = TrigPoly::constant(DyadicComplex(1));
  for (std::size_t j = l; j <= N; ++j) r = multiply(r, riesz_factor(seq.mode(j)), budget);
  return r;
}

TrigPoly phi_k(int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "phi_k needs k >= 1");
  // (1 - cos t)/2 = 1/2 - e^{it}/4 - e^{-it}/4
  const TrigPoly base(TrigPoly::ExactTerms{{0, Dyadic::ratio(1, 1)},
                                           {1, Dyadic::ratio(-1, 2)},
                                           {-1, Dyadic::ratio(-1, 2)}});
  return power(base, static_cast<unsigned>(k));
}

double phi_value(int k, double t) { return std::pow(0.5 * (1.0 - std::cos(t)), k); }

double weight_factor(WeightChoice c, int k, double p, double x) {
  switch (c) {
    case WeightChoice::One: return 1.0;
    case WeightChoice::HalfPhi: return 0.5 * std::pow(phi_value(k, x), p);
    case WeightChoice::OneMinusHalfPhi: return 1.0 - 0.5 * std::pow(phi_value(k, x), p);
  }
  return 1.0;
}

double weight_eval(const WeightSpec& spec, const LacunarySeq& seq, double t) {
  if (static_cast<std::size_t>(spec.l) > seq.length()) {
    throw Error(ErrorKind::InvalidArgument, "weight l exceeds sequence length");
  }
  double g = 1.0;
  for (int j = 0; j < spec.l; ++j) {
    const auto c = spec.choices[static_cast<std::size_t>(j)];
    if (c == WeightChoice::One) continue;
    const long double x = std::fmod(static_cast<long double>(seq[static_cast<std::size_t>(j)]) * t,
                                    2.0L * 3.141592653589793238462643383279503L);
    g *= weight_factor(c, spec.k, spec.p, static_cast<double>(x));
  }
  return g;
}

TrigPoly weight_poly(const WeightSpec& spec, const LacunarySeq& seq) {
  spec.validate();
  if (!spec.integer_power()) {
    throw Error(ErrorKind::InvalidArgument, "weight is a polynomial only for integer p");
  }
  if (static_cast<std::size_t>(spec.l) > seq.length()) {
    throw Error(ErrorKind::InvalidArgument, "weight l exceeds sequence length");
  }
  const TrigPoly phip = power(phi_k(spec.k), static_cast<unsigned>(spec.p));
  const TrigPoly half = scale(phip, DyadicComplex(Dyadic::ratio(1, 1)));
  const TrigPoly one = TrigPoly::constant(DyadicComplex(1));
  TrigPoly g = one;
  for (int j = 0; j < spec.l; ++j) {
    const auto c = spec.choices[static_cast<std::size_t>(j)];
    if (c == WeightChoice::One) continue;
    const TrigPoly h = c == WeightChoice::HalfPhi ? half : one - half;
    g = multiply(g, dilate(h, seq[static_cast<std::size_t>(j)]));
  }
  return g;
}

VecTrigPoly weighted_sum(const Eigen::MatrixXd& coeffs, const LacunarySeq& seq, std::size_t N,
                         ENorm e_norm, const ArithmeticBudget& budget) {
  if (coeffs.cols() != static_cast<Eigen::Index>(N + 1)) {
    throw Error(ErrorKind::InvalidArgument, "need N+1 coefficient columns");
  }
  if (coeffs.rows() < 1) throw Error(ErrorKind::InvalidArgument, "coefficient dimension must be >= 1");
  if (N > seq.length()) throw Error(ErrorKind::InvalidArgument, "N exceeds sequence length");
  const auto m = static_cast<std::size_t>(coeffs.rows());
  std::vector<TrigPoly> coords(m);
  TrigPoly r = TrigPoly::constant(DyadicComplex(1));
  for (std::size_t k = 0; k <= N; ++k) {
    if (k > 0) r = multiply(r, riesz_factor(seq[k - 1]), budget);
    for (std::size_t i = 0; i < m; ++i) {
      const double v = coeffs(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
      if (v == 0.0) continue;
      coords[i] = coords[i] + scale(r, DyadicComplex(Dyadic::from_double(v)));
    }
  }
  return {std::move(coords), e_norm};
}

}  // namespace rieszlab
