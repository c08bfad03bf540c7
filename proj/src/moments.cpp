#include "rieszlab/moments.hpp"

#include <cmath>
#include <numbers>

#include "rieszlab/errors.hpp"

namespace rieszlab {

const char* to_string(Method m) {
  switch (m) {
    case Method::PlancherelExact: return "PLANCHEREL_EXACT";
    case Method::Quadrature: return "QUADRATURE";
    case Method::ProductForm: return "PRODUCT_FORM";
    case Method::TensorGrid: return "TENSOR_GRID";
    case Method::MonteCarlo: return "MONTE_CARLO";
  }
  return "?";
}

PolyEvaluator::PolyEvaluator(const TrigPoly& f) : real_(f.is_real()), degree_(f.degree()) {
  const TrigPoly ff = f.to_float();
  for (const auto& [n, c] : ff.float_terms()) {
    if (real_) {
      if (n < 0) continue;
      freq_.push_back(n);
      coeff_.push_back(n == 0 ? c : 2.0 * c);
    } else {
      freq_.push_back(n);
      coeff_.push_back(c);
    }
  }
}

double PolyEvaluator::real_at(const GridPoint& gp) const {
  double s = 0.0;
  for (std::size_t i = 0; i < freq_.size(); ++i) {
    s += coeff_[i].real() * gp.cos_n(freq_[i]) - coeff_[i].imag() * gp.sin_n(freq_[i]);
  }
  return s;
}

std::complex<double> PolyEvaluator::at(const GridPoint& gp) const {
  if (real_) return real_at(gp);
  std::complex<double> s;
  for (std::size_t i = 0; i < freq_.size(); ++i) {
    s += coeff_[i] * std::complex<double>(gp.cos_n(freq_[i]), gp.sin_n(freq_[i]));
  }
  return s;
}

std::uint64_t initial_grid(std::int64_t degree, std::uint64_t floor) {
  const auto want = std::max<std::uint64_t>(floor, 4 * static_cast<std::uint64_t>(degree));
  std::uint64_t M = 1;
  while (M < want) M *= 2;
  return M;
}

MomentReport x_moment(double p, const QuadratureOptions& opts) {
  if (!(p >= 0.0)) throw Error(ErrorKind::InvalidArgument, "x_moment needs p >= 0");
  if (p == 0.0) return {1.0, Method::Quadrature, 0.0, 1, Dyadic(1), true};
  // t = 2 pi x - pi puts the zero of 1 + cos t at both ends: 1 + cos t = 2 sin^2(pi x)
  const auto q = integrate_endpoint_smoothed(
      [p](double x) {
        const double s = std::sin(std::numbers::pi * x);
        return std::pow(2.0 * s * s, p);
      },
      opts);
  MomentReport r{q.values[0], Method::Quadrature, q.errors[0], q.points, std::nullopt, q.converged};
  return r;
}

Dyadic x_moment_exact(unsigned m) {
  // zero mode of (1 + cos t)^m = C(2m, m) / 2^m
  BigInt c = 1;
  for (unsigned i = 1; i <= m; ++i) c = c * (m + i) / i;
  return Dyadic::ratio(c, m);
}

MomentReport lp_even_exact(const TrigPoly& f, unsigned m, const ArithmeticBudget& budget) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "m must be >= 1");
  if (!f.is_exact()) throw Error(ErrorKind::InvalidArgument, "exact moments need exact coefficients");
  const TrigPoly fm = power(f, m, budget);
  const Dyadic v = exact_plancherel_sum(fm);
  return {v.to_double(), Method::PlancherelExact, 0.0, fm.size(), v, true};
}

MomentReport lp_even_exact(const VecTrigPoly& f, unsigned m, const ArithmeticBudget& budget) {
  if (f.dim() == 1) return lp_even_exact(f.coords[0], m, budget);
  if (f.e_norm != ENorm::L2) {
    throw Error(ErrorKind::InvalidArgument, "exact vector moments need the l2 norm");
  }
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "m must be >= 1");
  TrigPoly S;
  for (const auto& c : f.coords) {
    if (!c.is_exact()) throw Error(ErrorKind::InvalidArgument, "exact moments need exact coefficients");
    S = S + multiply(c, c, budget);
  }
  const unsigned a = (m + 1) / 2;
  const unsigned b = m / 2;
  const TrigPoly Sa = power(S, a, budget);
  const TrigPoly Sb = b == a ? Sa : power(S, b, budget);
  const DyadicComplex v = exact_integral_of_product(Sa, Sb);
  return {v.real().to_double(), Method::PlancherelExact, 0.0, Sa.size() + Sb.size(), v.real(), true};
}

MomentReport lp_quadrature(const std::function<double(const GridPoint&)>& f, double p,
                           const QuadratureOptions& opts) {
  if (!(p >= 1.0)) throw Error(ErrorKind::InvalidArgument, "lp_quadrature needs p >= 1");
  const GridIntegrand g = [&](const GridPoint& gp, double* out) { out[0] = std::pow(std::abs(f(gp)), p); };
  const auto q = integrate_periodic(g, 1, opts);
  return {q.values[0], Method::Quadrature, q.errors[0], q.points, std::nullopt, q.converged};
}

MomentReport lp_quadrature(const TrigPoly& f, double p, QuadratureOptions opts) {
  opts.min_points = std::max(opts.min_points, initial_grid(f.degree()));
  const PolyEvaluator ev(f);
  return lp_quadrature([&](const GridPoint& gp) { return std::abs(ev.at(gp)); }, p, opts);
}

namespace {

std::function<double(const GridPoint&)> vector_norm_fn(const VecTrigPoly& f,
                                                       std::vector<PolyEvaluator>& evs) {
  evs.clear();
  for (const auto& c : f.coords) evs.emplace_back(c);
  return [&evs, e = f.e_norm](const GridPoint& gp) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(evs.size()));
    for (std::size_t i = 0; i < evs.size(); ++i) v[static_cast<Eigen::Index>(i)] = evs[i].real_at(gp);
    return norm(v, e);
  };
}

}  // namespace

MomentReport lp_quadrature(const VecTrigPoly& f, double p, QuadratureOptions opts) {
  opts.min_points = std::max(opts.min_points, initial_grid(f.degree()));
  std::vector<PolyEvaluator> evs;
  const auto fn = vector_norm_fn(f, evs);
  return lp_quadrature(fn, p, opts);
}

double weight_at(const WeightSpec& spec, const LacunarySeq& seq, const GridPoint& gp) {
  double g = 1.0;
  for (int j = 0; j < spec.l; ++j) {
    const auto c = spec.choices[static_cast<std::size_t>(j)];
    if (c == WeightChoice::One) continue;
    const double phi = std::pow(0.5 * (1.0 - gp.cos_n(seq[static_cast<std::size_t>(j)])), spec.k);
    const double half = 0.5 * std::pow(phi, spec.p);
    g *= c == WeightChoice::HalfPhi ? half : 1.0 - half;
  }
  return g;
}

MomentReport weighted_moment(const VecTrigPoly& f, const WeightSpec& spec, const LacunarySeq& seq,
                             double p, QuadratureOptions opts) {
  spec.validate();
  if (static_cast<std::size_t>(spec.l) > seq.length()) {
    throw Error(ErrorKind::InvalidArgument, "weight l exceeds sequence length");
  }
  std::int64_t deg = f.degree();
  for (int j = 0; j < spec.l; ++j) deg = std::max(deg, seq[static_cast<std::size_t>(j)] * spec.k);
  opts.min_points = std::max(opts.min_points, initial_grid(deg));
  std::vector<PolyEvaluator> evs;
  const auto fn = vector_norm_fn(f, evs);
  const GridIntegrand g = [&](const GridPoint& gp, double* out) {
    out[0] = std::pow(fn(gp), p) * weight_at(spec, seq, gp);
  };
  const auto q = integrate_periodic(g, 1, opts);
  return {q.values[0], Method::Quadrature, q.errors[0], q.points, std::nullopt, q.converged};
}

MomentReport tilde_norm_product(double p, std::size_t N) {
  if (!(p >= 0.0)) throw Error(ErrorKind::InvalidArgument, "p must be >= 0");
  const auto n = static_cast<double>(N);
  if (p == std::floor(p) && p <= 256) {
    const Dyadic base = x_moment_exact(static_cast<unsigned>(p));
    Dyadic v(1);
    for (std::size_t i = 0; i < N; ++i) v = v * base;
    return {v.to_double(), Method::ProductForm, 0.0, N, v, true};
  }
  const auto x = x_moment(p);
  const double value = std::pow(x.value, n);
  const double err = N == 0 ? 0.0 : n * std::pow(x.value, n - 1.0) * x.error_estimate;
  return {value, Method::ProductForm, err, N, std::nullopt, x.converged};
}

MomentReport torus2_norm(const std::function<double(double, double)>& F, double p,
                         const QuadratureOptions& opts) {
  const auto q = integrate_torus2([&](double x, double y) { return std::pow(std::abs(F(x, y)), p); }, opts);
  return {q.values[0], Method::TensorGrid, q.errors[0], q.points, std::nullopt, q.converged};
}

}  // namespace rieszlab
