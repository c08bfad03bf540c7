#include "rieszlab/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rieszlab/errors.hpp"

namespace rieszlab {

namespace {

constexpr double kSlack = 1e-12;

}  // namespace

BernsteinPoly::BernsteinPoly(std::vector<double> values, double a, double b, double shift)
    : values_(std::move(values)), a_(a), b_(b), shift_(shift) {
  if (values_.empty()) throw Error(ErrorKind::InvalidArgument, "Bernstein polynomial needs a value");
  if (!(b_ > a_)) throw Error(ErrorKind::InvalidArgument, "empty Bernstein interval");
  const auto n = static_cast<double>(values_.size() - 1);
  log_binom_.resize(values_.size());
  for (std::size_t k = 0; k < values_.size(); ++k) {
    const auto kk = static_cast<double>(k);
    log_binom_[k] = std::lgamma(n + 1.0) - std::lgamma(kk + 1.0) - std::lgamma(n - kk + 1.0);
  }
}

double BernsteinPoly::operator()(double x) const {
  const int n = degree();
  const double s = std::clamp((x - a_) / (b_ - a_), 0.0, 1.0);
  if (n == 0 || s == 0.0) return values_.front() + shift_;
  if (s == 1.0) return values_.back() + shift_;
  const double ls = std::log(s);
  const double l1s = std::log1p(-s);
  // binomial tail beyond 10 sd + 40 is below e^-50 (Bernstein's inequality)
  const double mean = n * s;
  const double reach = 10.0 * std::sqrt(n * s * (1.0 - s)) + 40.0;
  const int lo = std::max(0, static_cast<int>(std::floor(mean - reach)));
  const int hi = std::min(n, static_cast<int>(std::ceil(mean + reach)));
  double sum = 0.0;
  for (int k = lo; k <= hi; ++k) {
    const double e = log_binom_[static_cast<std::size_t>(k)] + k * ls + (n - k) * l1s;
    sum += values_[static_cast<std::size_t>(k)] * std::exp(e);
  }
  return sum + shift_;
}

Eigen::VectorXd BernsteinPoly::monomial_coefficients() const {
  const int n = degree();
  // coefficients in s first: C(n,k) s^k (1-s)^(n-k) = sum_j C(n,k) C(n-k, j-k) (-1)^(j-k) s^j
  Eigen::VectorXd in_s = Eigen::VectorXd::Zero(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double ck = std::exp(log_binom_[static_cast<std::size_t>(k)]);
    double c = 1.0;  // C(n-k, j-k)
    for (int j = k; j <= n; ++j) {
      in_s[j] += values_[static_cast<std::size_t>(k)] * ck * c * (((j - k) % 2) ? -1.0 : 1.0);
      c = c * (n - j) / (j - k + 1);
    }
  }
  in_s[0] += shift_;
  // s = (x - a)/L: expand each s^j
  const double L = b_ - a_;
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n + 1);
  for (int j = 0; j <= n; ++j) {
    double c = 1.0;  // C(j, i)
    for (int i = 0; i <= j; ++i) {
      out[i] += in_s[j] * c * std::pow(-a_, j - i) / std::pow(L, j);
      c = c * (j - i) / (i + 1);
    }
  }
  return out;
}

double f_p(double p, double t) { return std::pow(1.0 - 0.5 * std::pow(t, p), 1.0 / p); }

int bernstein_order(double eps) {
  return static_cast<int>(std::ceil(4.0 / (eps * eps) - 1e-9));
}

BernsteinApprox bernstein_approx(double p, double eps, std::uint64_t grid) {
  if (!(p > 1.0)) throw Error(ErrorKind::InvalidArgument, "bernstein_approx needs p > 1");
  if (!(eps > 0.0 && eps < 1.0)) throw Error(ErrorKind::InvalidArgument, "eps must lie in (0, 1)");
  const int n = bernstein_order(eps);
  std::vector<double> values(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) values[static_cast<std::size_t>(k)] = f_p(p, static_cast<double>(k) / n);
  BernsteinApprox out{BernsteinPoly(std::move(values), 0.0, 1.0, 0.5 / std::sqrt(static_cast<double>(n))), p, eps,
                      {}, 0.0};
  SandwichReport& s = out.sandwich;
  s.worst_lower = INFINITY;
  s.worst_upper = INFINITY;
  for (std::uint64_t i = 0; i <= grid; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(grid);
    const double f = f_p(p, t);
    const double w = out.w(t);
    s.worst_lower = std::min(s.worst_lower, w - f);
    s.worst_upper = std::min(s.worst_upper, (1.0 + eps) * f - w);
    out.sup_relative_gap = std::max(out.sup_relative_gap, w / f - 1.0);
  }
  s.points = grid + 1;
  s.holds = s.worst_lower >= -kSlack && s.worst_upper >= -kSlack;
  if (!s.holds) {
    throw Error(ErrorKind::SandwichFailure, "f_p <= w <= (1+eps) f_p fails on the grid");
  }
  return out;
}

// --------------------------------------------------------------------------

namespace {

struct MajorantFactors {
  std::vector<BernsteinPoly> w;  // one per index, empty for ONE/HALF_PHI
  int half_count = 0;
};

MajorantFactors build_factors(const WeightSpec& spec) {
  MajorantFactors mf;
  mf.w.resize(static_cast<std::size_t>(spec.l));
  for (int j = 1; j <= spec.l; ++j) {
    const auto c = spec.choices[static_cast<std::size_t>(j - 1)];
    if (c == WeightChoice::HalfPhi) ++mf.half_count;
    if (c != WeightChoice::OneMinusHalfPhi) continue;
    const double eps = std::numbers::ln2 / spec.p * std::ldexp(1.0, j - spec.l - 1);
    mf.w[static_cast<std::size_t>(j - 1)] = bernstein_approx(spec.p, eps).w;
  }
  return mf;
}

double product_form(const WeightSpec& spec, const LacunarySeq& seq, const MajorantFactors& mf,
                    double t) {
  double h = std::pow(2.0, -mf.half_count / spec.p);
  for (int j = 0; j < spec.l; ++j) {
    const auto c = spec.choices[static_cast<std::size_t>(j)];
    if (c == WeightChoice::One) continue;
    const long double x = std::fmod(static_cast<long double>(seq[static_cast<std::size_t>(j)]) * t,
                                    2.0L * std::numbers::pi_v<long double>);
    const double phi = phi_value(spec.k, static_cast<double>(x));
    h *= c == WeightChoice::HalfPhi ? phi : mf.w[static_cast<std::size_t>(j)](phi);
  }
  return h;
}

void check_majorant_hypotheses(const WeightSpec& spec, const LacunarySeq& seq) {
  spec.validate();
  if (static_cast<std::size_t>(spec.l) > seq.length()) {
    throw Error(ErrorKind::InvalidArgument, "weight l exceeds sequence length");
  }
  for (int j = 1; j < spec.l; ++j) {
    if (seq[static_cast<std::size_t>(j)] < 8 * seq[static_cast<std::size_t>(j - 1)]) {
      throw Error(ErrorKind::RatioViolation, "majorant needs n_{j+1}/n_j >= 8");
    }
  }
}

}  // namespace

double majorant_product_form(const WeightSpec& spec, const LacunarySeq& seq, double t) {
  check_majorant_hypotheses(spec, seq);
  return product_form(spec, seq, build_factors(spec), t);
}

MajorantReport weight_majorant(const WeightSpec& spec, const LacunarySeq& seq) {
  check_majorant_hypotheses(spec, seq);
  const MajorantFactors mf = build_factors(spec);
  MajorantReport rep;
  rep.degree_bound = spec.l == 0 ? 0.0
                                 : 64.0 * spec.p * spec.p / (std::numbers::ln2 * std::numbers::ln2) *
                                       static_cast<double>(seq.mode(static_cast<std::size_t>(spec.l))) * spec.k;
  TrigPoly h = TrigPoly::constant_float(1.0);
  const TrigPoly phi = phi_k(spec.k).to_float();
  for (int j = 0; j < spec.l; ++j) {
    const auto c = spec.choices[static_cast<std::size_t>(j)];
    if (c == WeightChoice::One) continue;
    TrigPoly factor;
    if (c == WeightChoice::HalfPhi) {
      factor = phi;
    } else {
      const BernsteinPoly& w = mf.w[static_cast<std::size_t>(j)];
      const std::int64_t deg = static_cast<std::int64_t>(w.degree()) * spec.k;
      factor = interpolate_trig([&](double x) { return w(phi_value(spec.k, x)); }, deg);
      // compare against the composition at nodes offset from the interpolation grid
      const std::int64_t M = 4 * deg + 8;
      for (std::int64_t i = 0; i < M; ++i) {
        const double x = 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.5) / static_cast<double>(M);
        rep.interpolation_error =
            std::max(rep.interpolation_error, std::abs(factor(x).real() - w(phi_value(spec.k, x))));
      }
    }
    h = multiply(h, dilate(factor, seq[static_cast<std::size_t>(j)]));
  }
  rep.h = scale(h, std::complex<double>(std::pow(2.0, -mf.half_count / spec.p), 0.0));
  rep.degree = rep.h.degree();

  const std::uint64_t G = std::max<std::uint64_t>(10000, 4 * static_cast<std::uint64_t>(rep.degree));
  SandwichReport& s = rep.sandwich;
  s.worst_lower = INFINITY;
  s.worst_upper = INFINITY;
  for (std::uint64_t i = 0; i < G; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(G);
    const double g = weight_eval(spec, seq, t);
    const double hp = std::pow(product_form(spec, seq, mf, t), spec.p);
    s.worst_lower = std::min(s.worst_lower, hp - g);
    s.worst_upper = std::min(s.worst_upper, 2.0 * g - hp);
  }
  s.points = G;
  s.holds = s.worst_lower >= -kSlack && s.worst_upper >= -kSlack;
  for (int i = 0; i < 32; ++i) {
    const double t = 2.0 * std::numbers::pi * std::fmod(0.6180339887498949 * (i + 1), 1.0);
    rep.spot_error = std::max(rep.spot_error, std::abs(rep.h(t).real() - product_form(spec, seq, mf, t)));
  }
  if (!s.holds) throw Error(ErrorKind::SandwichFailure, "g <= h^p <= 2g fails on the grid");
  return rep;
}

// --------------------------------------------------------------------------

namespace {

struct Shifted {
  BernsteinPoly w;
  double sup_gap;
};

// B_n applied to u(. + 1/n) on [0, 2], lifted by the measured deficit so
// that w >= u holds on the check grid.
Shifted shifted_bernstein(double p, int n) {
  const double a = (p - 1.0) / p;
  auto u = [a](double x) { return std::pow(x, a); };
  std::vector<double> values(static_cast<std::size_t>(n) + 1);
  const double h = 1.0 / n;
  for (int k = 0; k <= n; ++k) values[static_cast<std::size_t>(k)] = u(2.0 * k / n + h);
  const BernsteinPoly B(values, 0.0, 2.0);
  std::vector<double> xs;
  for (int i = 0; i <= 20000; ++i) xs.push_back(2.0 * i / 20000.0);
  for (int i = 1; i <= 60; ++i) xs.push_back(std::ldexp(2.0, -i));
  double deficit = 0.0;
  for (double x : xs) deficit = std::max(deficit, u(x) - B(x));
  const BernsteinPoly w(std::move(values), 0.0, 2.0, deficit + kSlack);
  double gap = 0.0;
  for (double x : xs) gap = std::max(gap, w(x) - u(x));
  return {w, gap};
}

}  // namespace

WeierstrassReport weierstrass_wp(double p, double eps, double eps_min) {
  if (!(p > 1.0)) throw Error(ErrorKind::InvalidArgument, "weierstrass_wp needs p > 1");
  if (!(eps > 0.0)) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
  const MomentReport xp = x_moment(p);
  const MomentReport xp1 = x_moment(p - 1.0);
  const double denom = std::pow(xp.value, (p - 1.0) / p);
  WeierstrassReport best;
  for (; eps >= eps_min; eps /= 2.0) {
    int n = std::max(2, bernstein_order(std::min(eps, 0.999)));
    Shifted s = shifted_bernstein(p, n);
    while (s.sup_gap > eps && n < (1 << 13)) {
      n *= 2;
      s = shifted_bernstein(p, n);
    }
    if (s.sup_gap > eps) continue;
    QuadratureOptions opts;
    opts.tol = 1e-12;
    opts.min_points = initial_grid(n);
    const BernsteinPoly& w = s.w;
    const GridIntegrand fn = [&](const GridPoint& gp, double* out) {
      const double x = 1.0 + gp.cos_n(1);
      out[0] = std::pow(w(x), p);
    };
    const auto q = integrate_periodic(fn, 1, opts);
    WeierstrassReport rep;
    rep.w = s.w;
    rep.p = p;
    rep.eps = eps;
    rep.sup_gap = s.sup_gap;
    rep.numerator = {q.values[0], Method::Quadrature, q.errors[0], q.points, std::nullopt, q.converged};
    rep.x_p = xp;
    rep.lambda1 = q.values[0] / denom;
    rep.lower_envelope = xp1.value / denom;
    if (rep.lambda1 < 1.0) return rep;
    best = rep;
  }
  throw Error(ErrorKind::NoAdmissibleEps,
              "lambda_1 >= 1 down to eps = " + std::to_string(eps_min) +
                  " (last lambda_1 = " + std::to_string(best.lambda1) + ")");
}

double lambda2(double p, double lambda1, double eps) {
  return (1.0 + eps) * std::pow(1.0 - eps, (1.0 - p) / p) * lambda1;
}

LambdaChoice lambda_constants(double p, double lambda1, double eps0) {
  if (!(p > 1.0)) throw Error(ErrorKind::InvalidArgument, "lambda constants need p > 1");
  if (!(eps0 > 0.0 && eps0 < 1.0)) throw Error(ErrorKind::InvalidArgument, "eps0 must lie in (0, 1)");
  if (!(lambda1 < 1.0)) throw Error(ErrorKind::NoAdmissibleEps, "lambda_1 >= 1 admits no eps");
  for (int i = 0; i < 60; ++i) {
    const double eps = std::ldexp(eps0, -i);
    const double l2 = lambda2(p, lambda1, eps);
    if (l2 < 1.0) return {p, lambda1, eps, l2, i};
  }
  throw Error(ErrorKind::NoAdmissibleEps, "no eps on the grid gives lambda_2 < 1");
}

}  // namespace rieszlab
