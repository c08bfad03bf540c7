// Per-statement checks behind check_lemma.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>

#include "rieszlab/approx.hpp"
#include "rieszlab/errors.hpp"
#include "rieszlab/ledger.hpp"
#include "rieszlab/riesz.hpp"
#include "rieszlab/rng.hpp"
#include "rieszlab/verify.hpp"

namespace rieszlab {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxDim = 64;

void require(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorKind::HypothesisViolation, what);
}

// Coefficients are rounded to 2^-20 so exact and float modes agree.
double grain(double x) { return std::ldexp(std::round(std::ldexp(x, 20)), -20); }

class Draws {
 public:
  Draws(std::uint64_t seed, std::uint64_t stream) : rng_(seed, stream) {}
  double normal() { return rng_.normal(i_++); }
  double uniform() { return rng_.uniform(i_++); }
  std::uint64_t bits() { return rng_.bits(1'000'000'007ULL + i_++); }

 private:
  CounterRng rng_;
  std::uint64_t i_ = 0;
};

TrigPoly random_real(Draws& rd, const std::vector<std::int64_t>& freqs) {
  TrigPoly f = TrigPoly::constant(DyadicComplex(Dyadic::from_double(grain(rd.normal()))));
  for (auto n : freqs) {
    f = f + TrigPoly::cosine(n, Dyadic::from_double(grain(rd.normal())));
    f = f + TrigPoly::sine(n, Dyadic::from_double(grain(rd.normal())));
  }
  return f;
}

std::vector<std::int64_t> all_freqs(std::int64_t degree) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 1; n <= degree; ++n) out.push_back(n);
  return out;
}

/// At most 8 frequencies in [1, degree], always including degree.
std::vector<std::int64_t> sparse_freqs(Draws& rd, std::int64_t degree) {
  if (degree <= 8) return all_freqs(degree);
  std::vector<std::int64_t> out{degree};
  for (int i = 0; i < 7; ++i) out.push_back(1 + static_cast<std::int64_t>(rd.bits() % static_cast<std::uint64_t>(degree)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VecTrigPoly random_vec(Draws& rd, std::size_t dim, std::int64_t degree, ENorm e, bool sparse = false) {
  std::vector<TrigPoly> c;
  for (std::size_t i = 0; i < dim; ++i) c.push_back(random_real(rd, sparse ? sparse_freqs(rd, degree) : all_freqs(degree)));
  return {std::move(c), e};
}

TrigPoly random_complex(Draws& rd, std::int64_t degree) {
  TrigPoly::FloatTerms t;
  for (std::int64_t n = -degree; n <= degree; ++n) t.emplace_back(n, std::complex<double>(rd.normal(), rd.normal()));
  return {std::move(t), false};
}

Eigen::VectorXd random_vector(Draws& rd, std::size_t dim) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(dim));
  for (auto& x : v) x = grain(rd.normal());
  return v;
}

/// Evaluates every coordinate of a vector polynomial at a grid node.
class VecEval {
 public:
  explicit VecEval(const VecTrigPoly& f) : e_(f.e_norm) {
    for (const auto& c : f.coords) ev_.emplace_back(c);
    if (ev_.size() > kMaxDim) throw Error(ErrorKind::InvalidArgument, "dimension must be <= 64");
  }
  std::size_t dim() const { return ev_.size(); }
  void at(const GridPoint& gp, double* out) const {
    for (std::size_t i = 0; i < ev_.size(); ++i) out[i] = ev_[i].real_at(gp);
  }
  double norm_of(const double* v) const {
    return norm(Eigen::Map<const Eigen::VectorXd>(v, static_cast<Eigen::Index>(ev_.size())), e_);
  }
  double norm_at(const GridPoint& gp) const {
    double v[kMaxDim];
    at(gp, v);
    return norm_of(v);
  }

 private:
  std::vector<PolyEvaluator> ev_;
  ENorm e_;
};

QuadratureResult run(const GridIntegrand& fn, std::size_t comps, std::int64_t degree, double tol,
                     std::uint64_t max_points = std::uint64_t{1} << 24) {
  QuadratureOptions q{.tol = tol, .max_points = max_points};
  q.min_points = initial_grid(degree);
  auto r = integrate_periodic(fn, comps, q);
  if (!r.converged) throw Error(ErrorKind::NoConvergence, "quadrature did not reach tolerance");
  return r;
}

LacunarySeq geometric(std::int64_t d, std::size_t len) {
  require(d >= 2, "ratio must be >= 2");
  return make_sequence(1, Rational(d), std::max<std::size_t>(len, 1));
}

ENorm norm_of(const json& j) { return parse_enorm(j.value("norm", std::string("l2"))); }

CheckResult done(CheckResult r) {
  settle(r);
  return r;
}

CheckResult result(Method m, Direction d = Direction::LessEq) {
  CheckResult r;
  r.method = m;
  r.direction = d;
  return r;
}

// ---------------------------------------------------------------------------
// Tools for the single-polynomial inequalities.

CheckResult lemma_4_1(const json& j, double tol) {
  const double p = j.at("p");
  require(p > 1.0, "L4.1 needs p > 1");
  const auto dim = j.value<std::size_t>("dim", 2);
  const auto deg = j.value<std::int64_t>("degree", 4);
  const double gs = j.value("g_scale", 1.0);
  const ENorm e = norm_of(j);
  Draws rd(j.value<std::uint64_t>("seed", 0), 41);
  const VecEval f(random_vec(rd, dim, deg, e));
  const VecEval g(random_vec(rd, dim, deg, e));
  const GridIntegrand fn = [&](const GridPoint& gp, double* out) {
    double a[kMaxDim], b[kMaxDim], s[kMaxDim];
    f.at(gp, a);
    g.at(gp, b);
    for (std::size_t i = 0; i < dim; ++i) {
      b[i] *= gs;
      s[i] = a[i] + b[i];
    }
    const double nf = f.norm_of(a), ng = f.norm_of(b);
    out[0] = std::pow(f.norm_of(s), p);
    out[1] = std::pow(nf, p);
    out[2] = std::pow(ng, p);
    out[3] = std::pow(ng, p - 1.0) * nf;
  };
  const auto q = run(fn, 4, deg, tol);
  const double gamma = q.values[3] / q.values[1];
  auto r = result(Method::Quadrature);
  r.lhs = (std::pow(3.0, -p) - 2.0 * p * gamma) * q.values[1] + q.values[2];
  r.rhs = q.values[0];
  r.tolerance = quadrature_slack(q.errors[0] + q.errors[2] + (1.0 + 2.0 * p * gamma) * q.errors[1] + 2.0 * p * q.errors[3],
                                 r.rhs);
  return done(r);
}

CheckResult lemma_4_2(const json& j, double tol) {
  const double p = j.at("p");
  const double k = j.at("k");
  require(p >= 1.0 && k >= 1.0, "L4.2 needs k, p >= 1");
  const double kp = k * p;
  if (p == std::floor(p) && kp == std::floor(kp) && kp <= 64) {
    const TrigPoly c = power(TrigPoly::cosine(1), static_cast<unsigned>(2 * p));
    const TrigPoly s = power(TrigPoly::sine(1), static_cast<unsigned>(2 * kp));
    const Dyadic lhs = exact_integral_of_product(c, s).real();
    const Dyadic a = c.exact_coeff(0).real();
    const Dyadic b = s.exact_coeff(0).real();
    const Dyadic w(static_cast<std::int64_t>(kp) + 1);
    auto r = result(Method::PlancherelExact);
    r.lhs = lhs.to_double();
    r.rhs = (a * b).to_double() / (kp + 1.0);
    r.exact_lhs = lhs;
    const auto wi = static_cast<std::int64_t>(kp) + 1;
    if ((wi & (wi - 1)) == 0) {
      std::int64_t sh = 0;
      while ((std::int64_t{1} << sh) < wi) ++sh;
      r.exact_rhs = (a * b).ldexp(-sh);
    }
    settle(r);
    // the decision is the exact cross-multiplied comparison
    r.margin = (a * b - w * lhs).to_double() / (kp + 1.0);
    r.pass = w * lhs <= a * b;
    r.tolerance = 0.0;
    return r;
  }
  const GridIntegrand fn = [&](const GridPoint& gp, double* out) {
    const double c = std::pow(std::abs(gp.cos_n(1)), 2.0 * p);
    const double s = std::pow(std::abs(gp.sin_n(1)), 2.0 * kp);
    out[0] = c * s;
    out[1] = c;
    out[2] = s;
  };
  const auto q = run(fn, 3, 16, std::min(tol, 1e-12));
  auto r = result(Method::Quadrature);
  r.lhs = q.values[0];
  r.rhs = q.values[1] * q.values[2] / (kp + 1.0);
  r.tolerance = quadrature_slack(q.max_error(), r.rhs);
  return done(r);
}

CheckResult lemma_4_4(const json& j, double tol) {
  const auto n = j.at("n").get<std::int64_t>();
  require(n >= 1, "L4.4 needs n >= 1");
  const auto fd = j.value<std::int64_t>("f_degree", 5);
  const auto gd = j.value<std::int64_t>("g_degree", 3);
  const std::string kind = j.value("g_kind", std::string("poly"));
  Draws rd(j.value<std::uint64_t>("seed", 0), 44);
  const TrigPoly f = random_real(rd, all_freqs(fd));
  const PolyEvaluator fe(f), dfe(derivative(f));
  std::function<double(const GridPoint&)> g;
  std::int64_t deg = fd;
  PolyEvaluator ge(TrigPoly{});
  if (kind == "poly") {
    ge = PolyEvaluator(dilate(random_real(rd, all_freqs(gd)), n));
    g = [&](const GridPoint& gp) { return ge.real_at(gp); };
    deg += n * gd;
  } else if (kind == "abs_cos") {
    g = [n](const GridPoint& gp) { return std::abs(gp.cos_n(n)) - 0.25; };
    deg += 4 * n;
    tol = std::max(tol, 1e-8);
  } else {
    throw Error(ErrorKind::InvalidArgument, "L4.4 g_kind must be poly or abs_cos");
  }
  const GridIntegrand fn = [&](const GridPoint& gp, double* out) {
    const double fv = fe.real_at(gp), gv = g(gp);
    out[0] = fv * gv;
    out[1] = fv;
    out[2] = gv;
    out[3] = std::abs(dfe.real_at(gp));
    out[4] = std::abs(gv);
  };
  const auto q = run(fn, 5, deg, tol);
  auto r = result(Method::Quadrature);
  r.lhs = std::abs(q.values[0] - q.values[1] * q.values[2]);
  r.rhs = 2.0 * kPi / static_cast<double>(n) * q.values[3] * q.values[4];
  r.tolerance = quadrature_slack(q.errors[0] + std::abs(q.values[1]) * q.errors[2] + std::abs(q.values[2]) * q.errors[1],
                                 std::max(std::abs(q.values[0]), r.rhs));
  return done(r);
}

CheckResult lemma_4_5(const json& j, double) {
  const auto d = j.at("d").get<std::int64_t>();
  require(d >= 1, "L4.5 needs d >= 1");
  std::vector<std::int64_t> modes;
  if (j.contains("modes")) {
    modes = j.at("modes").get<std::vector<std::int64_t>>();
  } else {
    const auto N = j.at("N").get<std::size_t>();
    std::int64_t n = 1;
    for (std::size_t i = 0; i < N; ++i, n *= d + 1) modes.push_back(n);
  }
  require(!modes.empty(), "L4.5 needs at least one mode");
  for (std::size_t i = 1; i < modes.size(); ++i) {
    require(modes[i] >= (d + 1) * modes[i - 1], "L4.5 needs n_{j+1} >= (d+1) n_j");
  }
  const std::string form = j.value("form", std::string("random"));
  Draws rd(j.value<std::uint64_t>("seed", 0), 45);
  TrigPoly prod = TrigPoly::constant(DyadicComplex(1));
  Dyadic means(1);
  for (std::size_t i = 0; i < modes.size(); ++i) {
    TrigPoly g;
    if (form == "riesz") {
      g = riesz_factor(1);
    } else {
      // the last factor may have any degree
      g = random_real(rd, all_freqs(i + 1 == modes.size() ? 3 * d : d));
    }
    require(i + 1 == modes.size() || g.degree() <= d, "L4.5 factor degree exceeds d");
    means = means * g.exact_coeff(0).real();
    prod = multiply(prod, dilate(g, modes[i]));
  }
  const Dyadic lhs = prod.exact_coeff(0).real();
  auto r = result(Method::PlancherelExact, Direction::Equal);
  r.lhs = lhs.to_double();
  r.rhs = means.to_double();
  r.exact_lhs = lhs;
  r.exact_rhs = means;
  settle(r);
  r.pass = lhs == means;
  return r;
}

CheckResult lemma_4_5a(const json& j, double tol) {
  const double p = j.at("p");
  require(p >= 1.0, "L4.5a needs p >= 1");
  const auto d = j.at("d").get<std::int64_t>();
  require(d >= 1, "L4.5a needs d >= 1");
  const std::string form = j.value("form", std::string("random"));
  VecTrigPoly f;
  if (form == "cos") {
    f = VecTrigPoly({TrigPoly::cosine(d)}, ENorm::L2);
  } else {
    Draws rd(j.value<std::uint64_t>("seed", 0), 451);
    f = random_vec(rd, j.value<std::size_t>("dim", 2), d, norm_of(j));
  }
  require(f.degree() <= d, "L4.5a polynomial degree exceeds d");
  VecTrigPoly df = f;
  for (auto& c : df.coords) c = derivative(c);

  const bool exact = p == std::floor(p) && std::fmod(p, 2.0) == 0.0 && p <= 8 &&
                     (f.dim() == 1 || f.e_norm == ENorm::L2);
  if (exact) {
    const auto m = static_cast<unsigned>(p / 2);
    const auto a = lp_even_exact(df, m);
    const auto b = lp_even_exact(f, m);
    Dyadic dp(1);
    for (unsigned i = 0; i < static_cast<unsigned>(p); ++i) dp = dp * Dyadic(d);
    const Dyadic rhs = dp * *b.exact;
    auto r = result(Method::PlancherelExact);
    r.lhs = a.value;
    r.rhs = rhs.to_double();
    r.exact_lhs = a.exact;
    r.exact_rhs = rhs;
    settle(r);
    r.margin = (rhs - *a.exact).to_double();
    r.pass = *a.exact <= rhs;
    return r;
  }
  const VecEval fe(f), de(df);
  const GridIntegrand fn = [&](const GridPoint& gp, double* out) {
    out[0] = std::pow(de.norm_at(gp), p);
    out[1] = std::pow(fe.norm_at(gp), p);
  };
  const auto q = run(fn, 2, d, tol);
  auto r = result(Method::Quadrature);
  const double dp = std::pow(static_cast<double>(d), p);
  r.lhs = q.values[0];
  r.rhs = dp * q.values[1];
  r.tolerance = quadrature_slack(q.errors[0] + dp * q.errors[1], r.rhs);
  return done(r);
}

CheckResult lemma_4_5b(const json& j, double tol) {
  const double p = j.at("p");
  require(p >= 1.0, "L4.5b needs p >= 1");
  const auto d = j.at("d").get<std::int64_t>();
  const auto n = j.at("n").get<std::int64_t>();
  require(d >= 1 && n >= 1, "L4.5b needs d, n >= 1");
  const std::string kind = j.value("h_kind", std::string("poly"));
  Draws rd(j.value<std::uint64_t>("seed", 0), 452);
  const VecEval f(random_vec(rd, j.value<std::size_t>("dim", 2), d, norm_of(j)));
  std::int64_t deg = d * static_cast<std::int64_t>(std::ceil(p) + 1);
  PolyEvaluator he(TrigPoly{});
  std::function<double(const GridPoint&)> h;
  if (kind == "poly") {
    he = PolyEvaluator(dilate(random_real(rd, all_freqs(3)), n));
    h = [&](const GridPoint& gp) { return he.real_at(gp); };
    deg += 3 * n;
  } else if (kind == "riesz_power") {
    h = [n, p](const GridPoint& gp) { return std::pow(1.0 + gp.cos_n(n), p); };
    deg += 4 * n;
  } else if (kind == "abs_cos") {
    h = [n](const GridPoint& gp) { return std::abs(gp.cos_n(n)) - 0.25; };
    deg += 4 * n;
    tol = std::max(tol, 1e-8);
  } else {
    throw Error(ErrorKind::InvalidArgument, "L4.5b h_kind must be poly, riesz_power or abs_cos");
  }
  const GridIntegrand fn = [&](const GridPoint& gp, double* out) {
    const double a = std::pow(f.norm_at(gp), p), hv = h(gp);
    out[0] = a * hv;
    out[1] = a;
    out[2] = hv;
    out[3] = std::abs(hv);
  };
  const auto q = run(fn, 4, deg, tol);
  auto r = result(Method::Quadrature);
  r.lhs = std::abs(q.values[0] - q.values[1] * q.values[2]);
  r.rhs = 2.0 * kPi * p * static_cast<double>(d) / static_cast<double>(n) * q.values[1] * q.values[3];
  r.tolerance = quadrature_slack(q.errors[0] + std::abs(q.values[1]) * q.errors[2] + std::abs(q.values[2]) * q.errors[1],
                                 std::max(std::abs(q.values[0]), r.rhs));
  return done(r);
}

CheckResult lemma_4_6(const json& j, double tol) {
  const std::string kind = j.value("kind", std::string("inequality"));
  const auto d = j.at("d").get<int>();
  require(d >= 1, "L4.6 needs d >= 1");
  if (kind == "kernel") {
    const TrigPoly V = vpoussin_kernel(d);
    const auto m = lp_quadrature(V, 1.0, {.tol = std::min(tol, 1e-12)});
    auto r = result(Method::Quadrature);
    r.lhs = m.value;
    r.rhs = 1.5;
    r.tolerance = quadrature_slack(m.error_estimate, 1.5);
    return done(r);
  }
  if (kind == "identity") {
    // convolving f1 + f2 cos(nt) with 2 e^{int} V_d leaves e^{int} f2
    const std::int64_t n = j.value<std::int64_t>("n", 3 * d);
    require(n >= 3 * d, "L4.6 needs n >= 3d");
    Draws rd(j.value<std::uint64_t>("seed", 0), 461);
    const TrigPoly f1 = random_real(rd, all_freqs(d));
    const TrigPoly f2 = random_real(rd, all_freqs(d));
    const TrigPoly F = f1 + multiply(f2, TrigPoly::cosine(n));
    const TrigPoly g = scale(modulate(vpoussin_kernel(d), n), DyadicComplex(2));
    const TrigPoly diff = convolve_fourier(F, g) - modulate(f2, n);
    double worst = 0.0;
    for (const auto& [fr, c] : diff.to_float().float_terms()) worst = std::max(worst, std::abs(c));
    auto r = result(diff.is_exact() ? Method::PlancherelExact : Method::ProductForm, Direction::Equal);
    r.lhs = worst;
    r.rhs = 0.0;
    r.tolerance = diff.is_exact() ? 0.0 : 1e-12;
    return done(r);
  }
  const double p = j.at("p");
  require(p >= 1.0, "L4.6 needs p >= 1");
  const std::int64_t n = j.value<std::int64_t>("n", 3 * d);
  require(n >= 3 * d, "L4.6 needs n >= 3d");
  Draws rd(j.value<std::uint64_t>("seed", 0), 46);
  const auto dim = j.value<std::size_t>("dim", 2);
  const ENorm e = norm_of(j);
  const VecEval f1(random_vec(rd, dim, d, e));
  const VecEval f2(random_vec(rd, dim, d, e));
  const GridIntegrand fn = [&](const GridPoint& gp, double* out) {
    double a[kMaxDim], b[kMaxDim];
    f1.at(gp, a);
    f2.at(gp, b);
    const double c = gp.cos_n(n);
    const double n2 = f2.norm_of(b);
    for (std::size_t i = 0; i < dim; ++i) a[i] += b[i] * c;
    out[0] = std::pow(f1.norm_of(a), p);
    out[1] = std::pow(n2, p);
  };
  const auto q = run(fn, 2, n + d, tol);
  auto r = result(Method::Quadrature);
  r.lhs = std::pow(3.0, -p) * q.values[1];
  r.rhs = q.values[0];
  r.tolerance = quadrature_slack(q.max_error(), r.rhs);
  return done(r);
}

// ---------------------------------------------------------------------------
// Sup-norm comparison behind L2.3 and its iteration.

struct SupPair {
  double p_lower = 0.0;  ///< sampled sup |P|, a lower bound
  double q_upper = 0.0;  ///< sampled sup |Q| inflated by the Bernstein modulus, an upper bound
};

SupPair sup_pair(const TrigPoly& P1, const TrigPoly& P2, const TrigPoly& P3, std::int64_t M, std::int64_t d) {
  const TrigPoly P = P1 + modulate(P2, M) + modulate(P3, -M);
  const PolyEvaluator pe(P);
  SupPair s;
  {
    std::uint64_t K = 1;
    while (K < 256 * static_cast<std::uint64_t>(M + d)) K *= 2;
    std::vector<double> c(K), sn(K);
    for (std::uint64_t r = 0; r < K; ++r) {
      const double a = 2.0 * kPi * static_cast<double>(r) / static_cast<double>(K);
      c[r] = std::cos(a);
      sn[r] = std::sin(a);
    }
    for (std::uint64_t jx = 0; jx < K; ++jx) {
      s.p_lower = std::max(s.p_lower, std::abs(pe.at(GridPoint(jx, K, c.data(), sn.data()))));
    }
  }
  const std::uint64_t Kz = 2048;
  const std::uint64_t Kx = 2048 * static_cast<std::uint64_t>(std::max<std::int64_t>(d, 1));
  std::vector<std::complex<double>> w(Kz);
  for (std::uint64_t r = 0; r < Kz; ++r) w[r] = std::polar(1.0, 2.0 * kPi * static_cast<double>(r) / static_cast<double>(Kz));
  std::vector<double> c(Kx), sn(Kx);
  for (std::uint64_t r = 0; r < Kx; ++r) {
    const double a = 2.0 * kPi * static_cast<double>(r) / static_cast<double>(Kx);
    c[r] = std::cos(a);
    sn[r] = std::sin(a);
  }
  const PolyEvaluator e1(P1), e2(P2), e3(P3);
  double G = 0.0;
  for (std::uint64_t jx = 0; jx < Kx; ++jx) {
    const GridPoint gp(jx, Kx, c.data(), sn.data());
    const auto a = e1.at(gp), b = e2.at(gp), cc = e3.at(gp);
    for (const auto& z : w) G = std::max(G, std::norm(a + b * z + cc * std::conj(z)));
  }
  const double loss = kPi * (static_cast<double>(d) / static_cast<double>(Kx) + 1.0 / static_cast<double>(Kz));
  s.q_upper = std::sqrt(G) / (1.0 - loss);
  return s;
}

CheckResult lemma_2_3(const json& j, double) {
  const auto d = j.at("d").get<std::int64_t>();
  const auto M = j.at("M").get<std::int64_t>();
  require(d >= 1 && M > d, "L2.3 needs M > d >= 1");
  Draws rd(j.value<std::uint64_t>("seed", 0), 23);
  const TrigPoly P1 = random_complex(rd, d), P2 = random_complex(rd, d), P3 = random_complex(rd, d);
  const auto s = sup_pair(P1, P2, P3, M, d);
  auto r = result(Method::TensorGrid);
  r.lhs = (1.0 - kPi * kPi * static_cast<double>(d * d) / (2.0 * static_cast<double>(M * M))) * s.q_upper;
  r.rhs = s.p_lower;
  r.tolerance = 1e-12 * std::max(1.0, r.rhs);
  return done(r);
}

CheckResult corollary_2(const json& j, double) {
  const auto ratio = j.at("ratio").get<std::int64_t>();
  const auto N = j.at("N").get<std::size_t>();
  require(ratio >= 3, "C2 needs ratios >= 3");
  require(N >= 2 && N <= 6, "C2 needs 2 <= N <= 6");
  const LacunarySeq seq = make_sequence(j.value<std::int64_t>("base", 1), Rational(ratio), N);
  Draws rd(j.value<std::uint64_t>("seed", 0), 2);
  const std::int64_t nN = seq.mode(N);
  TrigPoly::FloatTerms t1, t2, t3;
  std::vector<int> eps(N, -1);
  while (true) {
    const std::int64_t fr = frequency_of(seq, eps);
    const std::complex<double> a(rd.normal(), rd.normal());
    if (eps[N - 1] == 0) t1.emplace_back(fr, a);
    if (eps[N - 1] == 1) t2.emplace_back(fr - nN, a);
    if (eps[N - 1] == -1) t3.emplace_back(fr + nN, a);
    std::size_t i = 0;
    while (i < N && eps[i] == 1) eps[i++] = -1;
    if (i == N) break;
    ++eps[i];
  }
  const TrigPoly P1(t1, false), P2(t2, false), P3(t3, false);
  const std::int64_t d = std::max({P1.degree(), P2.degree(), P3.degree()});
  require(nN > d, "C2 needs n_N above the lower-order degree");
  const auto s = sup_pair(P1, P2, P3, nN, d);
  const double q = static_cast<double>(seq.mode(N - 1)) / static_cast<double>(nN);
  auto r = result(Method::TensorGrid);
  r.lhs = (1.0 - 9.0 * kPi * kPi / 8.0 * q * q) * s.q_upper;
  r.rhs = s.p_lower;
  r.tolerance = 1e-12 * std::max(1.0, r.rhs);
  return done(r);
}

// ---------------------------------------------------------------------------
// Factorization of Riesz-product moments.

CheckResult corollary_6_1(const json& j, double tol) {
  const double p = j.at("p");
  const auto d = j.at("d").get<std::int64_t>();
  const auto k = j.at("k").get<std::size_t>();
  const auto n = j.at("n").get<std::int64_t>();
  require(p >= 1.0 && n != 0, "C6.1 needs p >= 1 and n != 0");
  const LacunarySeq seq = geometric(d, k);
  const std::int64_t deg = seq.prefix_sum(k);
  const GridIntegrand fn = [&](const GridPoint& gp, double* out) {
    double r = 1.0;
    for (std::size_t i = 0; i < k; ++i) r *= 1.0 + gp.cos_n(seq[i]);
    const double rp = std::pow(r, p);
    out[0] = rp * gp.cos_n(n);
    out[1] = rp * gp.sin_n(n);
    out[2] = rp;
  };
  const auto q = run(fn, 3, deg + std::abs(n), tol);
  auto r = result(Method::ProductForm);
  r.lhs = std::hypot(q.values[0], q.values[1]);
  r.rhs = 2.0 * kPi * p * static_cast<double>(deg) / static_cast<double>(std::abs(n)) * q.values[2];
  r.tolerance = quadrature_slack(q.max_error(), std::max(r.lhs, r.rhs));
  return done(r);
}

CheckResult corollary_6_2(const json& j, double tol) {
  const double p = j.at("p");
  const auto d = j.at("d").get<std::int64_t>();
  const auto k = j.at("k").get<std::size_t>();
  const auto l = j.at("l").get<std::size_t>();
  require(p >= 1.0, "C6.2 needs p >= 1");
  require(static_cast<double>(d) >= 2.0 * kPi * p + 1.0, "C6.2 needs d >= 2 pi p + 1");
  require(k >= 1 && k < l, "C6.2 needs 1 <= k < l");
  const LacunarySeq seq = geometric(d, l + 1);
  const GridIntegrand fn = [&](const GridPoint& gp, double* out) {
    double r = 1.0;
    for (std::size_t i = k; i <= l; ++i) r *= 1.0 + gp.cos_n(seq.mode(i));
    const double rp = std::pow(r, p);
    out[0] = rp * std::pow(1.0 + gp.cos_n(seq.mode(l + 1)), p);
    out[1] = rp;
  };
  const auto q = run(fn, 2, seq.prefix_sum(l + 1), tol);
  const auto xm = x_moment(p);
  const double ratio = q.values[0] / (q.values[1] * xm.value);
  auto r = result(Method::ProductForm);
  r.lhs = std::abs(ratio - 1.0);
  r.rhs = 2.0 * kPi * p / static_cast<double>(d - 1);
  r.tolerance = quadrature_slack(ratio * (q.errors[0] / q.values[0] + q.errors[1] / q.values[1] +
                                          xm.error_estimate / xm.value),
                                 1.0);
  return done(r);
}

CheckResult lemma_6_3(const json& j, double tol) {
  const double p = j.at("p");
  const auto d = j.at("d").get<std::int64_t>();
  const auto k = j.at("k").get<std::size_t>();
  const auto ls = j.at("ls").get<std::vector<int>>();
  require(p >= 1.0, "L6.3 needs p >= 1");
  require(static_cast<double>(d) > 2.0 * p + 1.0, "L6.3 needs d > 2p + 1");
  require(!ls.empty(), "L6.3 needs m >= 1");
  for (int li : ls) require(li >= 0 && li <= p, "L6.3 needs 0 <= l_i <= p");
  const std::size_t m = ls.size();
  const LacunarySeq seq = geometric(d, k + m);
  TrigPoly f = TrigPoly::constant(DyadicComplex(1));
  for (std::size_t i = 0; i < m; ++i) f = multiply(f, power(riesz_factor(seq[k + i]), static_cast<unsigned>(ls[i])));
  const Dyadic fmean = f.exact_coeff(0).real();
  const GridIntegrand fn = [&](const GridPoint& gp, double* out) {
    double r = 1.0;
    for (std::size_t i = 0; i < k; ++i) r *= 1.0 + gp.cos_n(seq[i]);
    double x = 1.0;
    for (std::size_t i = 0; i < m; ++i) x *= std::pow(1.0 + gp.cos_n(seq[k + i]), ls[i]);
    const double rp = std::pow(r, p);
    out[0] = rp * x;
    out[1] = rp;
  };
  const auto q = run(fn, 2, seq.prefix_sum(k + m) * static_cast<std::int64_t>(std::ceil(p) + 1), tol);
  const double dd = static_cast<double>(d);
  const double eps = 4.0 * kPi * dd / (dd - 1.0) * p * (2.0 * p + 1.0) / (dd - 2.0 * p - 1.0);
  auto r = result(Method::ProductForm);
  r.lhs = q.values[0];
  r.rhs = (1.0 + eps) * q.values[1] * fmean.to_double();
  r.tolerance = quadrature_slack(q.errors[0] + (1.0 + eps) * fmean.to_double() * q.errors[1], r.rhs);
  return done(r);
}

// ---------------------------------------------------------------------------
// Weighted statements.

double default_lambda2(double p) {
  static std::mutex mu;
  static std::map<double, double> cache;
  const std::lock_guard lock(mu);
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  const auto w = weierstrass_wp(p);
  const double l2 = lambda_constants(p, w.lambda1).lambda2;
  cache.emplace(p, l2);
  return l2;
}

struct WeightedSetup {
  double p = 2.0;
  int k = 1;
  std::size_t l = 0;
  std::size_t N = 1;
  LacunarySeq seq{{1}, Rational(1)};
  WeightSpec spec;
  VecTrigPoly f;
  std::vector<Eigen::VectorXd> v;
  ENorm e = ENorm::L2;
  double phi_mass = 0.0;
  std::int64_t degree = 0;
};

WeightedSetup weighted_setup(const json& j) {
  WeightedSetup w;
  w.p = j.at("p");
  w.k = j.at("k");
  w.l = j.at("l");
  w.N = j.value<std::size_t>("N", w.l + 1);
  require(w.p > 1.0, "weighted statements need p > 1");
  require(w.k >= 1, "weighted statements need k >= 1");
  require(w.N >= w.l + 1, "weighted statements need N >= l + 1");
  const auto d = j.value<std::int64_t>("d", 16 * w.k);
  require(d >= 8, "weighted statements need ratios >= 8");
  w.seq = geometric(d, w.N);
  w.e = norm_of(j);
  Draws rd(j.value<std::uint64_t>("seed", 0), 55);
  w.spec.k = w.k;
  w.spec.l = static_cast<int>(w.l);
  w.spec.p = w.p;
  if (j.contains("weights")) {
    for (const auto& s : j.at("weights")) w.spec.choices.push_back(parse_weight_choice(s.get<std::string>()));
  } else {
    for (std::size_t i = 0; i < w.l; ++i) w.spec.choices.push_back(static_cast<WeightChoice>(rd.bits() % 3));
  }
  w.spec.validate();
  const auto dim = j.value<std::size_t>("dim", 2);
  // f lives in the span of R_0..R_l; for l = 0 that is the constants
  const std::int64_t fdeg = w.l == 0 ? 0 : 2 * w.seq.mode(w.l);
  w.f = random_vec(rd, dim, fdeg, w.e, true);
  for (std::size_t i = 0; i <= w.N; ++i) w.v.push_back(random_vector(rd, dim));
  w.phi_mass = phi_moment(w.k, w.p);
  w.degree = fdeg + w.seq.prefix_sum(w.N) + w.k * w.seq.mode(w.l + 1);
  return w;
}

double phi_p_at(const WeightedSetup& w, const GridPoint& gp) {
  return std::pow(0.5 * (1.0 - gp.cos_n(w.seq.mode(w.l + 1))), w.k * w.p);
}

/// Fills r[0..N] with R_0..R_N at the node.
void riesz_values(const LacunarySeq& seq, std::size_t N, const GridPoint& gp, double* r) {
  r[0] = 1.0;
  for (std::size_t i = 1; i <= N; ++i) r[i] = r[i - 1] * (1.0 + gp.cos_n(seq[i - 1]));
}

constexpr std::size_t kMaxN = 64;

CheckResult theorem_5_5_1(const json& j, double tol) {
  const auto w = weighted_setup(j);
  const VecEval fe(w.f);
  const GridIntegrand fn = [&](const GridPoint& gp, double* out) {
    const double a = std::pow(fe.norm_at(gp), w.p) * weight_at(w.spec, w.seq, gp);
    out[0] = a * phi_p_at(w, gp);
    out[1] = a;
  };
  const auto q = run(fn, 2, w.degree, std::max(tol, 1e-9));
  auto r = result(Method::Quadrature);
  r.lhs = 0.25 * q.values[1] * w.phi_mass;
  r.rhs = q.values[0];
  r.tolerance = quadrature_slack(q.max_error(), r.rhs);
  return done(r);
}

CheckResult theorem_5_5_2(const json& j, double tol) {
  const auto w = weighted_setup(j);
  require(w.N < kMaxN, "N too large");
  const double l2 = j.contains("lambda2") ? j.at("lambda2").get<double>() : default_lambda2(w.p);
  const VecEval fe(w.f);
  const GridIntegrand fn = [&](const GridPoint& gp, double* out) {
    double R[kMaxN];
    riesz_values(w.seq, w.N, gp, R);
    const double g = weight_at(w.spec, w.seq, gp);
    const double nf = fe.norm_at(gp);
    out[0] = nf * std::pow(R[w.N], w.p - 1.0) * phi_p_at(w, gp) * g;
    out[1] = std::pow(nf, w.p) * g;
    out[2] = std::pow(R[w.N], w.p) * g;
  };
  const auto q = run(fn, 3, w.degree, std::max(tol, 1e-9));
  const double p = w.p;
  const double C6 = std::pow(w.k, (p - 1.0) / p) * std::pow(l2, -static_cast<double>(w.N - w.l - 1)) * q.values[0] /
                    (std::pow(q.values[1], 1.0 / p) * w.phi_mass * std::pow(q.values[2], (p - 1.0) / p));
  auto r = result(Method::Quadrature, Direction::Estimate);
  r.lhs = r.rhs = C6;
  return done(r);
}

CheckResult theorem_5_5_3(const json& j, double tol) {
  const auto w = weighted_setup(j);
  require(w.N < kMaxN, "N too large");
  const double l2 = j.contains("lambda2") ? j.at("lambda2").get<double>() : default_lambda2(w.p);
  const VecEval fe(w.f);
  const std::size_t dim = fe.dim();
  const std::size_t extra = w.N - w.l;
  const GridIntegrand fn = [&](const GridPoint& gp, double* out) {
    double R[kMaxN], s[kMaxDim] = {};
    riesz_values(w.seq, w.N, gp, R);
    for (std::size_t jj = w.l + 1; jj <= w.N; ++jj) {
      for (std::size_t i = 0; i < dim; ++i) s[i] += w.v[jj][static_cast<Eigen::Index>(i)] * R[jj];
    }
    const double g = weight_at(w.spec, w.seq, gp);
    const double nf = fe.norm_at(gp);
    out[0] = nf * std::pow(fe.norm_of(s), w.p - 1.0) * phi_p_at(w, gp) * g;
    out[1] = std::pow(nf, w.p) * g;
    for (std::size_t t = 0; t < extra; ++t) out[2 + t] = std::pow(R[w.l + 1 + t], w.p) * g;
  };
  const auto q = run(fn, 2 + extra, w.degree, std::max(tol, 1e-9));
  const double p = w.p;
  double mass = 0.0;
  for (std::size_t t = 0; t < extra; ++t) {
    mass += std::pow(l2, static_cast<double>(t)) * std::pow(norm(w.v[w.l + 1 + t], w.e), p) * q.values[2 + t];
  }
  const double C7 = std::pow(w.k, (p - 1.0) / p) * q.values[0] /
                    (std::pow(q.values[1], 1.0 / p) * w.phi_mass * std::pow(mass, (p - 1.0) / p));
  auto r = result(Method::Quadrature, Direction::Estimate);
  r.lhs = r.rhs = C7;
  return done(r);
}

CheckResult lemma_5_3(const json& j, double tol) {
  auto jj = j;
  jj["N"] = j.at("l").get<std::size_t>() + 1;
  const auto w = weighted_setup(jj);
  const std::size_t dim = w.f.dim();
  const GridIntegrand fn = [&](const GridPoint& gp, double* out) {
    double R[kMaxN], s[kMaxDim] = {};
    riesz_values(w.seq, w.N, gp, R);
    for (std::size_t t = 0; t <= w.N; ++t) {
      for (std::size_t i = 0; i < dim; ++i) s[i] += w.v[t][static_cast<Eigen::Index>(i)] * R[t];
    }
    const double g = weight_at(w.spec, w.seq, gp);
    out[0] = std::pow(norm(Eigen::Map<const Eigen::VectorXd>(s, static_cast<Eigen::Index>(dim)), w.e), w.p) * g;
    out[1] = std::pow(R[w.N], w.p) * g;
  };
  const auto q = run(fn, 2, w.degree, std::max(tol, 1e-9));
  const double c3 = q.values[0] / (std::pow(norm(w.v[w.N], w.e), w.p) * q.values[1]);
  auto r = result(Method::Quadrature, Direction::Estimate);
  r.lhs = r.rhs = c3;
  return done(r);
}

CheckResult proposition_5_6(const json& j, double tol) {
  const auto w = weighted_setup(j);
  require(w.k >= 2, "P5.6 needs k >= 2");
  require(w.N - w.l <= 3, "P5.6 is exercised only for N - l <= 3");
  require(j.contains("c3") && j.contains("C7"), "P5.6 needs empirical c3 and C7");
  const double c3 = j.at("c3"), C7 = j.at("C7");
  const double l2 = j.contains("lambda2") ? j.at("lambda2").get<double>() : default_lambda2(w.p);
  const std::size_t dim = w.f.dim();
  const std::size_t extra = w.N - w.l;
  const GridIntegrand fn = [&](const GridPoint& gp, double* out) {
    double R[kMaxN], s[kMaxDim] = {}, head[kMaxDim] = {};
    riesz_values(w.seq, w.N, gp, R);
    for (std::size_t t = 0; t <= w.N; ++t) {
      for (std::size_t i = 0; i < dim; ++i) {
        s[i] += w.v[t][static_cast<Eigen::Index>(i)] * R[t];
        if (t == w.l) head[i] = s[i];
      }
    }
    const double g = weight_at(w.spec, w.seq, gp);
    const auto D = static_cast<Eigen::Index>(dim);
    out[0] = std::pow(norm(Eigen::Map<const Eigen::VectorXd>(s, D), w.e), w.p) * g;
    out[1] = std::pow(norm(Eigen::Map<const Eigen::VectorXd>(head, D), w.e), w.p) * g;
    for (std::size_t t = 0; t < extra; ++t) out[2 + t] = std::pow(R[w.l + 1 + t], w.p) * g;
  };
  const auto q = run(fn, 2 + extra, w.degree, std::max(tol, 1e-9));
  const double a = alpha_p(w.k, w.p), b = beta_p(w.k, w.p, c3), g = gamma_p(w.k, w.p, C7);
  double lhs = a * q.values[1];
  for (std::size_t t = 0; t < extra; ++t) {
    lhs += (b - c_pj(g, l2, static_cast<int>(t + 1))) * std::pow(norm(w.v[w.l + 1 + t], w.e), w.p) * q.values[2 + t];
  }
  auto r = result(Method::Quadrature);
  r.lhs = lhs;
  r.rhs = q.values[0];
  r.tolerance = quadrature_slack(q.max_error(), r.rhs);
  return done(r);
}

using Checker = CheckResult (*)(const json&, double);

const std::map<std::string, Checker>& registry() {
  static const std::map<std::string, Checker> m{
      {"L4.1", lemma_4_1},          {"L4.2", lemma_4_2},          {"L4.4", lemma_4_4},
      {"L4.5", lemma_4_5},          {"L4.5a", lemma_4_5a},        {"L4.5b", lemma_4_5b},
      {"L4.6", lemma_4_6},          {"L2.3", lemma_2_3},          {"C2", corollary_2},
      {"C6.1", corollary_6_1},      {"C6.2", corollary_6_2},      {"L6.3", lemma_6_3},
      {"T5.5-1", theorem_5_5_1},    {"T5.5-2", theorem_5_5_2},    {"T5.5-3", theorem_5_5_3},
      {"L5.3", lemma_5_3},          {"P5.6", proposition_5_6},
  };
  return m;
}

}  // namespace

const std::vector<std::string>& statement_ids() {
  static const std::vector<std::string> ids{"L4.1", "L4.2", "L4.4", "L4.5",   "L4.5a",  "L4.5b",
                                            "L4.6", "L2.3", "C2",   "C6.1",   "C6.2",   "L6.3",
                                            "T5.5-1", "T5.5-2", "T5.5-3", "L5.3", "P5.6"};
  return ids;
}

CheckResult check_lemma(const std::string& statement_id, const nlohmann::json& instance, double tol) {
  const auto& reg = registry();
  const auto it = reg.find(statement_id);
  if (it == reg.end()) throw Error(ErrorKind::InvalidArgument, "unknown statement id: " + statement_id);
  CheckResult r = it->second(instance, tol);
  r.statement_id = statement_id;
  r.instance = instance.dump();
  r.seed = instance.value<std::uint64_t>("seed", 0);
  return r;
}

}  // namespace rieszlab
