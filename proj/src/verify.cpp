#include "rieszlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "rieszlab/errors.hpp"
#include "rieszlab/ledger.hpp"
#include "rieszlab/riesz.hpp"
#include "rieszlab/rng.hpp"
#include "rieszlab/summation.hpp"

namespace rieszlab {

namespace {

constexpr std::size_t kMaxDim = 64;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_even_integer(double p, double cap) { return p == std::floor(p) && p <= cap && std::fmod(p, 2.0) == 0.0; }

nlohmann::json seq_json(const LacunarySeq& seq, std::size_t N) {
  nlohmann::json j;
  j["modes"] = std::vector<std::int64_t>(seq.modes().begin(), seq.modes().begin() + static_cast<std::ptrdiff_t>(N));
  j["ratio"] = seq.ratio_floor().to_string();
  return j;
}

nlohmann::json coeffs_json(const Eigen::MatrixXd& c) {
  nlohmann::json cols = nlohmann::json::array();
  for (Eigen::Index k = 0; k < c.cols(); ++k) {
    std::vector<double> col(static_cast<std::size_t>(c.rows()));
    for (Eigen::Index i = 0; i < c.rows(); ++i) col[static_cast<std::size_t>(i)] = c(i, k);
    cols.push_back(col);
  }
  return cols;
}

Dyadic dyadic_pow(const Dyadic& x, unsigned m) {
  Dyadic r(1);
  for (unsigned i = 0; i < m; ++i) r = r * x;
  return r;
}

constexpr std::size_t kMaxTerms = 64;
constexpr std::uint64_t kKinkedDegreeCap = std::uint64_t{1} << 19;

void riesz_values(const LacunarySeq& seq, std::size_t N, double t, double* R) {
  R[0] = 1.0;
  for (std::size_t k = 1; k <= N; ++k) R[k] = R[k - 1] * (1.0 + cos_mul(seq[k - 1], t));
}

// Rows w with sum_k w_k R_k changing sign wherever the norm of the vector
// combination can have a kink.
Eigen::MatrixXd kink_weights(const Eigen::MatrixXd& coeffs, ENorm e_norm) {
  std::vector<Eigen::Index> rows;
  for (Eigen::Index i = 0; i < coeffs.rows(); ++i)
    if (coeffs.row(i).cwiseAbs().maxCoeff() > 0.0) rows.push_back(i);
  std::vector<Eigen::RowVectorXd> w;
  if (e_norm != ENorm::L2 || rows.size() == 1) {
    for (auto i : rows) w.push_back(coeffs.row(i));
  }
  if (e_norm == ENorm::Linf) {
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = a + 1; b < rows.size(); ++b) {
        w.push_back(coeffs.row(rows[a]) - coeffs.row(rows[b]));
        w.push_back(coeffs.row(rows[a]) + coeffs.row(rows[b]));
      }
  }
  Eigen::MatrixXd W(static_cast<Eigen::Index>(w.size()), coeffs.cols());
  for (std::size_t r = 0; r < w.size(); ++r) W.row(static_cast<Eigen::Index>(r)) = w[r];
  return W;
}

using Basis = std::function<void(double, double*)>;

// int ||sum_k v_k B_k(t)||^p dm for a basis B_0..B_N of trigonometric degree <= degree.
QuadratureResult integrate_norm_power(const Eigen::MatrixXd& coeffs, ENorm e_norm, double p, std::int64_t degree,
                                      const Basis& basis, const QuadratureOptions& opts) {
  const auto m = static_cast<std::size_t>(coeffs.rows());
  const auto terms = static_cast<std::size_t>(coeffs.cols());
  const Eigen::MatrixXd W = kink_weights(coeffs, e_norm);
  KinkedIntegrand f;
  f.value = [&](double t) {
    double B[kMaxTerms];
    basis(t, B);
    double acc[kMaxDim];
    for (std::size_t i = 0; i < m; ++i) {
      double s = 0.0;
      for (std::size_t k = 0; k < terms; ++k) s += coeffs(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) * B[k];
      acc[i] = s;
    }
    return std::pow(norm(Eigen::Map<const Eigen::VectorXd>(acc, static_cast<Eigen::Index>(m)), e_norm), p);
  };
  f.kinks = static_cast<std::size_t>(W.rows());
  // |x - r|^p becomes u^(q(p+1) - 1): analytic for integer p (q = 1) and
  // half-integer p (q = 2), at least C^7 otherwise
  f.kink_stretch = p == std::floor(p) ? 1 : 2 * p == std::floor(2 * p) ? 2 : 4;
  f.kink_values = [&](double t, double* g) {
    double B[kMaxTerms];
    basis(t, B);
    for (Eigen::Index r = 0; r < W.rows(); ++r) {
      double s = 0.0;
      for (std::size_t k = 0; k < terms; ++k) s += W(r, static_cast<Eigen::Index>(k)) * B[k];
      g[r] = s;
    }
  };
  return integrate_kinked(f, degree, opts);
}

}  // namespace

const char* to_string(Direction d) {
  switch (d) {
    case Direction::LessEq: return "LE";
    case Direction::Less: return "LT";
    case Direction::Equal: return "EQ";
    case Direction::Estimate: return "ESTIMATE";
  }
  return "?";
}

std::string CheckResult::instance_hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  };
  feed(statement_id);
  feed("|");
  feed(instance);
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

double quadrature_slack(double error_estimate, double scale) {
  return std::max(10.0 * error_estimate, 1e-10 * std::max(1.0, std::abs(scale)));
}

void settle(CheckResult& r) {
  if (!r.error.empty()) {
    r.pass = false;
    r.margin = std::numeric_limits<double>::quiet_NaN();
    return;
  }
  switch (r.direction) {
    case Direction::LessEq:
      r.margin = r.rhs - r.lhs;
      r.pass = r.margin >= -r.tolerance;
      break;
    case Direction::Less:
      r.margin = r.rhs - r.lhs;
      r.pass = r.margin > r.tolerance;
      break;
    case Direction::Equal:
      r.margin = -std::abs(r.rhs - r.lhs);
      r.pass = r.margin >= -r.tolerance;
      break;
    case Direction::Estimate:
      r.margin = 0.0;
      r.pass = std::isfinite(r.lhs);
      break;
  }
  if (r.margin == 0.0) r.margin = 0.0;  // no "-0" in reports
  if (std::isnan(r.lhs) || std::isnan(r.rhs)) r.pass = false;
}

// ---------------------------------------------------------------------------

TheoremEvaluator::TheoremEvaluator(LacunarySeq seq, std::size_t N, double p, QuadratureOptions opts)
    : seq_(std::move(seq)), N_(N), p_(p), opts_(opts) {
  if (N_ > seq_.length()) throw Error(ErrorKind::InvalidArgument, "N exceeds sequence length");
  if (!(p_ >= 1.0)) throw Error(ErrorKind::InvalidArgument, "p must be >= 1");
  if (N_ >= kMaxTerms) throw Error(ErrorKind::TooLarge, "N must be below 64");
  moments_.resize(N_ + 1);
  moments_[0] = {1.0, Method::PlancherelExact, 0.0, 1, Dyadic(1), true};
  if (N_ == 0) return;
  if (is_even_integer(p_, 16.0) && N_ <= 8) {
    TrigPoly r = TrigPoly::constant(DyadicComplex(1));
    for (std::size_t k = 1; k <= N_; ++k) {
      r = multiply(r, riesz_factor(seq_[k - 1]));
      moments_[k] = lp_even_exact(r, static_cast<unsigned>(p_ / 2));
    }
    return;
  }
  QuadratureOptions q = opts_;
  q.min_points = std::max(q.min_points, initial_grid(seq_.prefix_sum(N_)));
  const GridIntegrand fn = [&](const GridPoint& gp, double* out) {
    double r = 1.0;
    for (std::size_t k = 1; k <= N_; ++k) {
      r *= 1.0 + gp.cos_n(seq_[k - 1]);
      out[k - 1] = std::pow(r, p_);
    }
  };
  const auto res = integrate_periodic(fn, N_, q);
  for (std::size_t k = 1; k <= N_; ++k) {
    moments_[k] = {res.values[k - 1], Method::ProductForm, res.errors[k - 1], res.points, std::nullopt,
                   res.converged};
  }
}

bool TheoremEvaluator::exact_capable(const Eigen::MatrixXd& coeffs, ENorm e_norm) const {
  return is_even_integer(p_, 8.0) && N_ <= 6 && (coeffs.rows() == 1 || e_norm == ENorm::L2) &&
         moments_.back().exact.has_value();
}

RatioEvaluation TheoremEvaluator::operator()(const Eigen::MatrixXd& coeffs, ENorm e_norm) const {
  if (coeffs.cols() != static_cast<Eigen::Index>(N_ + 1)) {
    throw Error(ErrorKind::InvalidArgument, "need N+1 coefficient columns");
  }
  const auto m = static_cast<std::size_t>(coeffs.rows());
  if (m < 1 || m > kMaxDim) throw Error(ErrorKind::InvalidArgument, "coefficient dimension must be in [1, 64]");
  if (!coeffs.allFinite()) throw Error(ErrorKind::InvalidArgument, "coefficients must be finite");

  std::vector<double> normp(N_ + 1);
  std::size_t nonzero = 0;
  std::size_t last = 0;
  RatioEvaluation out;
  double den_err = 0.0;
  for (std::size_t k = 0; k <= N_; ++k) {
    const double nv = norm(coeffs.col(static_cast<Eigen::Index>(k)), e_norm);
    normp[k] = std::pow(nv, p_);
    if (nv != 0.0) {
      ++nonzero;
      last = k;
    }
    out.denominator += normp[k] * moments_[k].value;
    den_err += normp[k] * moments_[k].error_estimate;
  }
  if (nonzero == 0) throw Error(ErrorKind::InvalidArgument, "all coefficients vanish");

  if (nonzero == 1) {
    // a single term: both sides are the same product
    out.numerator = out.denominator;
    out.ratio = 1.0;
    out.method = moments_[last].method;
    if (moments_[last].exact && coeffs.rows() == 1 && is_even_integer(p_, 8.0)) {
      const Dyadic v = dyadic_pow(Dyadic::from_double(std::abs(coeffs(0, static_cast<Eigen::Index>(last)))),
                                  static_cast<unsigned>(p_)) * *moments_[last].exact;
      out.exact_numerator = v;
      out.exact_denominator = v;
    }
    return out;
  }

  if (exact_capable(coeffs, e_norm)) {
    const VecTrigPoly f = weighted_sum(coeffs, seq_, N_, ENorm::L2);
    const auto num = lp_even_exact(f, static_cast<unsigned>(p_ / 2));
    Dyadic den;
    for (std::size_t k = 0; k <= N_; ++k) {
      Dyadic sq;
      for (std::size_t i = 0; i < m; ++i) {
        const Dyadic c = Dyadic::from_double(coeffs(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)));
        sq += c * c;
      }
      den += dyadic_pow(sq, static_cast<unsigned>(p_ / 2)) * *moments_[k].exact;
    }
    out.exact_numerator = *num.exact;
    out.exact_denominator = den;
    out.numerator = num.value;
    out.denominator = den.to_double();
    out.ratio = out.numerator / out.denominator;
    out.method = Method::PlancherelExact;
    out.points = num.points_or_terms;
    return out;
  }

  const std::int64_t degree = seq_.prefix_sum(N_);
  if (static_cast<std::uint64_t>(degree) <= kKinkedDegreeCap) {
    const auto res = integrate_norm_power(
        coeffs, e_norm, p_, degree, [this](double t, double* R) { riesz_values(seq_, N_, t, R); }, opts_);
    out.numerator = res.values[0];
    out.ratio = out.numerator / out.denominator;
    out.error = out.ratio * (res.errors[0] / std::max(out.numerator, 1e-300) + den_err / out.denominator);
    out.method = Method::ProductForm;
    out.points = res.points;
    out.converged = res.converged;
    return out;
  }

  QuadratureOptions q = opts_;
  q.min_points = std::max(q.min_points, initial_grid(seq_.prefix_sum(N_)));
  const GridIntegrand fn = [&](const GridPoint& gp, double* res) {
    double acc[kMaxDim];
    for (std::size_t i = 0; i < m; ++i) acc[i] = coeffs(static_cast<Eigen::Index>(i), 0);
    double r = 1.0;
    for (std::size_t k = 1; k <= N_; ++k) {
      r *= 1.0 + gp.cos_n(seq_[k - 1]);
      for (std::size_t i = 0; i < m; ++i) {
        acc[i] += coeffs(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) * r;
      }
    }
    res[0] = std::pow(norm(Eigen::Map<const Eigen::VectorXd>(acc, static_cast<Eigen::Index>(m)), e_norm), p_);
  };
  const auto res = integrate_periodic(fn, 1, q);
  out.numerator = res.values[0];
  out.ratio = out.numerator / out.denominator;
  out.error = out.ratio * (res.errors[0] / std::max(out.numerator, 1e-300) + den_err / out.denominator);
  out.method = Method::ProductForm;
  out.points = res.points;
  out.converged = res.converged;
  return out;
}

std::pair<CheckResult, CheckResult> check_main_theorem(const LacunarySeq& seq, double p,
                                                       const Eigen::MatrixXd& coeffs, ENorm e_norm,
                                                       double tol) {
  if (coeffs.cols() < 1) throw Error(ErrorKind::InvalidArgument, "need at least one coefficient");
  const auto N = static_cast<std::size_t>(coeffs.cols() - 1);
  return check_main_theorem(TheoremEvaluator(seq, N, p, {.tol = tol}), coeffs, e_norm);
}

std::pair<CheckResult, CheckResult> check_main_theorem(const TheoremEvaluator& eval,
                                                       const Eigen::MatrixXd& coeffs, ENorm e_norm) {
  if (static_cast<std::size_t>(coeffs.cols()) != eval.N() + 1) {
    throw Error(ErrorKind::InvalidArgument, "coefficient count does not match N");
  }
  const auto& seq = eval.sequence();
  const double p = eval.p();
  const std::size_t N = eval.N();
  const auto r = eval(coeffs, e_norm);
  if (!r.converged) throw Error(ErrorKind::NoConvergence, "main ratio quadrature did not converge");
  const auto cand = main_theorem_candidates(p);

  nlohmann::json inst;
  inst["seq"] = seq_json(seq, N);
  inst["p"] = p;
  inst["norm"] = to_string(e_norm);
  inst["coeffs"] = coeffs_json(coeffs);
  const std::string text = inst.dump();

  CheckResult lo{.statement_id = "T1.1-lower", .instance = text, .lhs = cand.lower, .rhs = r.ratio,
                 .method = r.method};
  CheckResult up{.statement_id = "T1.1-upper", .instance = text, .lhs = r.ratio, .rhs = cand.upper,
                 .method = r.method};
  if (r.exact_numerator && r.exact_denominator) {
    lo.tolerance = up.tolerance = 0.0;
    settle(lo);
    settle(up);
    // decide by cross-multiplication, not by the rounded ratio
    const Dyadic c = Dyadic::from_double(cand.lower);
    const Dyadic C = Dyadic::from_double(cand.upper);
    lo.pass = c * *r.exact_denominator <= *r.exact_numerator;
    up.pass = *r.exact_numerator <= C * *r.exact_denominator;
  } else {
    lo.tolerance = up.tolerance = quadrature_slack(r.error, r.ratio);
    settle(lo);
    settle(up);
  }
  return {lo, up};
}

// ---------------------------------------------------------------------------

const char* to_string(SearchStrategy s) {
  switch (s) {
    case SearchStrategy::SignSweep: return "sign";
    case SearchStrategy::Random: return "random";
    case SearchStrategy::Refine: return "refine";
    case SearchStrategy::All: return "all";
  }
  return "?";
}

SearchStrategy parse_search_strategy(const std::string& text) {
  if (text == "sign") return SearchStrategy::SignSweep;
  if (text == "random") return SearchStrategy::Random;
  if (text == "refine") return SearchStrategy::Refine;
  if (text == "all") return SearchStrategy::All;
  throw Error(ErrorKind::InvalidArgument, "unknown search strategy: " + text);
}

ConstantEstimate estimate_lower_constant(const LacunarySeq& seq, double p, std::size_t N,
                                         ENorm e_norm, SearchStrategy strategy,
                                         std::uint64_t budget, std::uint64_t seed, std::size_t dim,
                                         QuadratureOptions opts) {
  const TheoremEvaluator eval(seq, N, p, opts);
  return estimate_lower_constant(eval, e_norm, strategy, budget, seed, dim);
}

ConstantEstimate estimate_lower_constant(const TheoremEvaluator& eval, ENorm e_norm,
                                         SearchStrategy strategy, std::uint64_t budget,
                                         std::uint64_t seed, std::size_t dim) {
  if (budget < 1) throw Error(ErrorKind::InvalidArgument, "budget must be >= 1");
  if (dim < 1 || dim > kMaxDim) throw Error(ErrorKind::InvalidArgument, "dimension must be in [1, 64]");
  const std::size_t N = eval.N();
  const auto rows = static_cast<Eigen::Index>(dim);
  const auto cols = static_cast<Eigen::Index>(N + 1);

  ConstantEstimate est;
  est.p = eval.p();
  est.N = N;
  est.e_norm = e_norm;
  est.budget = budget;
  {
    std::string s;
    for (std::size_t j = 0; j < N; ++j) s += (j ? "," : "") + std::to_string(eval.sequence()[j]);
    est.seq = s + ";" + eval.sequence().ratio_floor().to_string();
  }

  auto consider = [&](const Eigen::MatrixXd& c) {
    const double r = eval(c, e_norm).ratio;
    ++est.evaluations;
    if (r < est.empirical_lower) {
      est.empirical_lower = r;
      est.argmin = c;
    }
    if (r > est.empirical_upper) {
      est.empirical_upper = r;
      est.argmax = c;
    }
  };

  Eigen::MatrixXd e0 = Eigen::MatrixXd::Zero(rows, cols);
  e0(0, 0) = 1.0;
  est.argmin = est.argmax = e0;
  ++est.evaluations;  // ratio 1 at e0

  const bool sweep = strategy == SearchStrategy::SignSweep || strategy == SearchStrategy::All;
  const bool random = strategy == SearchStrategy::Random || strategy == SearchStrategy::All;
  const bool refine = strategy == SearchStrategy::Refine || strategy == SearchStrategy::All;

  if (sweep) {
    if (N > 12) throw Error(ErrorKind::TooLarge, "sign sweeps need N <= 12");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N); ++mask) {
      Eigen::MatrixXd c = Eigen::MatrixXd::Zero(rows, cols);
      c(0, 0) = 1.0;
      for (std::size_t k = 1; k <= N; ++k) c(0, static_cast<Eigen::Index>(k)) = (mask >> (k - 1)) & 1 ? -1.0 : 1.0;
      consider(c);
    }
  }

  if (random) {
    for (std::uint64_t i = 0; i < budget; ++i) {
      const CounterRng rng(seed, i);
      std::uint64_t draw = 0;
      Eigen::MatrixXd c(rows, cols);
      for (Eigen::Index k = 0; k < cols; ++k) {
        double len = 0.0;
        for (Eigen::Index r = 0; r < rows; ++r) {
          c(r, k) = rng.normal(draw++);
          len += c(r, k) * c(r, k);
        }
        const double mag = std::exp(1.5 * rng.normal(draw++));
        c.col(k) *= mag / std::sqrt(std::max(len, 1e-300));
      }
      consider(c);
    }
  }

  if (refine) {
    // multiplicative coordinate moves from the current minimizer, first
    // improvement kept
    const CounterRng rng(seed, 0xfeed'0000'0000'0000ULL);
    Eigen::MatrixXd cur = est.argmin;
    double cur_r = est.empirical_lower;
    std::uint64_t draw = 0;
    for (std::uint64_t it = 0; it < budget; ++it) {
      const auto slot = static_cast<Eigen::Index>(it % static_cast<std::uint64_t>(rows * cols));
      Eigen::MatrixXd c = cur;
      double& x = c(slot % rows, slot / rows);
      if (rng.uniform(draw++) < 0.1) {
        x = -x;
      } else {
        const double step = std::exp(0.5 * rng.normal(draw++));
        x = x == 0.0 ? 0.1 * rng.normal(draw++) : x * step;
      }
      if (c.cwiseAbs().maxCoeff() == 0.0) continue;
      const double r = eval(c, e_norm).ratio;
      ++est.evaluations;
      if (r > est.empirical_upper) {
        est.empirical_upper = r;
        est.argmax = c;
      }
      if (r < cur_r) {
        cur_r = r;
        cur = c;
        if (r < est.empirical_lower) {
          est.empirical_lower = r;
          est.argmin = c;
        }
      }
    }
  }
  return est;
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> check_schneider_counterexample(int p_even, int k_max) {
  if (p_even < 4 || p_even % 2 != 0) throw Error(ErrorKind::InvalidArgument, "p must be an even integer >= 4");
  if (k_max < 1) throw Error(ErrorKind::InvalidArgument, "k_max must be >= 1");
  const auto q = static_cast<unsigned>(p_even / 2);
  const auto len = static_cast<std::size_t>(2 * k_max);
  std::vector<std::int64_t> modes;
  std::int64_t n = 1;
  for (std::size_t j = 0; j < len; ++j) {
    if (n > (std::int64_t{1} << 62) / p_even) throw Error(ErrorKind::Overflow, "modes p^j overflow");
    n *= p_even;
    modes.push_back(n);
  }
  const LacunarySeq seq(modes, Rational(p_even));

  // f(x) = ((1 + cos x)(1 + cos p x))^q; int f^2 is the two-factor mass
  const TrigPoly f = power(multiply(riesz_factor(1), riesz_factor(p_even)), q);
  const Dyadic f2 = exact_plancherel_sum(f);

  std::vector<CheckResult> out;
  Dyadic prev_num(1), prev_den(1);
  TrigPoly R = TrigPoly::constant(DyadicComplex(1));
  const auto sep = torus2_norm(
      [q](double x, double y) { return std::pow((1.0 + std::cos(x)) * (1.0 + std::cos(y)), q); }, 2.0,
      {.tol = 1e-14, .min_points = 64});
  for (int k = 1; k <= k_max; ++k) {
    nlohmann::json inst{{"p", p_even}, {"k", k}};
    const std::string text = inst.dump();
    R = multiply(R, riesz_factor(modes[static_cast<std::size_t>(2 * k - 2)]));
    R = multiply(R, riesz_factor(modes[static_cast<std::size_t>(2 * k - 1)]));
    const auto num = lp_even_exact(R, q);
    const auto den = tilde_norm_product(p_even, static_cast<std::size_t>(2 * k));

    CheckResult d{.statement_id = "CE-denominator", .instance = text, .lhs = std::pow(sep.value, k),
                  .rhs = den.value, .method = Method::TensorGrid, .direction = Direction::Equal};
    d.exact_rhs = den.exact;
    d.tolerance = quadrature_slack(k * std::pow(sep.value, k - 1) * sep.error_estimate, den.value);
    settle(d);
    out.push_back(d);

    const double r_prev = std::pow(prev_num.to_double() / prev_den.to_double(), 1.0 / p_even);
    const double r_cur = std::pow(num.value / den.value, 1.0 / p_even);
    CheckResult g{.statement_id = "CE-growth", .instance = text, .lhs = r_prev, .rhs = r_cur,
                  .method = Method::PlancherelExact, .direction = Direction::Less};
    settle(g);
    g.pass = prev_num * *den.exact < *num.exact * prev_den;
    out.push_back(g);

    const Dyadic low = dyadic_pow(f2, static_cast<unsigned>(k));
    CheckResult l{.statement_id = "CE-larger", .instance = text, .lhs = low.to_double(), .rhs = num.value,
                  .method = Method::PlancherelExact};
    l.exact_lhs = low;
    l.exact_rhs = num.exact;
    settle(l);
    l.pass = low <= *num.exact;
    out.push_back(l);

    prev_num = *num.exact;
    prev_den = *den.exact;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> check_l1_transfer(const LacunarySeq& seq, std::size_t N,
                                           const Eigen::MatrixXd& coeffs, std::size_t psi_samples,
                                           std::uint64_t seed, ENorm e_norm) {
  if (N > seq.length()) throw Error(ErrorKind::InvalidArgument, "N exceeds sequence length");
  if (seq.prefix(std::max<std::size_t>(N, 1)).min_ratio().num <
      3 * seq.prefix(std::max<std::size_t>(N, 1)).min_ratio().den) {
    throw Error(ErrorKind::HypothesisViolation, "transfer needs consecutive ratios >= 3");
  }
  if (coeffs.cols() != static_cast<Eigen::Index>(N + 1)) {
    throw Error(ErrorKind::InvalidArgument, "need N+1 coefficient columns");
  }
  const auto m = static_cast<std::size_t>(coeffs.rows());
  if (m < 1 || m > kMaxDim) throw Error(ErrorKind::InvalidArgument, "coefficient dimension must be in [1, 64]");

  std::vector<TrigPoly> R(N + 1);
  R[0] = TrigPoly::constant(DyadicComplex(1));
  for (std::size_t k = 1; k <= N; ++k) R[k] = multiply(R[k - 1], riesz_factor(seq[k - 1]));

  std::vector<CheckResult> out;
  for (std::size_t s = 0; s < psi_samples; ++s) {
    const CounterRng rng(seed, s);
    std::vector<double> psi(N, 0.0);
    if (s > 0) {
      for (std::size_t j = 0; j < N; ++j) psi[j] = kTwoPi * rng.uniform(j);
    }
    nlohmann::json inst;
    inst["seq"] = seq_json(seq, N);
    inst["norm"] = to_string(e_norm);
    inst["coeffs"] = coeffs_json(coeffs);
    inst["psi"] = psi;
    const std::string text = inst.dump();

    // identity: convolving R_k with the shifted product halves each factor
    const TrigPoly P = riesz_shifted(seq, N, psi);
    double worst = 0.0;
    for (std::size_t k = 0; k <= N; ++k) {
      const TrigPoly diff = convolve_fourier(P, R[k]) - half_riesz_shifted(seq, k, psi);
      for (const auto& [fr, c] : diff.to_float().float_terms()) worst = std::max(worst, std::abs(c));
    }
    CheckResult id{.statement_id = "TR-identity", .instance = text, .lhs = worst, .rhs = 0.0,
                   .method = Method::ProductForm, .direction = Direction::Equal, .seed = seed,
                   .tolerance = 1e-13};
    settle(id);
    out.push_back(id);

    std::vector<double> cps(N), sps(N);
    for (std::size_t j = 0; j < N; ++j) {
      cps[j] = std::cos(psi[j]);
      sps[j] = std::sin(psi[j]);
    }
    const QuadratureOptions q{.tol = 1e-10};
    const std::int64_t degree = seq.prefix_sum(N);
    const auto shifted = integrate_norm_power(
        coeffs, e_norm, 1.0, degree,
        [&](double t, double* B) {
          B[0] = 1.0;
          for (std::size_t k = 1; k <= N; ++k) {
            const std::int64_t nk = seq[k - 1];
            B[k] = B[k - 1] * (1.0 + 0.5 * (cos_mul(nk, t) * cps[k - 1] - sin_mul(nk, t) * sps[k - 1]));
          }
        },
        q);
    const auto plain = integrate_norm_power(
        coeffs, e_norm, 1.0, degree, [&](double t, double* B) { riesz_values(seq, N, t, B); }, q);
    QuadratureResult res;
    res.values = {shifted.values[0], plain.values[0]};
    res.errors = {shifted.errors[0], plain.errors[0]};
    res.converged = shifted.converged && plain.converged;
    CheckResult c{.statement_id = "TR-contraction", .instance = text, .lhs = res.values[0],
                  .rhs = res.values[1], .method = Method::ProductForm, .seed = seed};
    c.tolerance = quadrature_slack(res.max_error(), res.values[1]);
    if (!res.converged) c.error = "quadrature did not converge";
    settle(c);
    out.push_back(c);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<DiscrepancyRow> check_p_discrepancy(int q, const std::vector<double>& p_grid) {
  if (q < 2 || q % 2 != 0) throw Error(ErrorKind::InvalidArgument, "q must be an even integer");
  const TrigPoly P = multiply(riesz_factor(1), riesz_factor(q));
  std::vector<DiscrepancyRow> rows;
  for (double p : p_grid) {
    if (!(p >= 1.0)) throw Error(ErrorKind::InvalidArgument, "p must be >= 1");
    DiscrepancyRow row;
    row.p = p;
    row.torus = is_even_integer(p, 32.0) ? lp_even_exact(P, static_cast<unsigned>(p / 2))
                                         : lp_quadrature(P, p, {.tol = 1e-13});
    row.lifted = tilde_norm_product(p, 2);
    row.difference = row.torus.value - row.lifted.value;
    if (row.torus.exact && row.lifted.exact) {
      row.differs = *row.torus.exact != *row.lifted.exact;
    } else {
      row.differs = std::abs(row.difference) >
                    quadrature_slack(row.torus.error_estimate + row.lifted.error_estimate, row.lifted.value);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------

MomentReport montecarlo_iid(double p, std::size_t N, const Eigen::MatrixXd& coeffs, ENorm e_norm,
                            std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) throw Error(ErrorKind::InvalidArgument, "samples must be >= 1");
  if (!(p >= 1.0)) throw Error(ErrorKind::InvalidArgument, "p must be >= 1");
  if (coeffs.cols() != static_cast<Eigen::Index>(N + 1)) {
    throw Error(ErrorKind::InvalidArgument, "need N+1 coefficient columns");
  }
  const auto m = static_cast<std::size_t>(coeffs.rows());
  if (m < 1 || m > kMaxDim) throw Error(ErrorKind::InvalidArgument, "coefficient dimension must be in [1, 64]");
  const CounterRng rng(seed, 0);
  std::vector<double> vals(samples);
  for (std::uint64_t s = 0; s < samples; ++s) {
    double acc[kMaxDim];
    for (std::size_t i = 0; i < m; ++i) acc[i] = coeffs(static_cast<Eigen::Index>(i), 0);
    double r = 1.0;
    for (std::size_t k = 1; k <= N; ++k) {
      r *= 1.0 + std::cos(kTwoPi * rng.uniform(s * N + (k - 1)));
      for (std::size_t i = 0; i < m; ++i) acc[i] += coeffs(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) * r;
    }
    vals[s] = std::pow(norm(Eigen::Map<const Eigen::VectorXd>(acc, static_cast<Eigen::Index>(m)), e_norm), p);
  }
  const double n = static_cast<double>(samples);
  const double mean = pairwise_sum(vals) / n;
  double se = std::numeric_limits<double>::infinity();
  if (samples > 1) {
    for (double& v : vals) v = (v - mean) * (v - mean);
    se = std::sqrt(pairwise_sum(vals) / (n - 1.0) / n);
  }
  return {mean, Method::MonteCarlo, se, samples, std::nullopt, true};
}

}  // namespace rieszlab
