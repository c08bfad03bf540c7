#include "rieszlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include "rieszlab/errors.hpp"
#include "rieszlab/summation.hpp"

namespace rieszlab {

namespace {

constexpr std::uint64_t kChunk = 4096;

struct Table {
  std::vector<double> c;
  std::vector<double> s;
};

Table make_table(std::uint64_t M) {
  Table tab{std::vector<double>(M), std::vector<double>(M)};
  for (std::uint64_t r = 0; r < M; ++r) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(M);
    tab.c[r] = std::cos(a);
    tab.s[r] = std::sin(a);
  }
  return tab;
}

// Sums fn over nodes j = first, first+stride, ... (count of them) of an
// M-point grid, component-wise, with a fixed chunk/pairwise order.
std::vector<double> grid_sum(const GridIntegrand& fn, std::size_t comps, std::uint64_t M,
                             std::uint64_t first, std::uint64_t stride, std::uint64_t count,
                             const Table& tab, unsigned threads) {
  const std::uint64_t chunks = (count + kChunk - 1) / kChunk;
  std::vector<double> partial(chunks * comps, 0.0);
  auto work = [&](std::uint64_t c0, std::uint64_t step) {
    std::vector<double> buf(comps * kChunk);
    std::vector<double> out(comps);
    for (std::uint64_t c = c0; c < chunks; c += step) {
      const std::uint64_t lo = c * kChunk;
      const std::uint64_t hi = std::min(count, lo + kChunk);
      for (std::uint64_t i = lo; i < hi; ++i) {
        const GridPoint gp(first + i * stride, M, tab.c.data(), tab.s.data());
        fn(gp, out.data());
        for (std::size_t k = 0; k < comps; ++k) buf[k * kChunk + (i - lo)] = out[k];
      }
      for (std::size_t k = 0; k < comps; ++k) {
        partial[c * comps + k] = pairwise_sum(std::span<const double>(buf.data() + k * kChunk, hi - lo));
      }
    }
  };
  const unsigned nt = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
  if (nt == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < nt; ++w) pool.emplace_back(work, w, nt);
    for (auto& th : pool) th.join();
  }
  std::vector<double> total(comps);
  std::vector<double> col(chunks);
  for (std::size_t k = 0; k < comps; ++k) {
    for (std::uint64_t c = 0; c < chunks; ++c) col[c] = partial[c * comps + k];
    total[k] = pairwise_sum(col);
  }
  return total;
}

bool settled(double prev, double next, const QuadratureOptions& opts, double scale = 0.0) {
  const double diff = std::abs(next - prev);
  return diff <= opts.tol * std::max(std::abs(next), scale) || diff <= opts.abs_tol;
}

}  // namespace

double GridPoint::t() const {
  return 2.0 * std::numbers::pi * static_cast<double>(j_) / static_cast<double>(M_);
}

double QuadratureResult::max_error() const {
  double e = 0.0;
  for (double x : errors) e = std::max(e, x);
  return e;
}

QuadratureResult integrate_periodic(const GridIntegrand& fn, std::size_t comps,
                                    const QuadratureOptions& opts) {
  if (comps == 0) throw Error(ErrorKind::InvalidArgument, "no integrand components");
  std::uint64_t M = std::max<std::uint64_t>(opts.min_points, 4);
  QuadratureResult res;
  res.values.assign(comps, 0.0);
  res.errors.assign(comps, INFINITY);

  Table tab = make_table(M);
  std::vector<double> sum = grid_sum(fn, comps, M, 0, 1, M, tab, opts.threads);
  std::vector<double> est(comps);
  for (std::size_t k = 0; k < comps; ++k) est[k] = sum[k] / static_cast<double>(M);

  while (true) {
    if (2 * M > opts.max_points) {
      res.values = est;
      res.points = M;
      res.converged = false;
      return res;
    }
    const std::uint64_t M2 = 2 * M;
    tab = make_table(M2);
    const std::vector<double> odd = grid_sum(fn, comps, M2, 1, 2, M, tab, opts.threads);
    // Components share one scale so a cancelling one (a Fourier coefficient
    // near zero) settles against its companions.
    std::vector<double> next(comps);
    double scale = 0.0;
    for (std::size_t k = 0; k < comps; ++k) {
      sum[k] += odd[k];
      next[k] = sum[k] / static_cast<double>(M2);
      scale = std::max(scale, std::abs(next[k]));
    }
    bool done = true;
    for (std::size_t k = 0; k < comps; ++k) {
      res.errors[k] = std::abs(next[k] - est[k]);
      done = done && settled(est[k], next[k], opts, scale);
      est[k] = next[k];
    }
    M = M2;
    if (done) break;
  }
  res.values = est;
  res.points = M;
  res.converged = true;
  return res;
}

QuadratureResult integrate_torus2(const std::function<double(double, double)>& fn,
                                  const QuadratureOptions& opts) {
  std::uint64_t M = std::max<std::uint64_t>(8, static_cast<std::uint64_t>(
                                                   std::ceil(std::sqrt(static_cast<double>(opts.min_points)))));
  auto level = [&](std::uint64_t m) {
    std::vector<double> rows(m);
    std::vector<double> row(m);
    const double h = 2.0 * std::numbers::pi / static_cast<double>(m);
    for (std::uint64_t a = 0; a < m; ++a) {
      for (std::uint64_t b = 0; b < m; ++b) row[b] = fn(h * static_cast<double>(a), h * static_cast<double>(b));
      rows[a] = pairwise_sum(row);
    }
    return pairwise_sum(rows) / static_cast<double>(m * m);
  };
  QuadratureResult res;
  double est = level(M);
  res.errors = {INFINITY};
  while (true) {
    if ((2 * M) * (2 * M) > opts.max_points) {
      res.values = {est};
      res.points = M * M;
      return res;
    }
    M *= 2;
    const double next = level(M);
    res.errors[0] = std::abs(next - est);
    const bool done = settled(est, next, opts);
    est = next;
    if (done) break;
  }
  res.values = {est};
  res.points = M * M;
  res.converged = true;
  return res;
}

QuadratureResult integrate_endpoint_smoothed(const std::function<double(double)>& fn,
                                             const QuadratureOptions& opts) {
  // psi(u) = u - sin(2 pi u)/(2 pi) maps [0,1] onto itself with psi'(0) = psi'(1) = 0
  auto psi = [](double u) { return u - std::sin(2.0 * std::numbers::pi * u) / (2.0 * std::numbers::pi); };
  auto dpsi = [](double u) { return 1.0 - std::cos(2.0 * std::numbers::pi * u); };
  const GridIntegrand g = [&](const GridPoint& gp, double* out) {
    const double u = gp.t() / (2.0 * std::numbers::pi);
    const double v = psi(u);
    const double x = psi(v);
    const double jac = dpsi(u) * dpsi(v);
    out[0] = jac == 0.0 ? 0.0 : fn(x) * jac;
  };
  return integrate_periodic(g, 1, opts);
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::uint64_t kCellChunk = 512;

// One Gauss-Kronrod 7/15 panel with the QUADPACK (qk15) error heuristic.
// The raw |G7 - K15| bounds the Gauss result, not the Kronrod one we keep.
template <class F>
double gk15(F& f, double a, double b, double* err) {
  namespace bq = boost::math::quadrature;
  static const auto& x = bq::gauss_kronrod<double, 15>::abscissa();
  static const auto& wk = bq::gauss_kronrod<double, 15>::weights();
  static const auto& wg = bq::gauss<double, 7>::weights();
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fv[15];
  fv[0] = f(c);
  for (std::size_t i = 1; i < 8; ++i) {
    fv[2 * i - 1] = f(c - h * x[i]);
    fv[2 * i] = f(c + h * x[i]);
  }
  double k = wk[0] * fv[0], g = wg[0] * fv[0], abs_sum = wk[0] * std::abs(fv[0]);
  for (std::size_t i = 1; i < 8; ++i) {
    const double pair = fv[2 * i - 1] + fv[2 * i];
    k += wk[i] * pair;
    if (i % 2 == 0) g += wg[i / 2] * pair;
    abs_sum += wk[i] * (std::abs(fv[2 * i - 1]) + std::abs(fv[2 * i]));
  }
  const double mean = 0.5 * k;
  double asc = wk[0] * std::abs(fv[0] - mean);
  for (std::size_t i = 1; i < 8; ++i) asc += wk[i] * (std::abs(fv[2 * i - 1] - mean) + std::abs(fv[2 * i] - mean));
  double e = std::abs((k - g) * h);
  asc *= h;
  if (asc != 0.0 && e != 0.0) e = asc * std::min(1.0, std::pow(200.0 * e / asc, 1.5));
  *err = std::max(e, 50.0 * std::numeric_limits<double>::epsilon() * abs_sum * h);
  return k * h;
}

struct CellTotals {
  double value = 0.0;
  double error = 0.0;     ///< all pieces
  std::uint64_t evals = 0;
};

// Cells [lo, hi) of an M-cell partition of [0, 2 pi).
CellTotals kinked_cells(const KinkedIntegrand& f, std::uint64_t M, std::uint64_t lo, std::uint64_t hi) {
  constexpr int kProbes = 4;  // interior samples per cell for locating sign changes
  const std::size_t K = f.kinks;
  const int q = std::max(1, f.kink_stretch);
  std::vector<double> g((kProbes + 2) * K), scratch(K), vals;
  vals.reserve(hi - lo);
  CellTotals tot;
  std::uint64_t evals = 0;
  auto value = [&](double t) {
    ++evals;
    return f.value(t);
  };
  // piece [x0, x1] with a kink at `at` (x0 or x1), integrated in u with x = at + h u^q
  auto stretched = [&](double at, double other, double* err) {
    const double h = other - at;
    auto F = [&](double u) {
      const double uq1 = q == 2 ? u : u * u * u;
      return value(at + h * uq1 * u) * q * uq1;
    };
    const double v = gk15(F, 0.0, 1.0, err);
    *err *= std::abs(h);
    return v * std::abs(h);
  };
  auto node = [M](std::uint64_t j) { return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(M); };
  std::vector<double> xs(kProbes + 2), cuts;
  if (K) f.kink_values(node(lo), g.data());
  for (std::uint64_t j = lo; j < hi; ++j) {
    const double a = node(j), b = node(j + 1);
    cuts.assign({a});
    bool left_zero = false, right_zero = false;
    if (K) {
      for (int s = 0; s <= kProbes + 1; ++s) xs[s] = a + (b - a) * s / (kProbes + 1);
      xs[kProbes + 1] = b;
      for (int s = 1; s <= kProbes + 1; ++s) f.kink_values(xs[s], &g[s * K]);
      for (std::size_t k = 0; k < K; ++k) {
        left_zero = left_zero || g[k] == 0.0;
        right_zero = right_zero || g[(kProbes + 1) * K + k] == 0.0;
        for (int s = 0; s <= kProbes; ++s) {
          const double gl = g[s * K + k], gr = g[(s + 1) * K + k];
          if (gl == 0.0 || gr == 0.0 || (gl > 0.0) == (gr > 0.0)) {
            if (gr == 0.0 && s < kProbes) cuts.push_back(xs[s + 1]);
            continue;
          }
          auto gk = [&](double t) {
            f.kink_values(t, scratch.data());
            return scratch[k];
          };
          std::uintmax_t iters = 64;
          const auto br = boost::math::tools::toms748_solve(gk, xs[s], xs[s + 1], gl, gr,
                                                            boost::math::tools::eps_tolerance<double>(50), iters);
          cuts.push_back(0.5 * (br.first + br.second));
        }
      }
      std::sort(cuts.begin() + 1, cuts.end());
      cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    }
    cuts.push_back(b);
    double cell = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double x0 = cuts[i], x1 = cuts[i + 1];
      if (!(x1 > x0)) continue;
      const bool kink_left = i > 0 || left_zero;
      const bool kink_right = i + 2 < cuts.size() || right_zero;
      double err = 0.0, e2 = 0.0;
      if (q == 1 || (!kink_left && !kink_right)) {
        cell += gk15(value, x0, x1, &err);
      } else if (kink_left && kink_right) {
        const double mid = 0.5 * (x0 + x1);
        cell += stretched(x0, mid, &err) + stretched(x1, mid, &e2);
      } else {
        cell += kink_left ? stretched(x0, x1, &err) : stretched(x1, x0, &err);
      }
      tot.error += err + e2;
    }
    vals.push_back(cell);
    std::copy(g.begin() + (kProbes + 1) * K, g.end(), g.begin());
  }
  tot.value = pairwise_sum(vals);
  tot.evals = evals;
  return tot;
}

}  // namespace

QuadratureResult integrate_kinked(const KinkedIntegrand& f, std::int64_t degree, const QuadratureOptions& opts) {
  if (!f.value) throw Error(ErrorKind::InvalidArgument, "kinked integrand needs a value function");
  std::uint64_t M = 64;
  // two cells per shortest period keep each panel within half a wave
  while (M < opts.min_points / 8 || M < 2 * static_cast<std::uint64_t>(std::max<std::int64_t>(degree, 1))) M *= 2;
  QuadratureResult res;
  res.values.assign(1, 0.0);
  res.errors.assign(1, INFINITY);
  double previous = NAN;
  int levels = 0;
  while (true) {
    const std::uint64_t chunks = (M + kCellChunk - 1) / kCellChunk;
    std::vector<CellTotals> part(chunks);
    auto work = [&](std::uint64_t c0, std::uint64_t step) {
      for (std::uint64_t c = c0; c < chunks; c += step) {
        part[c] = kinked_cells(f, M, c * kCellChunk, std::min(M, (c + 1) * kCellChunk));
      }
    };
    const unsigned nt = std::max(1U, std::min<unsigned>(opts.threads, static_cast<unsigned>(chunks)));
    if (nt == 1) {
      work(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < nt; ++w) pool.emplace_back(work, w, nt);
      for (auto& th : pool) th.join();
    }
    std::vector<double> v(chunks);
    double err = 0.0;
    std::uint64_t evals = 0;
    for (std::uint64_t c = 0; c < chunks; ++c) {
      v[c] = part[c].value;
      err += part[c].error;
      evals += part[c].evals;
    }
    const double scale = 1.0 / (2.0 * std::numbers::pi);
    res.values[0] = pairwise_sum(v) * scale;
    // Summed panel estimates are loose; once two independent partitions
    // exist their difference stands in for the error.
    res.errors[0] = err * scale;
    if (!std::isnan(previous)) res.errors[0] = std::min(res.errors[0], std::abs(res.values[0] - previous));
    previous = res.values[0];
    ++levels;
    res.points += evals;
    if (res.errors[0] <= opts.tol * std::abs(res.values[0]) || res.errors[0] <= opts.abs_tol) {
      res.converged = true;
      return res;
    }
    // each cell costs at least 15 evaluations; a second level always runs,
    // since only the level difference gives a tight estimate
    if (32 * M > opts.max_points && levels >= 2) {
      res.converged = false;
      return res;
    }
    M *= 2;
  }
}

}  // namespace rieszlab
