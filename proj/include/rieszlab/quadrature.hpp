#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace rieszlab {

struct QuadratureOptions {
  double tol = 1e-10;       ///< relative change between successive levels
  double abs_tol = 1e-300;  ///< absolute change accepted for tiny integrals
  std::uint64_t min_points = 64;
  std::uint64_t max_points = std::uint64_t{1} << 24;
  unsigned threads = 1;
};

/// Node t_j = 2 pi j / M of an M-point grid. cos(n t_j) and sin(n t_j) come
/// from a table indexed by n j mod M, so large frequencies lose no accuracy.
class GridPoint {
 public:
  GridPoint(std::uint64_t j, std::uint64_t M, const double* cos_table, const double* sin_table)
      : j_(j), M_(M), cos_(cos_table), sin_(sin_table) {}

  double t() const;
  std::uint64_t index() const { return j_; }
  std::uint64_t size() const { return M_; }
  double cos_n(std::int64_t n) const { return cos_[reduce(n)]; }
  double sin_n(std::int64_t n) const { return sin_[reduce(n)]; }

 private:
  std::uint64_t reduce(std::int64_t n) const {
    const auto r = static_cast<__int128>(n) * static_cast<__int128>(j_) % static_cast<__int128>(M_);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<__int128>(M_) : r);
  }

  std::uint64_t j_;
  std::uint64_t M_;
  const double* cos_;
  const double* sin_;
};

/// Writes `components` integrand values at the node into `out`.
using GridIntegrand = std::function<void(const GridPoint&, double* out)>;

struct QuadratureResult {
  std::vector<double> values;  ///< integrals against dm = dt / 2 pi
  std::vector<double> errors;  ///< last level-to-level change per component
  std::uint64_t points = 0;
  bool converged = false;

  double max_error() const;
};

/// Periodic trapezoid rule with point doubling until every component changes
/// by less than tol (relative) or abs_tol. Sums are pairwise over fixed
/// 4096-point chunks, so results do not depend on the thread count.
QuadratureResult integrate_periodic(const GridIntegrand& fn, std::size_t components,
                                    const QuadratureOptions& opts);

/// Trapezoid on the 2-torus with doubling in both axes.
QuadratureResult integrate_torus2(const std::function<double(double, double)>& fn,
                                  const QuadratureOptions& opts);

/// Integral over [0, 1] of an integrand with algebraic endpoint singularities,
/// via a twice-composed sin^2 substitution followed by the doubling trapezoid.
QuadratureResult integrate_endpoint_smoothed(const std::function<double(double)>& fn,
                                             const QuadratureOptions& opts);

/// cos(n t) with the rounding error of the product n t folded back in.
inline double cos_mul(std::int64_t n, double t) {
  const double nd = static_cast<double>(n);
  const double x = nd * t;
  const double e = std::fma(nd, t, -x);
  return std::cos(x) - e * std::sin(x);
}

/// sin(n t), same correction.
inline double sin_mul(std::int64_t n, double t) {
  const double nd = static_cast<double>(n);
  const double x = nd * t;
  const double e = std::fma(nd, t, -x);
  return std::sin(x) + e * std::cos(x);
}

/// A periodic integrand that is smooth except where one of the kink
/// functions changes sign (|g|, max, and powers of them).
struct KinkedIntegrand {
  std::function<double(double)> value;
  std::size_t kinks = 0;
  std::function<void(double, double*)> kink_values;  ///< writes `kinks` values
  /// q >= 2: pieces next to a kink are integrated in u with x = kink + h u^q,
  /// which smooths |x - kink|^p; q = 1 when the integrand is analytic up to kinks.
  int kink_stretch = 4;
};

/// Integral against dt / 2 pi of a kinked integrand whose pieces are
/// trigonometric of degree <= `degree`. The circle is cut into at least
/// 2 degree cells; sign changes of the kink functions at the nodes and at
/// four interior probes are located and split the cell. Every piece gets one
/// 15-point Gauss-Kronrod panel, stretched next to a kink. Cells double until
/// the error estimate meets tol: summed panel errors, then the change between
/// levels. Two kinks between adjacent probes are not split; they show up in
/// the error estimate instead.
QuadratureResult integrate_kinked(const KinkedIntegrand& f, std::int64_t degree, const QuadratureOptions& opts);

}  // namespace rieszlab
