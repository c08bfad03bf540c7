#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "rieszlab/lacunary.hpp"
#include "rieszlab/moments.hpp"
#include "rieszlab/riesz.hpp"
#include "rieszlab/trigpoly.hpp"

namespace rieszlab {

/// Real polynomial of degree n on [a, b] stored in Bernstein form
///   P(x) = shift + sum_k values[k] C(n,k) s^k (1-s)^(n-k),  s = (x-a)/(b-a).
/// Evaluation sums binomial probabilities from a log-binomial table, which
/// stays accurate at degrees where monomial coefficients are useless.
class BernsteinPoly {
 public:
  BernsteinPoly() = default;
  BernsteinPoly(std::vector<double> values, double a, double b, double shift = 0.0);

  int degree() const { return static_cast<int>(values_.size()) - 1; }
  double lower() const { return a_; }
  double upper() const { return b_; }
  double shift() const { return shift_; }
  const std::vector<double>& values() const { return values_; }
  double operator()(double x) const;
  /// Monomial coefficients c_0..c_n in x (ill-conditioned beyond degree ~40).
  Eigen::VectorXd monomial_coefficients() const;

 private:
  std::vector<double> values_;
  std::vector<double> log_binom_;
  double a_ = 0.0;
  double b_ = 1.0;
  double shift_ = 0.0;
};

/// f_p(t) = (1 - t^p / 2)^(1/p) on [0, 1].
double f_p(double p, double t);

/// ceil(4 / eps^2).
int bernstein_order(double eps);

struct SandwichReport {
  std::uint64_t points = 0;
  double worst_lower = 0.0;  ///< min over the grid of (upper side - lower side), lower inequality
  double worst_upper = 0.0;  ///< same for the upper inequality
  bool holds = false;
};

struct BernsteinApprox {
  BernsteinPoly w;
  double p = 2.0;
  double eps = 0.5;
  SandwichReport sandwich;
  double sup_relative_gap = 0.0;  ///< max over the grid of w / f_p - 1
};

/// w = B_n f_p + 1/(2 sqrt n) with n = ceil(4/eps^2), checked against
/// f_p <= w <= (1+eps) f_p on 10^4 grid points plus endpoints.
BernsteinApprox bernstein_approx(double p, double eps, std::uint64_t grid = 10000);

struct MajorantReport {
  TrigPoly h;
  std::int64_t degree = 0;
  double degree_bound = 0.0;
  SandwichReport sandwich;          ///< g <= h^p <= 2g on the grid (product form)
  double interpolation_error = 0.0; ///< max |factor - w(phi_k)| at oversampled nodes
  double spot_error = 0.0;          ///< max |h(t) - product form| at spot points
};

/// Trigonometric majorant h with g <= h^p <= 2g for a weight of the family.
MajorantReport weight_majorant(const WeightSpec& spec, const LacunarySeq& seq);

/// h evaluated as the product of its factors.
double majorant_product_form(const WeightSpec& spec, const LacunarySeq& seq, double t);

struct WeierstrassReport {
  BernsteinPoly w;        ///< on [0, 2]
  double p = 2.0;
  double eps = 0.0;       ///< target gap used when the search stopped
  double sup_gap = 0.0;   ///< measured sup over the grid of w - x^((p-1)/p)
  double lambda1 = 0.0;
  double lower_envelope = 0.0;
  MomentReport numerator;  ///< int w(X)^p dm
  MomentReport x_p;        ///< int X^p dm
};

/// Polynomial w_p with x^((p-1)/p) <= w_p(x) <= x^((p-1)/p) + eps on [0, 2],
/// built from a shifted Bernstein operator; eps is halved until lambda_1 < 1.
WeierstrassReport weierstrass_wp(double p, double eps = 0.25, double eps_min = 1e-3);

/// (1 + eps)(1 - eps)^((1-p)/p) lambda1.
double lambda2(double p, double lambda1, double eps);

struct LambdaChoice {
  double p = 2.0;
  double lambda1 = 0.0;
  double eps = 0.0;
  double lambda2 = 0.0;
  int grid_index = 0;
};

/// Largest eps on the grid eps0 * 2^-i (i < 60) with lambda2 < 1.
LambdaChoice lambda_constants(double p, double lambda1, double eps0 = 0.5);

}  // namespace rieszlab
