#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "rieszlab/dyadic.hpp"
#include "rieszlab/lacunary.hpp"
#include "rieszlab/quadrature.hpp"
#include "rieszlab/riesz.hpp"
#include "rieszlab/trigpoly.hpp"

namespace rieszlab {

enum class Method { PlancherelExact, Quadrature, ProductForm, TensorGrid, MonteCarlo };

const char* to_string(Method m);

struct MomentReport {
  double value = 0.0;
  Method method = Method::Quadrature;
  double error_estimate = 0.0;
  std::uint64_t points_or_terms = 0;
  std::optional<Dyadic> exact;
  bool converged = true;
};

/// Fast evaluation of a polynomial at grid nodes through the node's exact
/// phase table.
class PolyEvaluator {
 public:
  explicit PolyEvaluator(const TrigPoly& f);
  double real_at(const GridPoint& gp) const;
  std::complex<double> at(const GridPoint& gp) const;
  std::int64_t degree() const { return degree_; }

 private:
  std::vector<std::int64_t> freq_;
  std::vector<std::complex<double>> coeff_;
  bool real_ = true;
  std::int64_t degree_ = 0;
};

/// Smallest power-of-two grid with at least max(4 deg, floor) points.
std::uint64_t initial_grid(std::int64_t degree, std::uint64_t floor = 64);

/// int (1 + cos t)^p dm by endpoint-smoothed trapezoid quadrature.
MomentReport x_moment(double p, const QuadratureOptions& opts = {.tol = 1e-14});
/// Exact int X^m dm for integer m, as a dyadic rational.
Dyadic x_moment_exact(unsigned m);

/// int |f|^{2m} dm = sum_n |(f^m)^(n)|^2. Exact mode only.
MomentReport lp_even_exact(const TrigPoly& f, unsigned m, const ArithmeticBudget& budget = {});
/// int ||f||_2^{2m} dm via the exact polynomial S = sum_i f_i^2.
MomentReport lp_even_exact(const VecTrigPoly& f, unsigned m, const ArithmeticBudget& budget = {});

/// int |f|^p dm for a pointwise function of the grid node.
MomentReport lp_quadrature(const std::function<double(const GridPoint&)>& f, double p,
                           const QuadratureOptions& opts);
MomentReport lp_quadrature(const TrigPoly& f, double p, QuadratureOptions opts = {});
MomentReport lp_quadrature(const VecTrigPoly& f, double p, QuadratureOptions opts = {});

/// Pointwise weight at a grid node, using exact phase reduction.
double weight_at(const WeightSpec& spec, const LacunarySeq& seq, const GridPoint& gp);

/// int ||f||^p g dm with g from the weight family.
MomentReport weighted_moment(const VecTrigPoly& f, const WeightSpec& spec, const LacunarySeq& seq,
                             double p, QuadratureOptions opts = {});

/// x_moment(p)^N: the multi-torus mass of the lifted product. Exact for integer p.
MomentReport tilde_norm_product(double p, std::size_t N);

/// int int |F(x, y)|^p dm dm.
MomentReport torus2_norm(const std::function<double(double, double)>& F, double p,
                         const QuadratureOptions& opts = {});

}  // namespace rieszlab
