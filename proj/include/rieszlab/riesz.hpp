#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "rieszlab/lacunary.hpp"
#include "rieszlab/trigpoly.hpp"

namespace rieszlab {

/// Factor choices h_j in a weight g(t) = prod_j h_j(n_j t).
enum class WeightChoice { One, HalfPhi, OneMinusHalfPhi };

const char* to_string(WeightChoice c);
WeightChoice parse_weight_choice(const std::string& text);

struct WeightSpec {
  int k = 1;
  int l = 0;
  double p = 1.0;
  std::vector<WeightChoice> choices;

  /// Throws InvalidArgument on k < 1, p < 1 or a choice list of the wrong length.
  void validate() const;
  bool integer_power() const;
};

/// X_n(t) = 1 + cos(n t), exact.
TrigPoly riesz_factor(std::int64_t n);

/// R_N = prod_{j<=N} (1 + cos n_j t) in exact mode. R_0 = 1.
TrigPoly riesz_product(const LacunarySeq& seq, std::size_t N, const ArithmeticBudget& budget = {});

/// prod_{j<=N} (1 + cos(n_j t + psi_j)) in float mode.
TrigPoly riesz_shifted(const LacunarySeq& seq, std::size_t N, const std::vector<double>& psi,
                       const ArithmeticBudget& budget = {});

/// prod_{j<=N} (1 + cos(n_j t + psi_j)/2), float mode.
TrigPoly half_riesz_shifted(const LacunarySeq& seq, std::size_t N, const std::vector<double>& psi);

/// R_{l,N} = X_l ... X_N with 1-based l.
TrigPoly partial_product(const LacunarySeq& seq, std::size_t l, std::size_t N,
                         const ArithmeticBudget& budget = {});

/// phi_k(t) = ((1 - cos t)/2)^k, exact.
TrigPoly phi_k(int k);
/// Pointwise phi_k(t).
double phi_value(int k, double t);

/// Pointwise value of a single factor h(x) for the given choice.
double weight_factor(WeightChoice c, int k, double p, double x);
/// g(t) = prod_{j<=l} h_j(n_j t).
double weight_eval(const WeightSpec& spec, const LacunarySeq& seq, double t);
/// The weight as an exact polynomial; requires p to be an integer.
TrigPoly weight_poly(const WeightSpec& spec, const LacunarySeq& seq);

/// Coordinate i is sum_k coeffs(i, k) R_k for k = 0..N; coeffs has N+1 columns.
VecTrigPoly weighted_sum(const Eigen::MatrixXd& coeffs, const LacunarySeq& seq, std::size_t N,
                         ENorm e_norm = ENorm::L2, const ArithmeticBudget& budget = {});

}  // namespace rieszlab
