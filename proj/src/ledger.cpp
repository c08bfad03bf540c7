#include "rieszlab/ledger.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rieszlab/moments.hpp"

namespace rieszlab {

const char* to_string(ConstantTag tag) {
  switch (tag) {
    case ConstantTag::Formula: return "PAPER_FORMULA";
    case ConstantTag::Empirical: return "EMPIRICAL";
    case ConstantTag::Unspecified: return "UNSPECIFIED";
  }
  return "?";
}

void ConstantLedger::record(LedgerEntry e) {
  for (auto& old : entries_) {
    if (old.name == e.name && old.p == e.p) {
      old = std::move(e);
      return;
    }
  }
  entries_.push_back(std::move(e));
}

std::optional<LedgerEntry> ConstantLedger::find(const std::string& name, double p) const {
  for (const auto& e : entries_) {
    if (e.name == name && e.p == p) return e;
  }
  return std::nullopt;
}

std::vector<LedgerEntry> ConstantLedger::sorted() const {
  auto out = entries_;
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.p != b.p ? a.p < b.p : a.name < b.name;
  });
  return out;
}

double upper_C(double p) { return std::pow(16.0 * p, p + 1.0); }
double upper_d(double p) { return 80.0 * p * p; }

double lower_c(double p) {
  if (p <= 2.0) return std::pow((p - 1.0) / 1e13, 1.0 / (p - 1.0));
  return std::pow(10.0, -8.0 * p);
}

double lower_d(double p) {
  if (p <= 2.0) return std::pow(1e12 / (p - 1.0), 3.0 / (p - 1.0));
  return std::pow(10.0, 10.0 * p * p);
}

double C1(double p) { return 64.0 * p * p / (std::numbers::ln2 * std::numbers::ln2); }

double phi_moment(int k, double p) {
  // (1 - cos)/2 and (1 + cos)/2 share a distribution
  const double kp = k * p;
  return x_moment(kp).value * std::pow(2.0, -kp);
}

double alpha_p(int k, double p) { return phi_moment(k, p) / (16.0 * std::pow(3.0, p)); }
double beta_p(int k, double p, double c3) { return 0.5 * c3 * alpha_p(k, p); }

double gamma_p(int k, double p, double C7) {
  return std::pow(16.0 * p * std::pow(3.0, p) * C7, p / (p - 1.0)) * alpha_p(k, p) / k;
}

double c_pj(double gamma, double l2, int j) {
  double s = 0.0;
  for (int i = 0; i < j; ++i) s += std::pow(l2, i);
  return gamma * s;
}

double lambda_upper(double p) {
  const double m = std::ceil(p) - 1.0;
  const double num = std::pow(x_moment(m).value, 1.0 / m);
  const double den = std::pow(x_moment(p).value, 1.0 / p);
  return std::pow(num / den, p - 1.0);
}

double eta_p(double p, double d) { return (1.0 + 2.0 * std::numbers::pi * p / (d - 1.0)) * lambda_upper(p); }

Candidates main_theorem_candidates(double p) {
  if (p == 1.0) return {2e-5, 1.0};
  return {lower_c(p), upper_C(p)};
}

void record_formula_constants(ConstantLedger& ledger, double p, int k) {
  auto put = [&](const std::string& name, double v, const std::string& src) {
    ledger.record({name, p, v, ConstantTag::Formula, src, std::nullopt});
  };
  if (p == 1.0) {
    put("c_p", 2e-5, "lower bound floor for p = 1");
    put("C_p", 1.0, "triangle inequality, p = 1");
    return;
  }
  put("C_p", upper_C(p), "(16p)^(p+1)");
  put("d_p_upper", upper_d(p), "80 p^2");
  put("c_p", lower_c(p), p <= 2.0 ? "((p-1)/1e13)^(1/(p-1))" : "10^(-8p)");
  put("d_p_lower", lower_d(p), p <= 2.0 ? "(1e12/(p-1))^(3/(p-1))" : "10^(10 p^2)");
  put("C1", C1(p), "64 p^2 / ln^2 2");
  put("alpha_p", alpha_p(k, p), "int phi_k^p dm / (16 3^p), k = " + std::to_string(k));
  if (p > 1.0 && std::ceil(p) - 1.0 >= 1.0) {
    put("lambda_p", lambda_upper(p), "((int X^m)^(1/m) / (int X^p)^(1/p))^(p-1), m = ceil(p)-1");
    put("eta_p", eta_p(p, upper_d(p)), "(1 + 2 pi p/(d-1)) lambda_p at d = 80 p^2");
  }
}

}  // namespace rieszlab
