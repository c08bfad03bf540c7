#pragma once

#include <optional>
#include <string>
#include <vector>

namespace rieszlab {

enum class ConstantTag { Formula, Empirical, Unspecified };

const char* to_string(ConstantTag tag);

struct LedgerEntry {
  std::string name;
  double p = 0.0;
  double value = 0.0;
  ConstantTag tag = ConstantTag::Unspecified;
  /// Formula text for Formula; instance family and search budget for Empirical.
  std::string provenance;
  std::optional<double> eps;
};

/// Per-p record of the constants the proofs use.
class ConstantLedger {
 public:
  /// Replaces an entry with the same (name, p).
  void record(LedgerEntry e);
  const std::vector<LedgerEntry>& entries() const { return entries_; }
  std::optional<LedgerEntry> find(const std::string& name, double p) const;
  /// Entries sorted by (p, name).
  std::vector<LedgerEntry> sorted() const;

 private:
  std::vector<LedgerEntry> entries_;
};

// Explicit constants.
double upper_C(double p);        ///< (16p)^(p+1), p > 1
double upper_d(double p);        ///< 80 p^2
double lower_c(double p);        ///< ((p-1)/1e13)^(1/(p-1)) on (1,2], 10^(-8p) above
double lower_d(double p);        ///< (1e12/(p-1))^(3/(p-1)) on (1,2], 10^(10p^2) above; may be inf
double C1(double p);             ///< 64 p^2 / ln^2 2
double phi_moment(int k, double p);  ///< int phi_k^p dm
double alpha_p(int k, double p);
double beta_p(int k, double p, double c3);
double gamma_p(int k, double p, double C7);
double c_pj(double gamma, double lambda2, int j);
/// ((int X^m)^(1/m) / (int X^p)^(1/p))^(p-1) with m = ceil(p) - 1.
double lambda_upper(double p);
double eta_p(double p, double d);

/// Candidate constants for the two-sided bound: (c, C).
struct Candidates {
  double lower;
  double upper;
};
Candidates main_theorem_candidates(double p);

/// Fills the formula-backed entries for p.
void record_formula_constants(ConstantLedger& ledger, double p, int k);

}  // namespace rieszlab
