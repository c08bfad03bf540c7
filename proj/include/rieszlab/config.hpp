#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <json.hpp>

#include "rieszlab/lacunary.hpp"
#include "rieszlab/trigpoly.hpp"

namespace rieszlab {

struct SequenceSpec {
  std::int64_t base = 1;
  Rational ratio{3};
  std::size_t length = 6;
  std::optional<std::vector<std::int64_t>> modes;

  LacunarySeq build() const;
};

enum class CoefficientKind { Explicit, SignSweep, Random };

struct CoefficientSpec {
  CoefficientKind kind = CoefficientKind::SignSweep;
  std::size_t dim = 3;       ///< random sets only
  std::uint64_t count = 16;  ///< random sets only
  std::vector<Eigen::MatrixXd> values;  ///< explicit sets, one column per v_k
};

/// Every field except command has a default.
struct RunConfig {
  std::string command;  ///< riesz, norms, verify, estimate-constants, counterexample, montecarlo, transfer
  std::string target = "all";  ///< statement id for verify
  SequenceSpec sequence;
  std::vector<double> p_list{1.0, 1.5, 2.0, 3.0, 4.0};
  std::vector<std::int64_t> d_list{3, 4, 5};
  std::size_t N = 5;
  CoefficientSpec coefficients;
  ENorm e_norm = ENorm::L2;
  double tol = 1e-10;
  std::uint64_t search_budget = 200;
  std::uint64_t budget_ms = 0;  ///< 0 means unlimited
  std::uint64_t seed = 1;
  unsigned threads = 1;
  int p_even = 4;
  int k_max = 3;
  int q = 4;
  std::uint64_t samples = 100000;
  std::size_t psi_samples = 10;
  std::filesystem::path out = "out";
};

const std::vector<std::string>& command_names();

/// Validates and converts; throws ConfigInvalid on unknown keys, wrong types
/// or out-of-range values.
RunConfig parse_config(const nlohmann::json& j);
/// Reads and parses a JSON file; malformed JSON is ConfigInvalid.
nlohmann::json load_config_file(const std::filesystem::path& path);

/// Coefficient sets with N+1 columns drawn from the spec.
std::vector<Eigen::MatrixXd> coefficient_sets(const CoefficientSpec& spec, std::size_t N, std::uint64_t seed);

/// Runs the suite, writes results.jsonl, summary.csv and suite tables under
/// cfg.out, and returns 0 (all pass) or 1 (some check failed). Config errors
/// raise ConfigInvalid before anything is written.
int run_config(const RunConfig& cfg, std::ostream& log);

}  // namespace rieszlab
