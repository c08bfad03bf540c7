#include "rieszlab/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "rieszlab/errors.hpp"
#include "rieszlab/rng.hpp"

namespace rieszlab {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::ConfigInvalid, what); }

void only_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) invalid(where + " must be an object");
  for (const auto& [k, v] : j.items()) {
    if (!allowed.count(k)) invalid("unknown key '" + k + "' in " + where);
  }
}

template <class T>
T get(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    invalid(std::string("bad type for '") + key + "'");
  }
}

Eigen::MatrixXd matrix_from(const json& cols) {
  if (!cols.is_array() || cols.empty()) invalid("explicit coefficients need a non-empty list of columns");
  std::size_t rows = 0;
  for (const auto& c : cols) {
    if (c.is_number()) {
      rows = std::max<std::size_t>(rows, 1);
    } else if (c.is_array() && !c.empty()) {
      if (rows && rows != c.size() && rows != 1) invalid("coefficient columns differ in length");
      rows = std::max(rows, c.size());
    } else {
      invalid("coefficient column must be a number or a non-empty list");
    }
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const auto& c = cols[k];
    if (c.is_number()) {
      m(0, static_cast<Eigen::Index>(k)) = c.get<double>();
    } else {
      if (c.size() != rows) invalid("coefficient columns differ in length");
      for (std::size_t i = 0; i < rows; ++i) {
        if (!c[i].is_number()) invalid("coefficients must be numbers");
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = c[i].get<double>();
      }
    }
  }
  if (!m.allFinite()) invalid("coefficients must be finite");
  return m;
}

}  // namespace

LacunarySeq SequenceSpec::build() const { return make_sequence(base, ratio, length, modes); }

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"riesz",          "norms",      "verify",  "estimate-constants",
                                              "counterexample", "montecarlo", "transfer"};
  return names;
}

RunConfig parse_config(const json& j) {
  only_keys(j,
            {"command", "target", "sequence", "p_list", "d_list", "N", "coefficients", "norm", "tol",
             "search_budget", "budget_ms", "seed", "threads", "p_even", "k_max", "q", "samples", "psi_samples",
             "out"},
            "config");
  RunConfig c;
  c.command = get<std::string>(j, "command", "");
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), c.command) == names.end()) invalid("unknown command '" + c.command + "'");
  c.target = get<std::string>(j, "target", c.target);

  if (j.contains("sequence")) {
    const auto& s = j.at("sequence");
    only_keys(s, {"base", "ratio", "length", "modes"}, "sequence");
    c.sequence.base = get<std::int64_t>(s, "base", c.sequence.base);
    if (s.contains("ratio")) {
      try {
        const auto& r = s.at("ratio");
        c.sequence.ratio = r.is_string() ? Rational::parse(r.get<std::string>()) : Rational(r.get<std::int64_t>());
      } catch (const std::exception& e) {
        invalid(std::string("bad sequence ratio: ") + e.what());
      }
    }
    c.sequence.length = get<std::size_t>(s, "length", c.sequence.length);
    if (s.contains("modes")) {
      c.sequence.modes = get<std::vector<std::int64_t>>(s, "modes", {});
      c.sequence.length = c.sequence.modes->size();
    }
    if (c.sequence.length < 1 || c.sequence.length > 40) invalid("sequence length must be in [1, 40]");
    try {
      (void)c.sequence.build();
    } catch (const Error& e) {
      invalid(std::string("bad sequence: ") + e.what());
    }
  }

  c.p_list = get<std::vector<double>>(j, "p_list", c.p_list);
  if (c.p_list.empty()) invalid("p_list must be non-empty");
  for (double p : c.p_list)
    if (!(p >= 1.0 && p <= 64.0)) invalid("every p must lie in [1, 64]");
  c.d_list = get<std::vector<std::int64_t>>(j, "d_list", c.d_list);
  for (auto d : c.d_list)
    if (d < 2) invalid("every d must be >= 2");
  c.N = get<std::size_t>(j, "N", c.N);
  if (c.N > 40) invalid("N must be <= 40");

  if (j.contains("coefficients")) {
    const auto& s = j.at("coefficients");
    only_keys(s, {"kind", "dim", "count", "values"}, "coefficients");
    const auto kind = get<std::string>(s, "kind", "sign-sweep");
    if (kind == "explicit") {
      c.coefficients.kind = CoefficientKind::Explicit;
      if (!s.contains("values") || !s.at("values").is_array() || s.at("values").empty()) {
        invalid("explicit coefficients need 'values'");
      }
      for (const auto& set : s.at("values")) c.coefficients.values.push_back(matrix_from(set));
    } else if (kind == "sign-sweep") {
      c.coefficients.kind = CoefficientKind::SignSweep;
    } else if (kind == "random") {
      c.coefficients.kind = CoefficientKind::Random;
    } else {
      invalid("coefficients.kind must be explicit, sign-sweep or random");
    }
    c.coefficients.dim = get<std::size_t>(s, "dim", c.coefficients.dim);
    c.coefficients.count = get<std::uint64_t>(s, "count", c.coefficients.count);
    if (c.coefficients.dim < 1 || c.coefficients.dim > 64) invalid("coefficients.dim must be in [1, 64]");
  }

  try {
    c.e_norm = parse_enorm(get<std::string>(j, "norm", to_string(c.e_norm)));
  } catch (const Error&) {
    invalid("norm must be l1, l2 or linf");
  }
  c.tol = get<double>(j, "tol", c.tol);
  if (!(c.tol > 0.0 && c.tol < 1.0)) invalid("tol must be in (0, 1)");
  c.search_budget = get<std::uint64_t>(j, "search_budget", c.search_budget);
  if (c.search_budget < 1) invalid("search_budget must be >= 1");
  c.budget_ms = get<std::uint64_t>(j, "budget_ms", c.budget_ms);
  c.seed = get<std::uint64_t>(j, "seed", c.seed);
  c.threads = get<unsigned>(j, "threads", c.threads);
  if (c.threads < 1 || c.threads > 256) invalid("threads must be in [1, 256]");
  c.p_even = get<int>(j, "p_even", c.p_even);
  if (c.p_even < 4 || c.p_even % 2) invalid("p_even must be an even integer >= 4");
  c.k_max = get<int>(j, "k_max", c.k_max);
  if (c.k_max < 1 || c.k_max > 6) invalid("k_max must be in [1, 6]");
  c.q = get<int>(j, "q", c.q);
  if (c.q < 4 || c.q % 2) invalid("q must be an even integer >= 4");
  c.samples = get<std::uint64_t>(j, "samples", c.samples);
  if (c.samples < 1) invalid("samples must be >= 1");
  c.psi_samples = get<std::size_t>(j, "psi_samples", c.psi_samples);
  c.out = get<std::string>(j, "out", c.out.string());
  return c;
}

json load_config_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) invalid("cannot read config " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    invalid(std::string("malformed config: ") + e.what());
  }
}

std::vector<Eigen::MatrixXd> coefficient_sets(const CoefficientSpec& spec, std::size_t N, std::uint64_t seed) {
  const auto cols = static_cast<Eigen::Index>(N + 1);
  std::vector<Eigen::MatrixXd> out;
  switch (spec.kind) {
    case CoefficientKind::Explicit:
      for (const auto& m : spec.values) {
        if (m.cols() == cols) out.push_back(m);
      }
      break;
    case CoefficientKind::SignSweep:
      if (N > 12) throw Error(ErrorKind::TooLarge, "sign sweeps need N <= 12");
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N); ++mask) {
        Eigen::MatrixXd m(1, cols);
        m(0, 0) = 1.0;
        for (std::size_t k = 1; k <= N; ++k) m(0, static_cast<Eigen::Index>(k)) = (mask >> (k - 1)) & 1 ? -1.0 : 1.0;
        out.push_back(m);
      }
      break;
    case CoefficientKind::Random:
      for (std::uint64_t i = 0; i < spec.count; ++i) {
        const CounterRng rng(seed, 0x5e75'0000ULL + i);
        Eigen::MatrixXd m(static_cast<Eigen::Index>(spec.dim), cols);
        std::uint64_t draw = 0;
        for (Eigen::Index k = 0; k < cols; ++k)
          for (Eigen::Index r = 0; r < m.rows(); ++r) m(r, k) = rng.normal(draw++);
        out.push_back(m);
      }
      break;
  }
  return out;
}

}  // namespace rieszlab
