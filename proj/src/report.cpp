#include "rieszlab/report.hpp"

#include <cmath>
#include <fstream>

#include <fmt/format.h>

#include "rieszlab/errors.hpp"

namespace rieszlab {

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string value_cell(double v, const std::optional<Dyadic>& exact) {
  return exact ? exact->to_string() : format_double(v);
}

nlohmann::json number(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", x);
}

nlohmann::json to_json(const CheckResult& r) {
  nlohmann::json j;
  j["statement_id"] = r.statement_id;
  j["instance_hash"] = r.instance_hash();
  j["instance"] = nlohmann::json::parse(r.instance.empty() ? "{}" : r.instance);
  j["lhs"] = number(r.lhs);
  j["rhs"] = number(r.rhs);
  if (r.exact_lhs) j["lhs_exact"] = r.exact_lhs->to_string();
  if (r.exact_rhs) j["rhs_exact"] = r.exact_rhs->to_string();
  j["margin"] = number(r.margin);
  j["tolerance"] = number(r.tolerance);
  j["direction"] = to_string(r.direction);
  j["pass"] = r.pass;
  j["method"] = to_string(r.method);
  j["seed"] = r.seed;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

nlohmann::json to_json(const MomentReport& m) {
  nlohmann::json j;
  j["method"] = to_string(m.method);
  j["value"] = number(m.value);
  j["error_estimate"] = number(m.error_estimate);
  j["points_or_terms"] = m.points_or_terms;
  if (m.exact) j["exact_rational"] = m.exact->to_string();
  j["converged"] = m.converged;
  return j;
}

nlohmann::json to_json(const LedgerEntry& e) {
  nlohmann::json j;
  j["name"] = e.name;
  j["p"] = e.p;
  j["value"] = number(e.value);
  j["tag"] = to_string(e.tag);
  j["provenance"] = e.provenance;
  if (e.eps) j["eps"] = *e.eps;
  return j;
}

nlohmann::json to_json(const ConstantEstimate& e) {
  auto mat = [](const Eigen::MatrixXd& m) {
    nlohmann::json cols = nlohmann::json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      nlohmann::json col = nlohmann::json::array();
      for (Eigen::Index i = 0; i < m.rows(); ++i) col.push_back(m(i, k));
      cols.push_back(col);
    }
    return cols;
  };
  nlohmann::json j;
  j["p"] = e.p;
  j["N"] = e.N;
  j["seq"] = e.seq;
  j["norm"] = to_string(e.e_norm);
  j["empirical_lower"] = number(e.empirical_lower);
  j["empirical_upper"] = number(e.empirical_upper);
  j["argmin"] = mat(e.argmin);
  j["argmax"] = mat(e.argmax);
  j["budget"] = e.budget;
  j["evaluations"] = e.evaluations;
  return j;
}

nlohmann::json to_json(const TrigPoly& f) {
  nlohmann::json terms = nlohmann::json::array();
  if (f.is_exact()) {
    for (const auto& [n, c] : f.exact_terms()) terms.push_back({n, c.real().to_string(), c.imag().to_string()});
  } else {
    for (const auto& [n, c] : f.float_terms()) terms.push_back({n, c.real(), c.imag()});
  }
  return {{"mode", f.is_exact() ? "exact" : "float"}, {"real", f.is_real()}, {"terms", terms}};
}

nlohmann::json to_json(const LacunarySeq& seq) {
  return {{"modes", std::vector<std::int64_t>(seq.modes().begin(), seq.modes().end())},
          {"ratio_floor", seq.ratio_floor().to_string()}};
}

std::string csv_summary(const std::vector<CheckResult>& results) {
  std::string out = "statement_id,instance_hash,lhs,rhs,margin,pass,method,seed\n";
  for (const auto& r : results) {
    out += fmt::format("{},{},{},{},{},{},{},{}\n", csv_cell(r.statement_id), r.instance_hash(),
                       value_cell(r.lhs, r.exact_lhs), value_cell(r.rhs, r.exact_rhs), format_double(r.margin),
                       r.pass ? "true" : "false", to_string(r.method), r.seed);
  }
  return out;
}

std::string jsonl_results(const std::vector<CheckResult>& results) {
  std::string out;
  for (const auto& r : results) out += to_json(r).dump() + "\n";
  return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorKind::IoFailure, "cannot open " + path.string());
  f << text;
  f.close();
  if (!f) throw Error(ErrorKind::IoFailure, "cannot write " + path.string());
}

void emit_report(const std::vector<CheckResult>& results, ReportFormat format,
                 const std::filesystem::path& path) {
  if (results.empty()) throw Error(ErrorKind::InvalidArgument, "no results to report");
  write_text(path, format == ReportFormat::Csv ? csv_summary(results) : jsonl_results(results));
}

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_cell(cells[i]);
    out += "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
  write_text(path, out);
}

}  // namespace rieszlab
