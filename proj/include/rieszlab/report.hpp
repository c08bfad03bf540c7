#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "rieszlab/ledger.hpp"
#include "rieszlab/moments.hpp"
#include "rieszlab/verify.hpp"

namespace rieszlab {

enum class ReportFormat { Csv, Jsonl };

/// %.17g, with "inf", "-inf" and "nan" spelled out.
std::string format_double(double x);

nlohmann::json to_json(const CheckResult& r);
nlohmann::json to_json(const MomentReport& m);
nlohmann::json to_json(const LedgerEntry& e);
nlohmann::json to_json(const ConstantEstimate& e);
nlohmann::json to_json(const TrigPoly& f);
nlohmann::json to_json(const LacunarySeq& seq);

/// Header plus one row per result: statement_id, instance_hash, lhs, rhs,
/// margin, pass, method, seed. lhs and rhs print as "num/2^k" when exact.
std::string csv_summary(const std::vector<CheckResult>& results);
/// One JSON object per line.
std::string jsonl_results(const std::vector<CheckResult>& results);

/// Writes the results in the given format. Empty results raise
/// InvalidArgument before any file is touched; write errors raise IoFailure.
void emit_report(const std::vector<CheckResult>& results, ReportFormat format,
                 const std::filesystem::path& path);

/// Minimal CSV writer for auxiliary tables (ledger, estimates, curves).
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

/// Writes text to path, raising IoFailure on error.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace rieszlab
