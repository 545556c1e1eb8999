#pragma once

// Run configuration and machine-readable verification reports.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lacunary/identities.hpp"

namespace lacunary {

enum class ModeFilter { Exact, Numeric, All };
enum class ReportFormat { Json, Csv };

struct RunConfig {
  std::vector<std::string> ids;  // empty together with all = true selects every case
  bool all = false;
  ModeFilter mode = ModeFilter::All;
  std::optional<int> nmax;
  std::optional<double> tolerance;
  std::uint64_t seed = 7;
  std::optional<int> max_points;
  std::optional<std::string> report_path;
  ReportFormat format = ReportFormat::Json;
  bool timestamp = true;
  std::optional<std::string> mutate;  // id whose right-hand side is negated
};

std::string_view mode_filter_name(ModeFilter m);
std::string_view format_name(ReportFormat f);

/// Reads a JSON object with the RunConfig keys (ids, all, mode, nmax, tol,
/// seed, max_points, report, format, timestamp, mutate). Throws ConfigError.
RunConfig parse_run_config(const std::string& json_text, RunConfig base = {});

/// Runs every selected check. Cases run concurrently; the result is ordered
/// by registry position, then mode. Throws NotFound / ConfigError.
std::vector<VerificationReport> run_verification(const RunConfig& cfg);

/// `timestamp` empty means the field is written as null.
void write_json(std::ostream& os, const std::vector<VerificationReport>& reports, const RunConfig& cfg,
                const std::string& timestamp);
void write_csv(std::ostream& os, const std::vector<VerificationReport>& reports);

/// %.17g, with non-finite values as "null" (JSON) or empty (CSV).
std::string format_number(double v);

}  // namespace lacunary
