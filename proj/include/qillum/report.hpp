// Text surfaces shared by the command-line tool: grid parsing, CSV and
// gnuplot emission, JSON reports.
#pragma once

#include <filesystem>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qillum/analysis.hpp"

namespace qillum {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::string_view kSweepCsvHeader =
    "eta,d_s,d_i,k_i,h01_closed,h01_direct,p_err,p_err_ci,advantage";

/// 12 significant digits, '.' decimal separator, locale independent.
std::string format_number(double value);

/// Comma-separated items, each a number or an inclusive start:step:stop range.
std::vector<double> parse_real_grid(std::string_view text);
std::vector<std::size_t> parse_dim_grid(std::string_view text);

/// "bell", "uniform-rank:<r>" or "spectrum:<file>"; the file holds a JSON
/// array of non-negative weights.
StateFamily parse_family(std::string_view text);

/// Re-validates the H01 agreement of every record before writing anything.
void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records);
std::string sweep_csv(std::span<const SweepRecord> records);

/// Gnuplot script plotting h01 and p_err against eta, one curve per
/// (d_s, family) configuration.
std::string gnuplot_script(std::span<const SweepRecord> records, const std::string& csv_name);

nlohmann::json to_json(const OptimalityReport& report);
nlohmann::json to_json(const SpectrumProbeReport& report);

/// Validation tolerance, overridable through the QI_TOL environment variable.
double tolerance_from_env();

/// Writes through a sibling temporary file and renames it into place.
void write_file_atomically(const std::filesystem::path& path, std::string_view content);

}  // namespace qillum
