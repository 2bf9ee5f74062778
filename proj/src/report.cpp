#include "qillum/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace qillum {

using nlohmann::json;

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view text) {
  text = trim(text);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw UsageError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

void append_range(std::string_view item, std::vector<double>& out) {
  const auto parts = split(item, ':');
  if (parts.size() == 1) {
    out.push_back(parse_real(parts[0]));
    return;
  }
  if (parts.size() != 3) throw UsageError("range must be start:step:stop, got '" + std::string(item) + "'");
  const double start = parse_real(parts[0]);
  const double step = parse_real(parts[1]);
  const double stop = parse_real(parts[2]);
  if (!(step > 0.0)) throw UsageError("range step must be positive in '" + std::string(item) + "'");
  if (stop < start) throw UsageError("range stop precedes start in '" + std::string(item) + "'");
  // Inclusive of stop within half a step.
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 0.5));
  for (std::size_t k = 0; k <= count; ++k) {
    double value = start + static_cast<double>(k) * step;
    if (std::abs(value - stop) <= 1e-12 * std::max(1.0, std::abs(stop))) value = stop;
    out.push_back(value);
  }
}

}  // namespace

std::vector<double> parse_real_grid(std::string_view text) {
  if (trim(text).empty()) throw UsageError("empty grid");
  std::vector<double> values;
  for (auto item : split(text, ',')) append_range(item, values);
  return values;
}

std::vector<std::size_t> parse_dim_grid(std::string_view text) {
  std::vector<std::size_t> dims;
  for (double v : parse_real_grid(text)) {
    if (v != std::floor(v) || v < 2.0) {
      throw UsageError("dimensions must be integers >= 2, got " + format_number(v));
    }
    dims.push_back(static_cast<std::size_t>(v));
  }
  return dims;
}

StateFamily parse_family(std::string_view text) {
  text = trim(text);
  if (text == "bell") return StateFamily::bell();
  constexpr std::string_view kUniform = "uniform-rank:";
  constexpr std::string_view kSpectrum = "spectrum:";
  if (text.starts_with(kUniform)) {
    const double r = parse_real(text.substr(kUniform.size()));
    if (r != std::floor(r) || r < 1.0) throw UsageError("uniform-rank needs an integer rank >= 1");
    return StateFamily::uniform_rank(static_cast<std::size_t>(r));
  }
  if (text.starts_with(kSpectrum)) {
    const std::string path(text.substr(kSpectrum.size()));
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open spectrum file " + path);
    json j;
    try {
      in >> j;
    } catch (const json::parse_error& e) {
      throw UsageError(path + ": " + e.what());
    }
    if (!j.is_array() || j.empty()) throw UsageError(path + ": expected a JSON array of weights");
    std::vector<double> weights;
    for (const auto& w : j) {
      if (!w.is_number()) throw UsageError(path + ": weights must be numbers");
      weights.push_back(w.get<double>());
    }
    return StateFamily::spectrum(std::move(weights));
  }
  throw UsageError("unknown family '" + std::string(text) +
                   "' (expected bell, uniform-rank:<r> or spectrum:<file>)");
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records) {
  for (const auto& r : records) {
    if (!(std::abs(r.h01_closed - r.h01_direct) < kH01Agreement)) {
      throw NumericalCheckError("refusing to write record with disagreeing H01 routes (closed " +
                                format_number(r.h01_closed) + ", direct " +
                                format_number(r.h01_direct) + ")");
    }
  }
  out << kSweepCsvHeader << '\n';
  for (const auto& r : records) {
    out << format_number(r.eta) << ',' << r.d_s << ',' << r.d_i << ',' << format_number(r.k_i)
        << ',' << format_number(r.h01_closed) << ',' << format_number(r.h01_direct) << ','
        << format_number(r.p_err) << ',' << format_number(r.p_err_ci) << ','
        << format_number(r.advantage) << '\n';
  }
}

std::string sweep_csv(std::span<const SweepRecord> records) {
  std::ostringstream out;
  write_sweep_csv(out, records);
  return out.str();
}

std::string gnuplot_script(std::span<const SweepRecord> records, const std::string& csv_name) {
  // Group by configuration, keeping first-seen order.
  std::vector<std::string> labels;
  std::map<std::string, std::vector<const SweepRecord*>> groups;
  for (const auto& r : records) {
    const std::string label = "d_s=" + std::to_string(r.d_s) + " " + r.family;
    auto [it, inserted] = groups.try_emplace(label);
    if (inserted) labels.push_back(label);
    it->second.push_back(&r);
  }

  std::ostringstream out;
  out << "# h01 and p_err versus eta; data from " << csv_name << "\n";
  for (std::size_t g = 0; g < labels.size(); ++g) {
    auto rows = groups[labels[g]];
    std::stable_sort(rows.begin(), rows.end(),
                     [](const SweepRecord* a, const SweepRecord* b) { return a->eta < b->eta; });
    out << "$cfg" << g << " << EOD\n";
    for (const auto* r : rows) {
      out << format_number(r->eta) << ' ' << format_number(r->h01_direct) << ' '
          << format_number(r->p_err) << '\n';
    }
    out << "EOD\n";
  }
  out << "set multiplot layout 1,2\n"
         "set xlabel 'eta'\n"
         "set key outside bottom center\n";
  const char* panels[2][2] = {{"H01", "2"}, {"Helstrom p_err", "3"}};
  for (const auto& panel : panels) {
    out << "set ylabel '" << panel[0] << "'\n";
    out << "plot";
    for (std::size_t g = 0; g < labels.size(); ++g) {
      out << (g ? ", \\\n    " : " ") << "$cfg" << g << " using 1:" << panel[1]
          << " with linespoints title '" << labels[g] << "'";
    }
    out << '\n';
  }
  out << "unset multiplot\n";
  return out.str();
}

json to_json(const OptimalityReport& report) {
  return json{{"d_s", report.d_s},
              {"d_i", report.d_i},
              {"samples", report.samples},
              {"seed", report.seed},
              {"eta", report.eta},
              {"p0", report.p0},
              {"bell_h01", report.bell_h01},
              {"bell_h01_closed", report.bell_h01_closed},
              {"bell_p_err", report.bell_p_err},
              {"best_sampled_h01", report.best_sampled_h01},
              {"best_sampled_p_err", report.best_sampled_p_err},
              {"margin_h01", report.margin_h01},
              {"margin_p_err", report.margin_p_err},
              {"margin", report.margin()}};
}

json to_json(const SpectrumProbeReport& report) {
  return json{{"d_s", report.d_s},     {"eta", report.eta},
              {"k_target", report.k_target}, {"seed", report.seed},
              {"spectra", report.spectra},   {"p_errors", report.p_errors},
              {"spread", report.spread}};
}

double tolerance_from_env() {
  const char* raw = std::getenv("QI_TOL");
  if (raw == nullptr || *raw == '\0') return kDefaultTolerance;
  const double tol = parse_real(raw);
  if (!(tol > 0.0)) throw UsageError("QI_TOL must be positive");
  return tol;
}

void write_file_atomically(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
      std::filesystem::remove(tmp);
      throw UsageError("failed writing " + path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw UsageError("cannot write " + path.string() + ": " + ec.message());
  }
}

}  // namespace qillum
