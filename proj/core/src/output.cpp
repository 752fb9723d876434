#include "magnocorr/output.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace magnocorr {

namespace {

std::string entanglement_column(std::size_t pair) {
  const auto [x, y] = kModePairs[pair];
  return fmt::format("E_{}{}", mode_name(x), mode_name(y));
}

std::string steering_column(std::size_t slot) {
  auto [x, y] = kModePairs[slot / 2];
  if (slot % 2 == 1) std::swap(x, y);
  return fmt::format("st_{}_to_{}", mode_name(x), mode_name(y));
}

const std::vector<std::string>& amplitude_columns() {
  static const std::vector<std::string> names{"delta_eff", "G_mb_eff", "m_re", "m_im", "a1_re",
                                              "a1_im",     "a2_re",    "a2_im", "q",   "p"};
  return names;
}

const std::vector<std::string>& diagnostic_columns() {
  static const std::vector<std::string> names{"lyapunov_residual", "physicality"};
  return names;
}

std::string csv_escape(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::optional<double> finite(double v) {
  return std::isfinite(v) ? std::optional<double>(v) : std::nullopt;
}

std::optional<double> column_value(const SweepRecord& r, const std::string& column) {
  if (column == "margin") return finite(r.margin);
  for (std::size_t k = 0; k < 6; ++k) {
    if (column == entanglement_column(k)) return r.entanglement[k];
  }
  for (std::size_t k = 0; k < 12; ++k) {
    if (column == steering_column(k)) return r.steering[k];
  }
  if (column == "lyapunov_residual") return r.stable ? finite(r.lyapunov_residual) : std::nullopt;
  if (column == "physicality") return r.stable ? finite(r.physicality) : std::nullopt;
  if (column == "delta_eff") return r.status == PointStatus::InvalidParams ? std::nullopt : finite(r.delta_eff);
  if (column == "G_mb_eff") return r.status == PointStatus::InvalidParams ? std::nullopt : finite(r.G_mb);
  if (!r.steady_state) return std::nullopt;
  const SteadyState& s = *r.steady_state;
  if (column == "m_re") return s.m_avg.real();
  if (column == "m_im") return s.m_avg.imag();
  if (column == "a1_re") return s.a1_avg.real();
  if (column == "a1_im") return s.a1_avg.imag();
  if (column == "a2_re") return s.a2_avg.real();
  if (column == "a2_im") return s.a2_avg.imag();
  if (column == "q") return s.q_avg;
  if (column == "p") return s.p_avg;
  return std::nullopt;
}

std::string join_warnings(const std::vector<std::string>& warnings) {
  std::string out;
  for (const auto& w : warnings) {
    if (!out.empty()) out += "; ";
    out += w;
  }
  return out;
}

}  // namespace

std::vector<std::string> output_columns(const SweepSpec& spec) {
  std::vector<std::string> known{"margin"};
  for (std::size_t k = 0; k < 6; ++k) known.push_back(entanglement_column(k));
  for (std::size_t k = 0; k < 12; ++k) known.push_back(steering_column(k));
  for (const auto& c : amplitude_columns()) known.push_back(c);
  for (const auto& c : diagnostic_columns()) known.push_back(c);

  std::vector<bool> wanted(known.size(), false);
  auto want = [&](const std::string& name) {
    const auto it = std::find(known.begin(), known.end(), name);
    if (it == known.end()) throw std::invalid_argument("unknown output quantity '" + name + "'");
    wanted[static_cast<std::size_t>(it - known.begin())] = true;
  };
  for (const auto& q : spec.quantities) {
    if (q == "entanglement") {
      for (std::size_t k = 0; k < 6; ++k) want(entanglement_column(k));
    } else if (q == "steering") {
      for (std::size_t k = 0; k < 12; ++k) want(steering_column(k));
    } else if (q == "amplitudes") {
      for (const auto& c : amplitude_columns()) want(c);
    } else if (q == "diagnostics") {
      for (const auto& c : diagnostic_columns()) want(c);
    } else {
      want(q);
    }
  }

  std::vector<std::string> columns;
  for (const Axis& a : spec.axes) columns.push_back(fmt::format("{}[{}]", a.name, to_string(a.unit)));
  columns.emplace_back("stable");
  for (std::size_t i = 0; i < known.size(); ++i) {
    if (wanted[i]) columns.push_back(known[i]);
  }
  columns.emplace_back("status");
  columns.emplace_back("warnings");
  return columns;
}

RecordWriter::RecordWriter(std::ostream& out, const SweepSpec& spec)
    : out_(out), format_(spec.format), columns_(output_columns(spec)), axis_count_(spec.axes.size()) {}

void RecordWriter::write_header() {
  if (format_ != OutputFormat::Csv) return;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) out_ << ',';
    out_ << csv_escape(columns_[i]);
  }
  out_ << '\n';
}

void RecordWriter::write(const SweepRecord& r) {
  const std::size_t last = columns_.size() - 2;  // status, warnings follow
  if (format_ == OutputFormat::Csv) {
    std::string line;
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (i) line += ',';
      if (i < axis_count_) {
        line += fmt::format("{:.17g}", r.axis_values.at(i));
      } else if (i == axis_count_) {
        line += r.stable ? "1" : "0";
      } else if (i < last) {
        if (const auto v = column_value(r, columns_[i])) line += fmt::format("{:.17g}", *v);
      } else if (i == last) {
        line += to_string(r.status);
      } else {
        line += csv_escape(join_warnings(r.warnings));
      }
    }
    out_ << line << '\n';
    return;
  }

  nlohmann::ordered_json j;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    const std::string& c = columns_[i];
    if (i < axis_count_) {
      j[c] = r.axis_values.at(i);
    } else if (i == axis_count_) {
      j[c] = r.stable;
    } else if (i < last) {
      const auto v = column_value(r, c);
      j[c] = v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
    } else if (i == last) {
      j[c] = std::string(to_string(r.status));
    } else {
      j[c] = r.warnings;
    }
  }
  out_ << j.dump() << '\n';
}

}  // namespace magnocorr
