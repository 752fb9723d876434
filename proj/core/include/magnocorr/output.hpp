#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "magnocorr/sweep.hpp"

namespace magnocorr {

/// Column names for a spec, in fixed order: axes (`name[unit]`), `stable`,
/// then the requested subset of margin, E_<pair>, st_<from>_to_<to>,
/// steady-state amplitudes and diagnostics, then `status` and `warnings`.
/// Quantity groups: margin, entanglement, steering, amplitudes, diagnostics.
/// Throws std::invalid_argument for an unknown quantity.
std::vector<std::string> output_columns(const SweepSpec& spec);

/// Streams records as CSV (17 significant digits, empty field for null) or
/// JSON lines (null for null). Output depends only on the records, so equal
/// sweeps give byte-identical files.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, const SweepSpec& spec);

  /// CSV header row; no-op for JSON lines.
  void write_header();
  void write(const SweepRecord& record);

 private:
  std::ostream& out_;
  OutputFormat format_;
  std::vector<std::string> columns_;
  std::size_t axis_count_;
};

}  // namespace magnocorr
