// Command reports: a single JSON object per run, written atomically.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conjulin/conjsys.hpp"
#include "conjulin/embedding.hpp"
#include "conjulin/types.hpp"

namespace conjulin {

/// Everything a command may report. Complex numbers serialize as [re, im]
/// pairs; absent optionals are omitted from the JSON object.
struct Report {
  std::string schema_version = "1";
  std::string command;
  std::optional<bool> reducible;
  std::optional<bool> feasible;
  std::optional<ComplexVector> particular;
  std::optional<std::vector<ComplexVector>> kernel_basis;
  std::optional<SpanField> span_field;
  std::optional<std::vector<std::size_t>> row_set;
  std::optional<SpectralReport> spectral;
  std::optional<ComplexVector> z;
  std::optional<RealVector> x;
  std::optional<bool> padded;
  double residual = 0.0;
  Tolerance tolerances;
};

std::string render_report_json(const Report& report);

/// Serializes and writes the report via a temp file + rename, so a failed
/// run never leaves a partial report behind.
void write_report(const std::string& path, const Report& report);

}  // namespace conjulin
