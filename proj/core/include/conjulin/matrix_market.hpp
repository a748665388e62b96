// Matrix Market array-format readers and writers (dense, real or complex
// general). Entries are stored column-major, one per line; doubles are
// written with 17 significant digits so write/parse round-trips are exact.
#pragma once

#include <string>
#include <variant>

#include "conjulin/types.hpp"

namespace conjulin {

using MarketMatrix = std::variant<RealMatrix, ComplexMatrix>;

MarketMatrix read_matrix_market(const std::string& path);

/// Reads a matrix, promoting a real file to complex entries.
ComplexMatrix read_complex_matrix(const std::string& path);

/// Reads a real file; complex files are rejected.
RealMatrix read_real_matrix(const std::string& path);

/// Vector readers accept files with a single column (or a single row).
ComplexVector read_complex_vector(const std::string& path);
RealVector read_real_vector(const std::string& path);

void write_matrix_market(const std::string& path, const RealMatrix& a);
void write_matrix_market(const std::string& path, const ComplexMatrix& a);
void write_matrix_market(const std::string& path, const RealVector& v);
void write_matrix_market(const std::string& path, const ComplexVector& v);

}  // namespace conjulin
