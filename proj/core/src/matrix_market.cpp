#include "conjulin/matrix_market.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace conjulin {

namespace {

constexpr const char* kRealHeader = "%%MatrixMarket matrix array real general";
constexpr const char* kComplexHeader = "%%MatrixMarket matrix array complex general";

[[noreturn]] void fail(const std::string& path, std::size_t line, const std::string& what) {
  throw ParseError(path + ":" + std::to_string(line) + ": " + what);
}

bool parse_double(const std::string& token, double& out) {
  std::size_t consumed = 0;
  try {
    out = std::stod(token, &consumed);
  } catch (const std::exception&) {
    return false;
  }
  return consumed == token.size() && std::isfinite(out);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_atomic(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp + " for writing");
    out << contents;
    if (!out) throw Error("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

MarketMatrix read_matrix_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");

  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) fail(path, 1, "missing header");
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();

  bool is_complex = false;
  if (line == kComplexHeader) {
    is_complex = true;
  } else if (line != kRealHeader) {
    fail(path, lineno, "unsupported header: '" + line + "'");
  }

  // Skip % comment lines, then read "rows cols".
  std::size_t rows = 0, cols = 0;
  for (;;) {
    if (!std::getline(in, line)) fail(path, lineno + 1, "missing dimension line");
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == '%') continue;
    std::istringstream ss(line);
    if (!(ss >> rows >> cols)) fail(path, lineno, "bad dimension line: '" + line + "'");
    std::string extra;
    if (ss >> extra) fail(path, lineno, "trailing tokens on dimension line");
    break;
  }

  const std::size_t expected = rows * cols;
  std::vector<double> re, im;
  re.reserve(expected);
  if (is_complex) im.reserve(expected);

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ss(line);
    std::string tok1, tok2, extra;
    if (!(ss >> tok1)) continue;  // blank line
    double a = 0.0, b = 0.0;
    if (!parse_double(tok1, a)) fail(path, lineno, "bad number: '" + tok1 + "'");
    if (is_complex) {
      if (!(ss >> tok2)) fail(path, lineno, "complex entry needs two fields");
      if (!parse_double(tok2, b)) fail(path, lineno, "bad number: '" + tok2 + "'");
    }
    if (ss >> extra) fail(path, lineno, "trailing tokens: '" + extra + "'");
    re.push_back(a);
    if (is_complex) im.push_back(b);
  }

  if (re.size() != expected)
    throw DimensionMismatch(path + ": expected " + std::to_string(expected) +
                            " entries, found " + std::to_string(re.size()));

  // Entries arrive column-major.
  if (is_complex) {
    ComplexMatrix m(rows, cols);
    std::size_t k = 0;
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t i = 0; i < rows; ++i, ++k) m(i, j) = Complex(re[k], im[k]);
    return m;
  }
  RealMatrix m(rows, cols);
  std::size_t k = 0;
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i, ++k) m(i, j) = re[k];
  return m;
}

ComplexMatrix read_complex_matrix(const std::string& path) {
  MarketMatrix m = read_matrix_market(path);
  if (std::holds_alternative<ComplexMatrix>(m)) return std::get<ComplexMatrix>(m);
  return to_complex(std::get<RealMatrix>(m));
}

RealMatrix read_real_matrix(const std::string& path) {
  MarketMatrix m = read_matrix_market(path);
  if (std::holds_alternative<ComplexMatrix>(m))
    throw ParseError(path + ": expected a real matrix, found complex");
  return std::get<RealMatrix>(m);
}

namespace {

template <class Mat>
std::vector<typename std::decay_t<decltype(std::declval<Mat>()(0, 0))>> to_vector(
    const Mat& m, const std::string& path) {
  using T = std::decay_t<decltype(std::declval<Mat>()(0, 0))>;
  std::vector<T> v;
  if (m.cols() == 1) {
    for (std::size_t i = 0; i < m.rows(); ++i) v.push_back(m(i, 0));
  } else if (m.rows() == 1) {
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(0, j));
  } else {
    throw ParseError(path + ": expected a vector (one row or one column)");
  }
  return v;
}

}  // namespace

ComplexVector read_complex_vector(const std::string& path) {
  return to_vector(read_complex_matrix(path), path);
}

RealVector read_real_vector(const std::string& path) {
  return to_vector(read_real_matrix(path), path);
}

void write_matrix_market(const std::string& path, const RealMatrix& a) {
  std::ostringstream out;
  out << kRealHeader << "\n" << a.rows() << " " << a.cols() << "\n";
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i)
      out << format_double(a(i, j)) << "\n";
  write_atomic(path, out.str());
}

void write_matrix_market(const std::string& path, const ComplexMatrix& a) {
  std::ostringstream out;
  out << kComplexHeader << "\n" << a.rows() << " " << a.cols() << "\n";
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i)
      out << format_double(a(i, j).real()) << " " << format_double(a(i, j).imag())
          << "\n";
  write_atomic(path, out.str());
}

void write_matrix_market(const std::string& path, const RealVector& v) {
  RealMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  write_matrix_market(path, m);
}

void write_matrix_market(const std::string& path, const ComplexVector& v) {
  ComplexMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  write_matrix_market(path, m);
}

}  // namespace conjulin
