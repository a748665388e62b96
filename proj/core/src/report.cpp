#include "conjulin/report.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace conjulin {

namespace {

using nlohmann::json;

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json vector_to_json(const ComplexVector& v) {
  json arr = json::array();
  for (const Complex& z : v) arr.push_back(complex_to_json(z));
  return arr;
}

}  // namespace

std::string render_report_json(const Report& report) {
  json j;
  j["schema_version"] = report.schema_version;
  j["command"] = report.command;
  if (report.reducible) j["reducible"] = *report.reducible;
  if (report.feasible) j["feasible"] = *report.feasible;
  if (report.particular) j["particular"] = vector_to_json(*report.particular);
  if (report.kernel_basis) {
    json arr = json::array();
    for (const ComplexVector& v : *report.kernel_basis) arr.push_back(vector_to_json(v));
    j["kernel_basis"] = arr;
  }
  if (report.span_field)
    j["span_field"] = *report.span_field == SpanField::Complex ? "COMPLEX" : "REAL";
  if (report.row_set) j["row_set"] = *report.row_set;
  if (report.spectral) {
    const SpectralReport& s = *report.spectral;
    j["eigenvalues"] = {{"A", s.eig_A}, {"M", s.eig_M}, {"S", s.eig_S}};
    j["condition_numbers"] = {{"A", s.cond_A}, {"M", s.cond_M}, {"S", s.cond_S}};
    j["interlacing"] = {{"cauchy", s.cauchy_ok},
                        {"schur", s.schur_ok},
                        {"cond_M_le_cond_A", s.cond_M_contracts},
                        {"cond_S_le_cond_A", s.cond_S_contracts}};
  }
  if (report.z) j["z"] = vector_to_json(*report.z);
  if (report.x) j["x"] = *report.x;
  if (report.padded) j["padded"] = *report.padded;
  j["residual"] = report.residual;
  j["tolerances"] = {{"rank_tol", report.tolerances.rank_tol},
                     {"residual_tol", report.tolerances.residual_tol},
                     {"eig_tol", report.tolerances.eig_tol}};
  return j.dump(2) + "\n";
}

void write_report(const std::string& path, const Report& report) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp + " for writing");
    out << render_report_json(report);
    if (!out) throw Error("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace conjulin
