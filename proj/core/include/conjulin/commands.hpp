// Command implementations behind the CLI front end. Each returns a process
// exit code: 0 ok, 1 io/parse failure, 3 irreducible, 4 infeasible,
// 5 not positive definite.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "conjulin/types.hpp"

namespace conjulin {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitIrreducible = 3;
inline constexpr int kExitInfeasible = 4;
inline constexpr int kExitNotPositiveDefinite = 5;

/// Effective tolerances for a command: the --tol flag (a scale factor on
/// rank_tol and residual_tol) wins over the CONJULIN_TOL environment
/// variable, which wins over the defaults.
Tolerance resolve_tolerance(const std::optional<double>& tol_flag);

struct ReduceOptions {
  std::string m_path;
  std::string n_path;
  std::string p_path;
  std::string out_path;
  std::optional<double> tol_scale;
};
/// Decides reducibility and, when reducible, writes A.mtx, b.mtx, U.mtx,
/// V.mtx next to the report.
int cmd_reduce(const ReduceOptions& opt);

struct SolveOptions {
  std::string m_path;
  std::string n_path;
  std::string p_path;
  std::string out_path;
  std::optional<double> tol_scale;
};
int cmd_solve(const SolveOptions& opt);

struct EmbedOptions {
  std::string a_path;
  std::string b_path;
  std::string out_path;
  std::optional<double> tol_scale;
};
/// Solves the real SPD system through the complex embedding and writes
/// S.mtx and q.mtx next to the report, plus the spectral analysis.
int cmd_embed(const EmbedOptions& opt);

struct AnalyzeOptions {
  std::string a_path;
  std::optional<std::string> out_path;  // stdout when absent
  std::optional<double> tol_scale;
};
int cmd_analyze(const AnalyzeOptions& opt);

struct GenOptions {
  std::string kind;  // reducible | irreducible | spd | unique
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string out_dir;
};
/// Writes M.mtx/N.mtx/p.mtx (system kinds) or A.mtx/b.mtx (spd) into out_dir.
int cmd_gen(const GenOptions& opt);

}  // namespace conjulin
