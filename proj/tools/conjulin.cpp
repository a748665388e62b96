// conjulin: solve conjugate-linear systems M z + N conj(z) = p, reduce them
// to complex systems A z = b when possible, and solve real SPD systems
// through the complex Schur-complement embedding.
#include <CLI11.hpp>

#include "conjulin/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Conjugate-linear system reducer and solver"};
  app.require_subcommand(1);

  conjulin::ReduceOptions reduce_opt;
  double tol_value = 0.0;
  auto* reduce = app.add_subcommand(
      "reduce", "Decide reducibility of M z + N conj(z) = p and emit A, b, U, V");
  reduce->add_option("--M", reduce_opt.m_path, "Matrix M (.mtx)")->required();
  reduce->add_option("--N", reduce_opt.n_path, "Matrix N (.mtx)")->required();
  reduce->add_option("--p", reduce_opt.p_path, "Right-hand side p (.mtx)")->required();
  reduce->add_option("--out", reduce_opt.out_path, "Report path (JSON)")->required();
  auto* reduce_tol = reduce->add_option(
      "--tol", tol_value, "Scale factor applied to rank/residual tolerances");

  conjulin::SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "Solve M z + N conj(z) = p end to end");
  solve->add_option("--M", solve_opt.m_path, "Matrix M (.mtx)")->required();
  solve->add_option("--N", solve_opt.n_path, "Matrix N (.mtx)")->required();
  solve->add_option("--p", solve_opt.p_path, "Right-hand side p (.mtx)")->required();
  solve->add_option("--out", solve_opt.out_path, "Report path (JSON)")->required();
  auto* solve_tol = solve->add_option(
      "--tol", tol_value, "Scale factor applied to rank/residual tolerances");

  conjulin::EmbedOptions embed_opt;
  auto* embed = app.add_subcommand(
      "embed", "Solve a real SPD system A x = b via the complex embedding");
  embed->add_option("--A", embed_opt.a_path, "Symmetric matrix A (.mtx)")->required();
  embed->add_option("--b", embed_opt.b_path, "Right-hand side b (.mtx)")->required();
  embed->add_option("--out", embed_opt.out_path, "Report path (JSON)")->required();
  auto* embed_tol = embed->add_option(
      "--tol", tol_value, "Scale factor applied to rank/residual tolerances");

  conjulin::AnalyzeOptions analyze_opt;
  std::string analyze_out;
  auto* analyze = app.add_subcommand(
      "analyze", "Interlacing and conditioning analysis of a real SPD matrix");
  analyze->add_option("--A", analyze_opt.a_path, "Symmetric matrix A (.mtx)")
      ->required();
  auto* analyze_out_opt =
      analyze->add_option("--out", analyze_out, "Report path (stdout when omitted)");
  auto* analyze_tol = analyze->add_option(
      "--tol", tol_value, "Scale factor applied to rank/residual tolerances");

  conjulin::GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "Generate a deterministic test instance");
  gen->add_option("--kind", gen_opt.kind, "reducible|irreducible|spd|unique")
      ->required();
  gen->add_option("--n", gen_opt.n, "Instance dimension")->required();
  gen->add_option("--seed", gen_opt.seed, "RNG seed")->required();
  gen->add_option("--out", gen_opt.out_dir, "Output directory")->required();

  CLI11_PARSE(app, argc, argv);

  if (reduce->parsed()) {
    if (*reduce_tol) reduce_opt.tol_scale = tol_value;
    return conjulin::cmd_reduce(reduce_opt);
  }
  if (solve->parsed()) {
    if (*solve_tol) solve_opt.tol_scale = tol_value;
    return conjulin::cmd_solve(solve_opt);
  }
  if (embed->parsed()) {
    if (*embed_tol) embed_opt.tol_scale = tol_value;
    return conjulin::cmd_embed(embed_opt);
  }
  if (analyze->parsed()) {
    if (*analyze_out_opt) analyze_opt.out_path = analyze_out;
    if (*analyze_tol) analyze_opt.tol_scale = tol_value;
    return conjulin::cmd_analyze(analyze_opt);
  }
  if (gen->parsed()) return conjulin::cmd_gen(gen_opt);
  return conjulin::kExitError;
}
