#include "conjulin/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "conjulin/embedding.hpp"
#include "conjulin/numkernel.hpp"
#include "conjulin/generate.hpp"
#include "conjulin/matrix_market.hpp"
#include "conjulin/reduction.hpp"
#include "conjulin/report.hpp"

namespace conjulin {

namespace {

namespace fs = std::filesystem;

std::string sibling(const std::string& out_path, const std::string& name) {
  fs::path dir = fs::path(out_path).parent_path();
  if (dir.empty()) dir = ".";
  return (dir / name).string();
}

int fail(const std::string& what) {
  std::cerr << "error: " << what << "\n";
  return kExitError;
}

}  // namespace

Tolerance resolve_tolerance(const std::optional<double>& tol_flag) {
  if (tol_flag) return Tolerance::scaled(*tol_flag);
  if (const char* env = std::getenv("CONJULIN_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0')
      throw Error(std::string("CONJULIN_TOL is not a number: '") + env + "'");
    return Tolerance::scaled(v);
  }
  return {};
}

int cmd_reduce(const ReduceOptions& opt) {
  try {
    const Tolerance tol = resolve_tolerance(opt.tol_scale);
    const ConjugateSystem sys(read_complex_matrix(opt.m_path),
                              read_complex_matrix(opt.n_path),
                              read_complex_vector(opt.p_path));

    Report report;
    report.command = "reduce";
    report.tolerances = tol;
    report.reducible = is_reducible(sys.M, sys.N, tol);

    if (!*report.reducible) {
      write_report(opt.out_path, report);
      return kExitIrreducible;
    }

    const ReductionCertificate cert = reduction_matrices(sys.M, sys.N, tol);
    const ReducedSystem red = reduce(sys, cert);
    report.row_set = cert.row_set;
    write_matrix_market(sibling(opt.out_path, "A.mtx"), red.A);
    write_matrix_market(sibling(opt.out_path, "b.mtx"), red.b);
    write_matrix_market(sibling(opt.out_path, "U.mtx"), cert.U);
    write_matrix_market(sibling(opt.out_path, "V.mtx"), cert.V);
    write_report(opt.out_path, report);
    return kExitOk;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

int cmd_solve(const SolveOptions& opt) {
  try {
    const Tolerance tol = resolve_tolerance(opt.tol_scale);
    const ConjugateSystem sys(read_complex_matrix(opt.m_path),
                              read_complex_matrix(opt.n_path),
                              read_complex_vector(opt.p_path));

    const SolutionReport result = solve(sys, tol);

    Report report;
    report.command = "solve";
    report.tolerances = tol;
    report.reducible = result.reducible;
    report.feasible = result.solutions.feasible;
    report.span_field = result.solutions.span_field;
    report.kernel_basis = result.solutions.kernel_basis;
    report.residual = result.verification_residual;
    if (result.solutions.feasible) report.particular = result.solutions.particular;
    if (result.certificate) report.row_set = result.certificate->row_set;

    write_report(opt.out_path, report);
    return result.solutions.feasible ? kExitOk : kExitInfeasible;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

int cmd_embed(const EmbedOptions& opt) {
  try {
    const Tolerance tol = resolve_tolerance(opt.tol_scale);
    const RealSystem sys(read_real_matrix(opt.a_path), read_real_vector(opt.b_path));

    const RealSystem padded = pad_to_even(sys);
    EmbeddedSystem emb = complexify(padded);
    emb.padded = padded.m() != sys.m();

    const auto [s, q] = schur_system(emb, tol);
    const ComplexVector z = cholesky_solve(cholesky(s, tol), q, tol);
    RealVector x(sys.m());
    for (std::size_t i = 0; i < sys.m(); ++i)
      x[i] = i < emb.n() ? z[i].real() : z[i - emb.n()].imag();

    const SpectralReport spectral = interlacing_report(sys, tol);

    const RealVector ax = sys.A * x;
    double res = 0.0;
    for (std::size_t i = 0; i < ax.size(); ++i)
      res += (ax[i] - sys.b[i]) * (ax[i] - sys.b[i]);

    Report report;
    report.command = "embed";
    report.tolerances = tol;
    report.x = x;
    report.z = z;
    report.spectral = spectral;
    report.padded = emb.padded;
    report.residual = std::sqrt(res);

    write_matrix_market(sibling(opt.out_path, "S.mtx"), s);
    write_matrix_market(sibling(opt.out_path, "q.mtx"), q);
    write_report(opt.out_path, report);
    return kExitOk;
  } catch (const NotPositiveDefinite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotPositiveDefinite;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

int cmd_analyze(const AnalyzeOptions& opt) {
  try {
    const Tolerance tol = resolve_tolerance(opt.tol_scale);
    RealMatrix a = read_real_matrix(opt.a_path);
    const std::size_t m = a.rows();
    const RealSystem sys(std::move(a), RealVector(m, 0.0));

    const SpectralReport spectral = interlacing_report(sys, tol);

    Report report;
    report.command = "analyze";
    report.tolerances = tol;
    report.spectral = spectral;
    report.padded = spectral.padded;

    if (opt.out_path) {
      write_report(*opt.out_path, report);
    } else {
      std::cout << render_report_json(report);
    }
    return kExitOk;
  } catch (const NotPositiveDefinite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotPositiveDefinite;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

int cmd_gen(const GenOptions& opt) {
  try {
    fs::create_directories(opt.out_dir);
    const fs::path dir(opt.out_dir);
    if (opt.kind == "spd") {
      const GeneratedRealSystem sys = gen_spd(opt.n, opt.seed);
      write_matrix_market((dir / "A.mtx").string(), sys.A);
      write_matrix_market((dir / "b.mtx").string(), sys.b);
      return kExitOk;
    }

    GeneratedSystem sys;
    if (opt.kind == "unique") {
      sys = gen_unique(opt.n, opt.seed);
    } else if (opt.kind == "reducible") {
      sys = gen_reducible(opt.n, opt.seed);
    } else if (opt.kind == "irreducible") {
      sys = gen_irreducible(opt.n, opt.seed);
    } else {
      throw Error("unknown --kind '" + opt.kind +
                  "' (expected reducible|irreducible|spd|unique)");
    }
    write_matrix_market((dir / "M.mtx").string(), sys.M);
    write_matrix_market((dir / "N.mtx").string(), sys.N);
    write_matrix_market((dir / "p.mtx").string(), sys.p);
    return kExitOk;
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

}  // namespace conjulin
