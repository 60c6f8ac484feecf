// Command-line front end: one subcommand per verification.
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mkp/acceptance.hpp"
#include "mkp/commands.hpp"
#include "mkp/integralrep.hpp"

namespace {

void add_family(CLI::App* app, mkp::FamilyArgs& f) {
  app->add_option("--family", f.name, "jacobi | laguerre | chebyshev")->capture_default_str();
  app->add_option("--alpha", f.alpha, "Jacobi/Laguerre alpha")->capture_default_str();
  app->add_option("--beta", f.beta, "Jacobi beta")->capture_default_str();
}

void add_output(CLI::App* app, mkp::OutputArgs& o) {
  app->add_option("--out", o.json_path, "JSON report path (default: $MKP_OUTPUT_DIR/<command>_report.json)");
  app->add_option("--csv", o.csv_path, "CSV output path");
  app->add_flag("!--no-json", o.write_json, "skip writing the JSON report");
}

int finish(mkp::ReportDocument& doc, const mkp::OutputArgs& out) {
  for (const auto& c : doc.checks)
    std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  measured " << mkp::format_number(c.measured)
              << "  tolerance " << mkp::format_number(c.tolerance) << "\n";
  for (const auto& [k, v] : doc.diagnostics) std::cout << "      " << k << " = " << v << "\n";
  const std::string path = mkp::emit_report(doc, out);
  if (!path.empty()) std::cout << "report: " << path << "\n";
  return doc.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modified kernel polynomials: pencils, Sobolev orthogonality and verification"};
  app.require_subcommand(1);

  std::uint64_t seed = mkp::kDefaultSeed;

  mkp::PencilArgs pencil;
  auto* p = app.add_subcommand("pencil", "build the Jacobi-type pencil both ways and check it");
  add_family(p, pencil.family);
  p->add_option("--c", pencil.c_source, "ones | kernel:t0=v | eigkernel:c=v,t0=v | secondkind:t0=v | file:path | "
                                        "random:seed=s")
      ->capture_default_str();
  p->add_option("--nmax", pencil.n_max, "largest degree of the associated polynomials")->capture_default_str();
  p->add_option("--matrix-n", pencil.matrix_n, "truncation order for the matrix path")->capture_default_str();
  p->add_option("--seed", seed, "seed recorded for non-random sources")->capture_default_str();
  p->add_option("--tol-equiv", pencil.tol_equiv)->capture_default_str();
  p->add_option("--tol-path", pencil.tol_path)->capture_default_str();
  p->add_option("--tol-residual", pencil.tol_residual)->capture_default_str();
  p->add_option("--tol-kernel-residual", pencil.tol_kernel_residual)->capture_default_str();
  add_output(p, pencil.out);

  mkp::GramArgs gram;
  double gram_t0 = 0.0;
  auto* g = app.add_subcommand("gram", "Gram matrix of the Sobolev family and its diagonality");
  add_family(g, gram.family);
  g->add_option("--c", gram.c)->capture_default_str();
  auto* gram_t0_opt = g->add_option("--t0", gram_t0, "default: 1.5 Jacobi, 1 Chebyshev, 0 Laguerre");
  g->add_option("--nmax", gram.n_max)->capture_default_str();
  g->add_option("--quad-n", gram.quad_n, "quadrature nodes (default nmax + 2)");
  g->add_option("--tol-offdiag", gram.tol)->capture_default_str();
  add_output(g, gram.out);

  mkp::DiffcheckArgs diff;
  double diff_t0 = 0.0;
  auto* d = app.add_subcommand("diffcheck", "eigen-relations, kernel images and composed equations");
  add_family(d, diff.family);
  d->add_option("--c", diff.c)->capture_default_str();
  auto* diff_t0_opt = d->add_option("--t0", diff_t0, "kernel-image point (default: support edge)");
  d->add_option("--nmax", diff.n_max)->capture_default_str();
  d->add_option("--tol-eigen", diff.tol_eigen)->capture_default_str();
  d->add_option("--tol-image", diff.tol_image)->capture_default_str();
  d->add_option("--tol-composed", diff.tol_composed)->capture_default_str();
  add_output(d, diff.out);

  mkp::IntegralcheckArgs integ;
  auto* ic = app.add_subcommand("integralcheck", "double-integral representation against the closed form");
  ic->add_option("--alpha", integ.alpha)->capture_default_str();
  ic->add_option("--c", integ.c, "positive integer")->capture_default_str();
  ic->add_option("--nmax", integ.n_max)->capture_default_str();
  ic->add_option("--x", integ.xs, "strictly negative evaluation points")->delimiter(',')->capture_default_str();
  ic->add_option("--tol", integ.tol)->capture_default_str();
  ic->add_option("--tol-n0", integ.tol_n0)->capture_default_str();
  ic->add_option("--tol-partial", integ.tol_partial)->capture_default_str();
  add_output(ic, integ.out);

  mkp::PlotdataArgs plot;
  double plot_t0 = 0.0;
  double plot_lo = 0.0;
  double plot_hi = 0.0;
  auto* pd = app.add_subcommand("plotdata", "CSV of value and derivative over a grid");
  pd->add_option("what", plot.what, "tn | P | L | kernel")->required();
  add_family(pd, plot.family);
  pd->add_option("--c", plot.c)->capture_default_str();
  auto* plot_t0_opt = pd->add_option("--t0", plot_t0, "default: support edge");
  pd->add_option("--n", plot.n, "degree")->capture_default_str();
  auto* lo_opt = pd->add_option("--lo", plot_lo, "grid start");
  auto* hi_opt = pd->add_option("--hi", plot_hi, "grid end");
  pd->add_option("--points", plot.points)->capture_default_str();
  add_output(pd, plot.out);

  auto* st = app.add_subcommand("selftest", "run the acceptance suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*p) {
      pencil.seed = seed;
      auto doc = mkp::cmd_pencil(pencil);
      return finish(doc, pencil.out);
    }
    if (*g) {
      if (*gram_t0_opt) gram.t0 = gram_t0;
      auto doc = mkp::cmd_gram(gram);
      return finish(doc, gram.out);
    }
    if (*d) {
      if (*diff_t0_opt) diff.t0 = diff_t0;
      auto doc = mkp::cmd_diffcheck(diff);
      return finish(doc, diff.out);
    }
    if (*ic) {
      auto doc = mkp::cmd_integralcheck(integ);
      return finish(doc, integ.out);
    }
    if (*pd) {
      if (*plot_t0_opt) plot.t0 = plot_t0;
      if (*lo_opt) plot.lo = plot_lo;
      if (*hi_opt) plot.hi = plot_hi;
      auto doc = mkp::cmd_plotdata(plot);
      return finish(doc, plot.out);
    }
    if (*st) return mkp::run_acceptance(std::cout) ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
