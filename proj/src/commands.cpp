#include "mkp/commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "mkp/diffop.hpp"
#include "mkp/integralrep.hpp"
#include "mkp/kernels.hpp"
#include "mkp/pencil.hpp"
#include "mkp/quadrature.hpp"
#include "mkp/sobolev.hpp"

namespace mkp {

Family FamilyArgs::make() const {
  try {
    if (name == "jacobi") return Family::jacobi(alpha, beta);
    if (name == "laguerre") return Family::laguerre_neg(alpha);
    if (name == "chebyshev") return Family::chebyshev1();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown family '" + name + "' (expected jacobi, laguerre or chebyshev)");
}

void FamilyArgs::record(ReportDocument& doc) const {
  const Family f = make();
  doc.set("family", name);
  if (f.kind() != FamilyKind::chebyshev1) doc.set("alpha", f.alpha());
  if (f.kind() == FamilyKind::jacobi) doc.set("beta", f.beta());
}

std::string emit_report(ReportDocument& doc, const OutputArgs& out) {
  if (!out.write_json) return {};
  const auto path = resolve_output_path(out.json_path, doc.command + "_report.json");
  write_file_atomic(path, doc.to_json());
  return path.string();
}

namespace {

ReportDocument start(const std::string& command) {
  ReportDocument doc;
  doc.command = command;
  doc.seed = kDefaultSeed;
  doc.timestamp = utc_timestamp();
  return doc;
}

void write_csv(const CsvTable& table, const std::string& path) {
  if (!path.empty()) write_file_atomic(path, table.to_string());
}

double edge_or(const Family& f, const std::optional<double>& t0) { return t0 ? *t0 : f.support_edge(); }

void require_edge(const Family& f, double t0) {
  if (!(t0 >= f.support_edge())) {
    std::ostringstream os;
    os << "t0 = " << t0 << " lies below the support edge " << f.support_edge() << " of " << f.name();
    throw UsageError(os.str());
  }
}

}  // namespace

ReportDocument cmd_pencil(const PencilArgs& args) {
  ReportDocument doc = start("pencil");
  const Family family = args.family.make();
  args.family.record(doc);
  WeightSource src;
  try {
    src = parse_weight_source(args.c_source);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (src.kind == WeightSource::Kind::random) doc.seed = src.seed;
  else doc.seed = args.seed;
  if (args.matrix_n < 3) throw UsageError("matrix truncation must be at least 3");

  // File sources fix the available length; everything else is generated on demand.
  std::size_t matrix_n = args.matrix_n;
  std::size_t count = std::max(args.n_max + 3, matrix_n + 2);
  if (src.kind == WeightSource::Kind::file) {
    std::vector<double> raw;
    try {
      raw = read_weight_file(src.path);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (raw.size() < args.n_max + 3)
      throw UsageError("weight file holds " + std::to_string(raw.size()) + " entries; nmax = " +
                       std::to_string(args.n_max) + " needs " + std::to_string(args.n_max + 3));
    count = raw.size();
    matrix_n = std::min(matrix_n, count - 2);
    if (matrix_n < 3) throw UsageError("weight file too short for the matrix path");
  }
  const RecurrenceCoefficients rc = recurrence_coefficients(family, count);
  WeightSequence w;
  try {
    w = materialize_weights(src, rc, count);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  doc.set("c", src.describe());
  doc.set("nmax", static_cast<double>(args.n_max));
  doc.set("matrix_n", static_cast<double>(matrix_n));

  const JacobiTypePencil pencil = build_pencil_formulas(rc, w, args.n_max);
  std::size_t bad = 0;
  for (std::size_t n = 0; n < pencil.size(); ++n) bad += (pencil.a[n] > 0.0 ? 0 : 1) + (pencil.gamma_band[n] > 0.0 ? 0 : 1);
  bad += pencil.alpha_tilde > 0.0 ? 0 : 1;
  doc.add("pencil_positivity", "build_pencil_formulas", static_cast<double>(bad), 0.0);

  const JacobiTypePencil long_pencil = build_pencil_formulas(rc, w, matrix_n - 1);
  const PencilMatrices mats = build_pencil_matrices(rc, w, matrix_n);
  doc.add("path_equivalence", "build_pencil_matrices", pencil_path_difference(long_pencil, mats), args.tol_path);

  const auto lambdas = default_sample_points(family, 20);
  const EquivalenceReport eq = pencil_kernel_equivalence(rc, w, args.n_max, lambdas);
  doc.add("associated_vs_kernel", "associated_polynomials", eq.max_relative, args.tol_equiv);
  doc.note("associated_vs_kernel_worst_n", static_cast<double>(eq.worst_n));
  doc.note("associated_vs_kernel_worst_lambda", eq.worst_lambda);

  std::vector<std::vector<double>> assoc;
  std::vector<std::vector<double>> kern;
  for (double lam : lambdas) {
    assoc.push_back(associated_values(pencil, args.n_max, lam));
    kern.push_back(normalized_kernel_values(rc, w, args.n_max, lam));
  }
  doc.add("five_term_associated", "five_term_residual", five_term_residual(pencil, lambdas, assoc).max_relative,
          args.tol_residual);
  doc.add("five_term_kernel", "five_term_residual", five_term_residual(pencil, lambdas, kern).max_relative,
          args.tol_kernel_residual);
  doc.note("alpha_tilde", pencil.alpha_tilde);
  doc.note("beta_tilde", pencil.beta_tilde);

  if (!args.out.csv_path.empty()) {
    CsvTable t{{"n", "c", "a", "b", "alpha", "beta", "gamma"}, {}};
    for (std::size_t n = 0; n < pencil.size(); ++n)
      t.rows.push_back({static_cast<double>(n), w[n], pencil.a[n], pencil.b[n], pencil.alpha_band[n],
                        pencil.beta_band[n], pencil.gamma_band[n]});
    write_csv(t, args.out.csv_path);
  }
  return doc;
}

namespace {

double default_gram_t0(const Family& f) {
  switch (f.kind()) {
    case FamilyKind::jacobi: return 1.5;
    case FamilyKind::chebyshev1: return 1.0;
    case FamilyKind::laguerre_neg: return 0.0;
  }
  return f.support_edge();
}

}  // namespace

ReportDocument cmd_gram(const GramArgs& args) {
  ReportDocument doc = start("gram");
  const Family family = args.family.make();
  args.family.record(doc);
  const double t0 = args.t0 ? *args.t0 : default_gram_t0(family);
  require_edge(family, t0);
  if (!(args.c > 0.0)) throw UsageError("c must be positive");
  const std::size_t nodes = args.quad_n ? args.quad_n : args.n_max + 2;
  if (2 * nodes < 2 * args.n_max + 3)
    throw UsageError("quad-n = " + std::to_string(nodes) + " is too small for nmax = " + std::to_string(args.n_max));
  doc.set("c", args.c);
  doc.set("t0", t0);
  doc.set("nmax", static_cast<double>(args.n_max));
  doc.set("quad_n", static_cast<double>(nodes));

  const MatrixWeight weight(family, args.c, t0);
  const auto polys = sobolev_family(family, args.c, t0, args.n_max);
  const QuadratureRule rule = gauss_rule(recurrence_coefficients(family, nodes), nodes);
  const DenseMatrix g = gram_matrix(weight, std::span<const OrthoSeries>(polys), rule);
  const GramCertificate cert = certify_gram(g, args.tol);

  doc.add("diagonal_positive", "gram_matrix", cert.min_diagonal, 0.0, cert.positive_diagonal);  // pass: every G_nn > 0
  doc.add("off_diagonal_suppression", "gram_matrix", cert.max_pair_ratio, args.tol);
  doc.note("min_diagonal", cert.min_diagonal);
  doc.note("max_off_diagonal", cert.max_off_diagonal);
  doc.note("global_off_diagonal_ratio", cert.global_ratio);

  CsvTable t;
  for (std::size_t j = 0; j < g.cols(); ++j) t.header.push_back("m" + std::to_string(j));
  for (std::size_t i = 0; i < g.rows(); ++i) {
    std::vector<double> row(g.cols());
    for (std::size_t j = 0; j < g.cols(); ++j) row[j] = g(i, j);
    t.rows.push_back(std::move(row));
  }
  write_csv(t, args.out.csv_path.empty() ? resolve_output_path("", "gram_matrix.csv").string() : args.out.csv_path);
  return doc;
}

ReportDocument cmd_diffcheck(const DiffcheckArgs& args) {
  ReportDocument doc = start("diffcheck");
  const Family family = args.family.make();
  args.family.record(doc);
  if (!(args.c > 0.0)) throw UsageError("c must be positive");
  const double t0 = edge_or(family, args.t0);
  require_edge(family, t0);
  doc.set("c", args.c);
  doc.set("t0", t0);
  doc.set("nmax", static_cast<double>(args.n_max));

  doc.add("eigen_relation", "apply", verify_eigen_relation(family, args.c, args.n_max), args.tol_eigen);
  doc.add("kernel_image", "verify_kernel_image", verify_kernel_image(family, args.c, t0, args.n_max),
          args.tol_image);
  const ComposedResidual comp = verify_composed_equation(family, args.c, args.n_max);
  doc.add("composed_equation", "verify_composed_equation", comp.adopted(), args.tol_composed);
  doc.note("composed_shifted_reading", comp.shifted);
  doc.note("composed_unshifted_reading", comp.unshifted);
  doc.note("composed_reading", comp.shifted_adopted() ? "shifted" : "unshifted");
  const ComposedResidual zero = verify_composed_equation(family, args.c, 0);
  const double n0 = std::max({verify_eigen_relation(family, args.c, 0),
                              verify_kernel_image(family, args.c, t0, 0), zero.shifted, zero.unshifted});
  doc.add("n0_rows", "verify_composed_equation", n0, 0.0);

  if (!args.out.csv_path.empty()) {
    CsvTable t{{"n", "eigen_max_through_n", "image_max_through_n", "composed_shifted", "composed_unshifted"}, {}};
    for (std::size_t n = 0; n <= args.n_max; ++n) {
      const ComposedResidual r = verify_composed_equation(family, args.c, n);
      t.rows.push_back({static_cast<double>(n), verify_eigen_relation(family, args.c, n),
                        verify_kernel_image(family, args.c, t0, n), r.shifted, r.unshifted});
    }
    write_csv(t, args.out.csv_path);
  }
  return doc;
}

ReportDocument cmd_integralcheck(const IntegralcheckArgs& args) {
  ReportDocument doc = start("integralcheck");
  if (!(args.c >= 1.0) || std::floor(args.c) != args.c)
    throw UsageError("integral representation needs a positive integer c, got " + format_number(args.c));
  if (!(args.alpha > -1.0)) throw UsageError("alpha must exceed -1");
  if (args.xs.empty()) throw UsageError("x grid is empty");
  for (double x : args.xs)
    if (!(x < 0.0)) throw UsageError("x grid must be strictly negative, got " + format_number(x));
  const int c = static_cast<int>(args.c);
  doc.set("alpha", args.alpha);
  doc.set("c", args.c);
  doc.set("nmax", static_cast<double>(args.n_max));
  std::string grid;
  for (double x : args.xs) grid += (grid.empty() ? "" : ",") + format_number(x);
  doc.set("x", grid);

  const SpecialFnConfig cfg;
  CsvTable t{{"n", "x", "integral", "closed_form", "relative_error"}, {}};
  double worst = 0.0;
  double worst_n0 = 0.0;
  try {
    for (std::size_t n = 0; n <= args.n_max; ++n)
      for (double x : args.xs) {
        const IntegralRepComparison r = compare_integral_rep(args.alpha, c, n, x, cfg);
        t.rows.push_back({static_cast<double>(n), x, r.integral, r.closed_form, r.relative_error});
        worst = std::max(worst, r.relative_error);
        if (n == 0) worst_n0 = std::max(worst_n0, r.relative_error);
      }
    doc.add("integral_representation", "sobolev_laguerre_integral_rep", worst, args.tol);
    doc.add("integral_representation_n0", "sobolev_laguerre_integral_rep", worst_n0, args.tol_n0);
  } catch (const ConvergenceError& e) {
    doc.add("integral_representation", "sobolev_laguerre_integral_rep", std::numeric_limits<double>::infinity(),
            args.tol, false);
    doc.note("convergence_error", e.what());
  }

  double partial = 0.0;
  for (std::size_t n = 0; n <= args.n_max; ++n)
    for (double tt : {0.5, 1.0, 5.0, 20.0}) {
      const PartialSumForms f = f_n_partial_sum(c, n, tt, cfg);
      partial = std::max(partial, std::abs(f.integral - f.direct) / std::abs(f.direct));
    }
  doc.add("partial_sum_forms", "f_n_partial_sum", partial, args.tol_partial);
  write_csv(t, args.out.csv_path);
  return doc;
}

ReportDocument cmd_plotdata(const PlotdataArgs& args) {
  ReportDocument doc = start("plotdata");
  if (args.points == 0) throw UsageError("empty grid: --points must be at least 1");
  if (!(args.c > 0.0)) throw UsageError("c must be positive");
  doc.set("what", args.what);
  doc.set("c", args.c);
  doc.set("n", static_cast<double>(args.n));
  doc.set("points", static_cast<double>(args.points));

  const bool half_line = args.what == "L" || (args.what == "kernel" && args.family.name == "laguerre");
  const double lo = args.lo.value_or(half_line ? -10.0 : -1.0);
  const double hi = args.hi.value_or(half_line ? 0.0 : 1.0);
  if (!(lo <= hi)) throw UsageError("grid requires lo <= hi");
  doc.set("lo", lo);
  doc.set("hi", hi);
  auto grid_x = [&](std::size_t i) {
    return args.points == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(args.points - 1);
  };

  CsvTable t{{"x", "value", "derivative"}, {}};
  if (args.what == "tn") {
    t.header.insert(t.header.end(), {"value_bound", "deriv_bound", "tight_value_bound", "tight_deriv_bound"});
    const ChebyshevBounds b = chebyshev_bounds_check(args.c, args.n, 1);
    std::size_t violations = 0;
    for (std::size_t i = 0; i < args.points; ++i) {
      const double x = grid_x(i);
      const Jet j = chebyshev_t_jet(args.c, args.n, x);
      if (std::abs(x) <= 1.0 && (std::abs(j.value) > b.value_bound || std::abs(j.d1) > b.deriv_bound)) ++violations;
      t.rows.push_back({x, j.value, j.d1, b.value_bound, b.deriv_bound, b.tight_value_bound, b.tight_deriv_bound});
    }
    doc.add("bounds_hold", "chebyshev_bounds_check", static_cast<double>(violations), 0.0);
    const double root = -(args.c + 1.0) / (2.0 * args.c);
    if (args.n >= 1) doc.note("t1_root", root);
    if (args.n == 1 && lo <= root && root <= hi && args.points >= 2) {
      // Zero crossing of the sampled t_1 against the closed-form root.
      const double h = (hi - lo) / static_cast<double>(args.points - 1);
      double gap = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const double x0 = t.rows[i][0], v0 = t.rows[i][1];
        if (std::abs(v0) <= 1e-13) gap = std::min(gap, std::abs(x0 - root));
        if (i + 1 == t.rows.size()) break;
        const double x1 = t.rows[i + 1][0], v1 = t.rows[i + 1][1];
        if ((v0 < 0.0) != (v1 < 0.0)) gap = std::min(gap, std::abs(x0 - v0 * (x1 - x0) / (v1 - v0) - root));
      }
      doc.add("t1_root_crossing", "chebyshev_t", gap, h);
    }
  } else if (args.what == "P" || args.what == "L" || args.what == "kernel") {
    if (args.what == "P" && args.family.name == "laguerre") throw UsageError("P needs a Jacobi-type family");
    FamilyArgs fam = args.family;
    if (args.what == "L") fam.name = "laguerre";
    const Family family = fam.make();
    fam.record(doc);
    const double t0 = edge_or(family, args.t0);
    require_edge(family, t0);
    doc.set("t0", t0);
    const OrthoSeries s = args.what == "kernel"
                              ? modified_kernel_series(ModifiedKernelSpec{family, PlainKernel{t0}, args.n}, args.n)
                              : sobolev_kernel_series(family, args.c, t0, args.n);
    for (std::size_t i = 0; i < args.points; ++i) {
      const double x = grid_x(i);
      const Jet j = s.jet(x);
      t.rows.push_back({x, j.value, j.d1});
    }
  } else {
    throw UsageError("unknown plot kind '" + args.what + "' (expected tn, P, L or kernel)");
  }
  const auto path = args.out.csv_path.empty() ? resolve_output_path("", "plot_" + args.what + ".csv").string()
                                              : args.out.csv_path;
  write_csv(t, path);
  doc.set("csv", path);
  return doc;
}

}  // namespace mkp
