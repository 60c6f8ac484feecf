#include "mkp/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "mkp/diffop.hpp"
#include "mkp/integralrep.hpp"
#include "mkp/kernels.hpp"
#include "mkp/pencil.hpp"
#include "mkp/quadrature.hpp"
#include "mkp/sobolev.hpp"
#include "mkp/weight_source.hpp"

namespace mkp {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

CriterionResult result(bool pass, std::string detail) {
  CriterionResult r;
  r.pass = pass;
  r.detail = std::move(detail);
  return r;
}

std::vector<Family> pencil_families() {
  return {Family::jacobi(0.5, -0.3), Family::laguerre_neg(0.0), Family::chebyshev1()};
}

// ones, 1/(k+1)^2 + 1, kernel values g_k(1), seeded uniform draws.
std::vector<std::pair<std::string, WeightSequence>> pencil_weights(const RecurrenceCoefficients& rc,
                                                                    std::size_t count) {
  std::vector<double> decay(count);
  for (std::size_t k = 0; k < count; ++k) decay[k] = 1.0 / ((k + 1.0) * (k + 1.0)) + 1.0;
  return {{"ones", WeightSequence(std::vector<double>(count, 1.0))},
          {"1/(k+1)^2+1", WeightSequence(decay)},
          {"kernel:t0=1", generate_weights(rc, PlainKernel{1.0}, count)},
          {"random", WeightSequence(random_weights(kDefaultSeed, count))}};
}

CriterionResult pencil_kernel_equivalence_check() {
  constexpr std::size_t n_max = 25;
  double worst = 0.0;
  std::string where;
  for (const Family& f : pencil_families()) {
    const RecurrenceCoefficients rc = recurrence_coefficients(f, n_max + 2);
    const auto lambdas = default_sample_points(f, 20);
    for (const auto& [label, w] : pencil_weights(rc, n_max + 3)) {
      const EquivalenceReport r = pencil_kernel_equivalence(rc, w, n_max, lambdas);
      if (r.max_relative >= worst) {
        worst = r.max_relative;
        where = f.name() + " " + label;
      }
    }
  }
  return result(worst <= 1e-9, "max rel " + num(worst) + " (" + where + ") <= 1e-9, 12 cases, n <= 25");
}

CriterionResult pencil_paths() {
  constexpr std::size_t n = 200;
  double worst = 0.0;
  for (const Family& f : pencil_families()) {
    const RecurrenceCoefficients rc = recurrence_coefficients(f, n + 1);
    for (const auto& [label, w] : pencil_weights(rc, n + 2)) {
      const JacobiTypePencil formulas = build_pencil_formulas(rc, w, n - 1);
      worst = std::max(worst, pencil_path_difference(formulas, build_pencil_matrices(rc, w, n)));
    }
  }
  return result(worst <= 1e-12, "max interior rel diff " + num(worst) + " <= 1e-12 at N = 200");
}

CriterionResult jacobi_gram() {
  double worst = 0.0;
  double worst_global = 0.0;
  bool positive = true;
  std::size_t cases = 0;
  for (double a : {-0.5, 0.0, 1.7})
    for (double b : {-0.5, 0.0, 1.7})
      for (double c : {0.1, 1.0, 10.0})
        for (double t0 : {1.0, 2.0}) {
          const GramCertificate cert = certify_gram(sobolev_gram(Family::jacobi(a, b), c, t0, 12), 1e-9);
          worst = std::max(worst, cert.max_pair_ratio);
          worst_global = std::max(worst_global, cert.global_ratio);
          positive = positive && cert.positive_diagonal;
          ++cases;
        }
  return result(positive && worst <= 1e-9, std::to_string(cases) + " cases, diagonal positive: " +
                                               (positive ? "yes" : "no") + ", max |G_nm|/min(G_nn,G_mm) " +
                                               num(worst) + " <= 1e-9 (whole-matrix ratio " + num(worst_global) +
                                               ", reported)");
}

CriterionResult laguerre_gram() {
  double worst = 0.0;
  double worst_global = 0.0;
  bool positive = true;
  std::size_t cases = 0;
  for (double a : {0.0, 0.5, 3.0})
    for (double c : {0.1, 1.0, 10.0})
      for (double t0 : {0.0, 1.0}) {
        const GramCertificate cert = certify_gram(sobolev_gram(Family::laguerre_neg(a), c, t0, 12), 1e-9);
        worst = std::max(worst, cert.max_pair_ratio);
        worst_global = std::max(worst_global, cert.global_ratio);
        positive = positive && cert.positive_diagonal;
        ++cases;
      }
  return result(positive && worst <= 1e-9, std::to_string(cases) + " cases, diagonal positive: " +
                                               (positive ? "yes" : "no") + ", max |G_nm|/min(G_nn,G_mm) " +
                                               num(worst) + " <= 1e-9 (whole-matrix ratio " + num(worst_global) +
                                               ", reported)");
}

double coeff_gap(double got, double want) {
  const double abs_err = std::abs(got - want);
  return std::max(abs_err, abs_err / std::abs(want));
}

CriterionResult chebyshev_fixture() {
  double worst = 0.0;
  double worst_root = 0.0;
  for (double c : {0.1, 1.0, 10.0}) {
    const Polynomial t1 = std::numbers::pi * jacobi_sobolev_poly(-0.5, -0.5, c, 1.0, 1);
    const Polynomial t2 = std::numbers::pi * jacobi_sobolev_poly(-0.5, -0.5, c, 1.0, 2);
    worst = std::max({worst, coeff_gap(t1.coefficient(0), 1.0 / c), coeff_gap(t1.coefficient(1), 2.0 / (c + 1.0))});
    worst = std::max({worst, coeff_gap(t2.coefficient(0), 1.0 / c - 2.0 / (c + 4.0)),
                      coeff_gap(t2.coefficient(1), 2.0 / (c + 1.0)), coeff_gap(t2.coefficient(2), 4.0 / (c + 4.0))});
    const double root = -t1.coefficient(0) / t1.coefficient(1);
    worst_root = std::max(worst_root, coeff_gap(root, -(c + 1.0) / (2.0 * c)));
  }
  return result(worst <= 1e-12 && worst_root <= 1e-12,
                "coefficient gap " + num(worst) + ", t_1 root gap " + num(worst_root) + " <= 1e-12");
}

CriterionResult chebyshev_bounds() {
  bool ok = true;
  double value_margin = 1e300;
  double deriv_margin = 1e300;
  for (double c : {0.01, 1.0, 100.0})
    for (std::size_t n = 0; n <= 20; ++n) {
      const ChebyshevBounds b = chebyshev_bounds_check(c, n, 10001);
      ok = ok && b.ok;
      value_margin = std::min(value_margin, b.value_bound - b.max_val);
      deriv_margin = std::min(deriv_margin, b.deriv_bound - b.max_deriv);
    }
  return result(ok, "all 63 (c, n) grids within bounds; min slack value " + num(value_margin) + ", derivative " +
                        num(deriv_margin));
}

std::vector<Family> classical_families() {
  return {Family::jacobi(0.5, -0.3), Family::jacobi(-0.5, 1.7), Family::jacobi(0.0, 0.0), Family::chebyshev1(),
          Family::laguerre_neg(0.0),  Family::laguerre_neg(0.5),  Family::laguerre_neg(3.0)};
}

CriterionResult eigen_relations() {
  double worst = 0.0;
  for (const Family& f : classical_families())
    for (double c : {0.1, 1.0, 10.0}) worst = std::max(worst, verify_eigen_relation(f, c, 15));
  return result(worst <= 1e-11, "max rel residual " + num(worst) + " <= 1e-11, n <= 15");
}

CriterionResult kernel_images() {
  struct Case {
    Family f;
    double c;
    double t0;
  };
  const std::vector<Case> cases{{Family::jacobi(0.5, -0.3), 2.0, 1.5},  {Family::laguerre_neg(1.0), 0.5, 0.0},
                                {Family::chebyshev1(), 1.0, 1.0},         {Family::jacobi(0.0, 0.0), 0.1, 2.0},
                                {Family::laguerre_neg(0.0), 1.0, 0.5}};
  double worst = 0.0;
  for (const auto& k : cases) worst = std::max(worst, verify_kernel_image(k.f, k.c, k.t0, 12));
  return result(worst <= 1e-10, "max rel residual " + num(worst) + " <= 1e-10, n <= 12");
}

CriterionResult composed_equations() {
  struct Case {
    Family f;
    double c;
  };
  const std::vector<Case> cases{{Family::chebyshev1(), 1.0},
                                {Family::laguerre_neg(0.0), 2.0},
                                {Family::jacobi(0.5, -0.3), 2.0},
                                {Family::jacobi(1.7, -0.5), 0.1},
                                {Family::laguerre_neg(1.5), 0.5}};
  double shifted = 0.0;
  double unshifted = 0.0;
  for (const auto& k : cases) {
    const ComposedResidual r = verify_composed_equation(k.f, k.c, 10);
    shifted = std::max(shifted, r.shifted);
    unshifted = std::max(unshifted, r.unshifted);
  }
  const bool shifted_reading = shifted <= unshifted;
  const double adopted = std::min(shifted, unshifted);
  return result(adopted <= 1e-9, "reading " + std::string(shifted_reading ? "shifted (alpha+1)" : "unshifted") +
                                     ": residual " + num(adopted) + " <= 1e-9 (shifted " + num(shifted) +
                                     ", unshifted " + num(unshifted) + ")");
}

CriterionResult integral_representation() {
  double worst = 0.0;
  const SpecialFnConfig cfg;
  for (double a : {0.0, 0.5, 2.0})
    for (int c : {1, 2, 3})
      for (std::size_t n = 0; n <= 6; ++n)
        for (double x : {-0.5, -1.0, -5.0}) worst = std::max(worst, compare_integral_rep(a, c, n, x, cfg).relative_error);
  return result(worst <= 1e-5, "max rel error " + num(worst) + " <= 1e-5 over 189 (alpha, c, n, x)");
}

double chebyshev_t2_discriminant(double c) {
  return quadratic_discriminant(std::numbers::pi * jacobi_sobolev_poly(-0.5, -0.5, c, 1.0, 2));
}

CriterionResult discriminant_witness() {
  const double d_cheb = chebyshev_t2_discriminant(0.1);
  // Largest c on a log grid where the Laguerre L_2(0, c, 0) discriminant is negative.
  double found = 0.0;
  for (int i = 0; i <= 60; ++i) {
    const double c = std::pow(10.0, -3.0 + 3.0 * i / 60.0);
    if (quadratic_discriminant(laguerre_sobolev_poly(0.0, c, 0.0, 2)) < 0.0) found = c;
  }
  // Sign-change point of the Chebyshev discriminant, reported only.
  double lo = 0.1;
  double hi = 100.0;
  const bool bracket = chebyshev_t2_discriminant(hi) > 0.0;
  if (bracket)
    for (int it = 0; it < 100; ++it) {
      const double mid = std::sqrt(lo * hi);
      (chebyshev_t2_discriminant(mid) < 0.0 ? lo : hi) = mid;
    }
  return result(d_cheb < 0.0 && found > 0.0,
                "D(pi t_2, c=0.1) = " + num(d_cheb) + "; Laguerre L_2 negative up to c = " + num(found) +
                    " on the scan; Chebyshev sign change near c* = " + (bracket ? num(lo) : std::string("n/a")));
}

CriterionResult quadrature_certification() {
  std::vector<Family> families{Family::chebyshev1(),       Family::jacobi(0.5, -0.3),  Family::laguerre_neg(0.0),
                               Family::laguerre_neg(0.5),  Family::laguerre_neg(3.0),  Family::laguerre_neg(-0.5)};
  for (double a : {-0.5, 0.0, 1.7})
    for (double b : {-0.5, 0.0, 1.7}) families.push_back(Family::jacobi(a, b));
  double worst = 0.0;
  std::string where;
  std::size_t rules = 0;
  for (const Family& f : families) {
    const RecurrenceCoefficients rc = recurrence_coefficients(f, 60);
    for (std::size_t n = 1; n <= 60; ++n) {
      const ExactnessReport r = check_moment_exactness(gauss_rule(rc, n));
      ++rules;
      if (r.max_relative_error >= worst) {
        worst = r.max_relative_error;
        where = f.name() + " N=" + std::to_string(n) + " degree " + std::to_string(r.worst_degree);
      }
    }
  }
  return result(worst <= 1e-10, std::to_string(rules) + " rules, max moment error " + num(worst) + " (" + where +
                                    ") <= 1e-10");
}

}  // namespace

std::vector<Criterion> acceptance_criteria() {
  return {
      {1, "pencil/kernel equivalence", 10.0, pencil_kernel_equivalence_check},
      {2, "pencil path equality", 1.0, pencil_paths},
      {3, "Jacobi Sobolev orthogonality", 5.0, jacobi_gram},
      {4, "Laguerre Sobolev orthogonality", 5.0, laguerre_gram},
      {5, "Chebyshev closed forms", 0.0, chebyshev_fixture},
      {6, "Chebyshev bounds", 2.0, chebyshev_bounds},
      {7, "eigen-relations", 0.0, eigen_relations},
      {8, "kernel-image identities", 0.0, kernel_images},
      {9, "composed equations", 0.0, composed_equations},
      {10, "integral representation", 60.0, integral_representation},
      {11, "discriminant witness", 0.0, discriminant_witness},
      {12, "quadrature certification", 0.0, quadrature_certification},
  };
}

CriterionResult run_criterion(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = c.run();
  } catch (const std::exception& e) {
    r = result(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.id = c.id;
  r.name = c.name;
  r.time_limit = c.time_limit;
  if (c.time_limit > 0.0 && r.seconds > c.time_limit) {
    r.pass = false;
    r.detail += "; runtime over the " + num(c.time_limit) + " s limit";
  }
  return r;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.name << ": " << r.detail
     << " (" << num(r.seconds) << " s";
  if (r.time_limit > 0.0) os << ", limit " << num(r.time_limit) << " s";
  os << ")";
  return os.str();
}

bool run_acceptance(std::ostream& os) {
  bool all = true;
  for (const Criterion& c : acceptance_criteria()) {
    const CriterionResult r = run_criterion(c);
    os << format_result(r) << std::endl;
    all = all && r.pass;
  }
  return all;
}

}  // namespace mkp
