#ifndef MKP_COMMANDS_HPP_
#define MKP_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mkp/families.hpp"
#include "mkp/report.hpp"
#include "mkp/weight_source.hpp"

namespace mkp {

/// Thrown for violated preconditions; the CLI maps it to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FamilyArgs {
  std::string name = "jacobi";  // jacobi | laguerre | chebyshev
  double alpha = 0.5;
  double beta = -0.3;

  Family make() const;
  void record(ReportDocument& doc) const;
};

struct OutputArgs {
  std::string json_path;  // empty: $MKP_OUTPUT_DIR/<command>_report.json
  std::string csv_path;   // empty: no CSV unless the command always writes one
  bool write_json = true;
};

struct PencilArgs {
  FamilyArgs family;
  std::string c_source = "ones";
  std::size_t n_max = 12;
  std::size_t matrix_n = 200;
  std::uint64_t seed = kDefaultSeed;
  double tol_equiv = 1e-9;
  double tol_path = 1e-12;
  double tol_residual = 1e-10;
  double tol_kernel_residual = 1e-9;
  OutputArgs out;
};

struct GramArgs {
  FamilyArgs family;
  double c = 2.0;
  std::optional<double> t0;  // default: 1.5 for Jacobi, 1 for Chebyshev, 0 for Laguerre
  std::size_t n_max = 12;
  std::size_t quad_n = 0;  // 0: n_max + 2
  double tol = 1e-9;
  OutputArgs out;
};

struct DiffcheckArgs {
  FamilyArgs family;
  double c = 1.0;
  std::optional<double> t0;  // kernel-image point; default: support edge
  std::size_t n_max = 10;
  double tol_eigen = 1e-11;
  double tol_image = 1e-10;
  double tol_composed = 1e-9;
  OutputArgs out;
};

struct IntegralcheckArgs {
  double alpha = 0.0;
  double c = 1.0;  // must be a positive integer
  std::size_t n_max = 6;
  std::vector<double> xs{-0.5, -1.0, -5.0};
  double tol = 1e-5;
  double tol_n0 = 1e-10;
  double tol_partial = 1e-10;
  OutputArgs out;
};

struct PlotdataArgs {
  std::string what = "tn";  // tn | P | L | kernel
  FamilyArgs family;
  double c = 1.0;
  std::optional<double> t0;
  std::size_t n = 5;
  std::optional<double> lo;
  std::optional<double> hi;
  std::size_t points = 1001;
  OutputArgs out;
};

ReportDocument cmd_pencil(const PencilArgs& args);
ReportDocument cmd_gram(const GramArgs& args);
ReportDocument cmd_diffcheck(const DiffcheckArgs& args);
ReportDocument cmd_integralcheck(const IntegralcheckArgs& args);
ReportDocument cmd_plotdata(const PlotdataArgs& args);

/// Writes the JSON report (unless disabled) and returns where it went.
std::string emit_report(ReportDocument& doc, const OutputArgs& out);

}  // namespace mkp

#endif  // MKP_COMMANDS_HPP_
