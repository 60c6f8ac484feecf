#ifndef MKP_REPORT_HPP_
#define MKP_REPORT_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace mkp {

inline constexpr const char* kVersion = "0.1.0";

struct Check {
  std::string name;
  /// The library operation the check exercises.
  std::string ref;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Machine-readable result of one CLI command.
struct ReportDocument {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::vector<Check> checks;
  /// Reported values that are not pass/fail checks.
  std::map<std::string, std::string> diagnostics;
  std::uint64_t seed = 0;
  std::string precision = "double";
  /// ISO-8601 UTC; the only field allowed to differ between identical runs.
  std::string timestamp;
  std::string version = kVersion;

  /// pass = measured <= tolerance (NaN fails).
  Check& add(std::string name, std::string ref, double measured, double tolerance);
  /// Caller-defined pass flag, for checks that are not a plain bound.
  Check& add(std::string name, std::string ref, double measured, double tolerance, bool pass);
  void set(const std::string& key, double value);
  void set(const std::string& key, const std::string& value);
  void note(const std::string& key, double value);
  void note(const std::string& key, const std::string& value);

  bool all_passed() const;
  std::string to_json() const;
};

std::string utc_timestamp();

/// %.17g: round-trips every double.
std::string format_number(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::string to_string() const;
};

/// Writes to a sibling temporary file, then renames over the target.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/**
 * Output location: `explicit_path` if non-empty, otherwise `default_name`
 * inside $MKP_OUTPUT_DIR (or the working directory when unset).
 */
std::filesystem::path resolve_output_path(const std::string& explicit_path, const std::string& default_name);

}  // namespace mkp

#endif  // MKP_REPORT_HPP_
