#include "mkp/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

#include "json.hpp"

namespace mkp {

Check& ReportDocument::add(std::string name, std::string ref, double measured, double tolerance) {
  const bool pass = measured <= tolerance;
  return add(std::move(name), std::move(ref), measured, tolerance, pass);
}

Check& ReportDocument::add(std::string name, std::string ref, double measured, double tolerance, bool pass) {
  checks.push_back({std::move(name), std::move(ref), measured, tolerance, pass});
  return checks.back();
}

void ReportDocument::set(const std::string& key, double value) { parameters[key] = format_number(value); }

void ReportDocument::set(const std::string& key, const std::string& value) { parameters[key] = value; }

void ReportDocument::note(const std::string& key, double value) { diagnostics[key] = format_number(value); }

void ReportDocument::note(const std::string& key, const std::string& value) { diagnostics[key] = value; }

bool ReportDocument::all_passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

// Non-finite values have no JSON number form; they are written as strings.
nlohmann::json number_json(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

}  // namespace

std::string ReportDocument::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["parameters"] = parameters;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name},
                           {"ref", c.ref},
                           {"measured", number_json(c.measured)},
                           {"tolerance", number_json(c.tolerance)},
                           {"pass", c.pass}});
  }
  j["diagnostics"] = diagnostics;
  j["pass"] = all_passed();
  j["metadata"] = {{"seed", seed}, {"precision", precision}, {"timestamp", timestamp}, {"version", version}};
  return j.dump(2) + "\n";
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string CsvTable::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& row : rows) {
    if (row.size() != header.size()) throw std::logic_error("CSV row width differs from header");
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
    os << '\n';
  }
  return os.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot move output into place at '" + path.string() + "': " + ec.message());
  }
}

std::filesystem::path resolve_output_path(const std::string& explicit_path, const std::string& default_name) {
  if (!explicit_path.empty()) return explicit_path;
  const char* dir = std::getenv("MKP_OUTPUT_DIR");
  return std::filesystem::path(dir && *dir ? dir : ".") / default_name;
}

}  // namespace mkp
