#ifndef MKP_ACCEPTANCE_HPP_
#define MKP_ACCEPTANCE_HPP_

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace mkp {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  /// Measured values and limits, one line.
  std::string detail;
  double seconds = 0.0;
  double time_limit = 0.0;  // 0: no runtime requirement
};

struct Criterion {
  int id;
  std::string name;
  double time_limit;
  std::function<CriterionResult()> run;
};

/// The twelve acceptance criteria in order.
std::vector<Criterion> acceptance_criteria();

/// Runs one criterion, timing it and turning exceptions into failures.
CriterionResult run_criterion(const Criterion& c);

/// "PASS  3  name: detail (0.01 s)".
std::string format_result(const CriterionResult& r);

/// Runs everything, prints one line per criterion; true iff all pass.
bool run_acceptance(std::ostream& os);

}  // namespace mkp

#endif  // MKP_ACCEPTANCE_HPP_
