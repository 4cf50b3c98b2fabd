#ifndef EINALG_REPORT_HPP
#define EINALG_REPORT_HPP

#include <map>
#include <string>

namespace einalg {

/// Named residual norms plus the pass/fail verdict for one identity or
/// predicate check. passed holds iff every residual <= tolerance; marginal
/// flags a pass whose largest residual lies within a factor 10 of the
/// tolerance, so near-threshold results are never silently absorbed.
struct CheckReport {
  std::string name;
  std::map<std::string, double> residuals;
  double tolerance = 0.0;
  bool passed = false;
  bool marginal = false;

  double max_residual() const;

  /// Builds the verdict from the residuals already stored.
  static CheckReport make(std::string name, std::map<std::string, double> residuals,
                          double tolerance);
};

}  // namespace einalg

#endif  // EINALG_REPORT_HPP
