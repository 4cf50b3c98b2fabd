#include "einalg/report.hpp"

#include <algorithm>

namespace einalg {

double CheckReport::max_residual() const {
  double m = 0.0;
  for (const auto& [k, v] : residuals) m = std::max(m, v);
  return m;
}

CheckReport CheckReport::make(std::string name, std::map<std::string, double> residuals,
                              double tolerance) {
  CheckReport r;
  r.name = std::move(name);
  r.residuals = std::move(residuals);
  r.tolerance = tolerance;
  const double mx = r.max_residual();
  r.passed = mx <= tolerance;
  r.marginal = r.passed && mx > tolerance / 10.0;
  return r;
}

}  // namespace einalg
