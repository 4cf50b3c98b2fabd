#include "einalg/shape.hpp"

#include <sstream>

namespace einalg {

namespace {
constexpr Index kMaxProduct = Index{1} << 31;
}

Index mode_product(const ModeList& modes) {
  Index prod = 1;
  for (Index d : modes) {
    if (d < 1) {
      throw ShapeMismatch("mode dimension must be >= 1, got " + std::to_string(d));
    }
    if (prod > kMaxProduct / d) {
      throw ShapeMismatch("mode product exceeds 2^31 in " + mode_list_to_string(modes));
    }
    prod *= d;
  }
  return prod;
}

std::string mode_list_to_string(const ModeList& modes) {
  std::ostringstream os;
  os << '[';
  for (size_t k = 0; k < modes.size(); ++k) {
    if (k) os << ',';
    os << modes[k];
  }
  os << ']';
  return os.str();
}

EinsteinShape::EinsteinShape(ModeList row_modes, ModeList col_modes)
    : row_modes_(std::move(row_modes)), col_modes_(std::move(col_modes)) {
  if (row_modes_.empty() && col_modes_.empty()) {
    throw ShapeMismatch("at least one mode group must be nonempty");
  }
  row_count_ = mode_product(row_modes_);
  col_count_ = mode_product(col_modes_);
}

std::string EinsteinShape::to_string() const {
  return mode_list_to_string(row_modes_) + "x" + mode_list_to_string(col_modes_);
}

}  // namespace einalg
