#ifndef EINALG_SHAPE_HPP
#define EINALG_SHAPE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "einalg/errors.hpp"

namespace einalg {

using Index = std::int64_t;
using ModeList = std::vector<Index>;

/// Ordered row-mode dimensions (I_1,...,I_M) plus ordered column-mode
/// dimensions (J_1,...,J_N). A tensor with this shape acts as a linear map
/// from the column-mode space to the row-mode space under the Einstein
/// product; either group may be empty (its product is then 1), but not both.
class EinsteinShape {
 public:
  EinsteinShape() = default;
  EinsteinShape(ModeList row_modes, ModeList col_modes);

  const ModeList& row_modes() const { return row_modes_; }
  const ModeList& col_modes() const { return col_modes_; }
  Index row_count() const { return row_count_; }
  Index col_count() const { return col_count_; }
  Index size() const { return row_count_ * col_count_; }

  /// Row and column mode lists are elementwise identical.
  bool square() const { return row_modes_ == col_modes_; }

  /// Shape of the conjugate transpose: mode groups swapped.
  EinsteinShape transposed() const { return {col_modes_, row_modes_}; }

  bool operator==(const EinsteinShape& o) const {
    return row_modes_ == o.row_modes_ && col_modes_ == o.col_modes_;
  }
  bool operator!=(const EinsteinShape& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  ModeList row_modes_;
  ModeList col_modes_;
  Index row_count_ = 1;
  Index col_count_ = 1;
};

/// Product of a mode list, throwing when a dimension is < 1 or the product
/// exceeds 2^31.
Index mode_product(const ModeList& modes);

std::string mode_list_to_string(const ModeList& modes);

}  // namespace einalg

#endif  // EINALG_SHAPE_HPP
