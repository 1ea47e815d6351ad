#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <vector>

namespace nwunion {

/// A position in the ambient n x n matrix, 1-based. Row 1 is the top row and
/// column 1 the leftmost column.
struct Cell {
  int row = 0;
  int col = 0;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Cell& c) {
  return os << '(' << c.row << ',' << c.col << ')';
}

using CellList = std::vector<Cell>;

}  // namespace nwunion
