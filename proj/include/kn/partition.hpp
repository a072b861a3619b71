#pragma once

#include <vector>

#include "kn/errors.hpp"

namespace kn {

// Cell of a Young diagram, 1-indexed, English notation: row 1 is the top
// row, column 1 the leftmost column.
struct Cell {
  int row = 0;
  int col = 0;

  friend bool operator==(Cell, Cell) = default;
};

// Weakly decreasing list of nonnegative integers. Trailing zeros are not
// stored, so (2,1,0) and (2,1) compare equal.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int num_parts() const { return static_cast<int>(parts_.size()); }
  // 1-indexed part, 0 beyond the last stored part.
  int part(int i) const {
    return i >= 1 && i <= num_parts() ? parts_[i - 1] : 0;
  }
  int cells() const;
  bool empty() const { return parts_.empty(); }

  // other ⊆ this, entrywise.
  bool contains(const Partition& other) const;

  // λ'_j = #{i : λ_i ≥ j}.
  Partition conjugate() const;
  int conjugate_part(int j) const;

  const std::vector<int>& parts() const { return parts_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// All nonempty partitions with at most max_cells cells and at most max_parts
// parts, in a fixed deterministic order.
std::vector<Partition> partitions_up_to(int max_cells, int max_parts);

// Skew diagram μ/ν: the cells of μ not in ν. Row r holds columns
// ν_r+1 .. μ_r; column j holds rows ν'_j+1 .. μ'_j.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }

  int num_columns() const { return outer_.part(1); }
  int num_rows() const { return outer_.num_parts(); }
  int column_top(int j) const { return inner_.conjugate_part(j) + 1; }
  int column_bottom(int j) const { return outer_.conjugate_part(j); }
  int column_length(int j) const {
    return column_bottom(j) - column_top(j) + 1;
  }
  int row_begin(int r) const { return inner_.part(r) + 1; }
  int row_end(int r) const { return outer_.part(r); }

  int cells() const { return outer_.cells() - inner_.cells(); }
  bool straight() const { return inner_.empty(); }
  bool contains_cell(Cell c) const;

  // Removable cells of the inner shape (candidate puncture sites).
  std::vector<Cell> inner_corners() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_, inner_;
};

}  // namespace kn
