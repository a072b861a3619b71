#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "kn/tableau.hpp"

namespace kn {

enum class SlideKind {
  vertical,            // puncture swaps with the cell beneath it
  horizontal_barred,   // barred β moves from C2 into Φ(C1)
  horizontal_unbarred  // unbarred β moves from Φ(C2) into C1
};

const char* to_string(SlideKind k);

struct SlideStep {
  Cell puncture;  // puncture position before the step
  SlideKind kind = SlideKind::vertical;
  Letter moved;   // the slid entry
  // horizontal_unbarred only: the receiving column broke the one-column
  // condition at this letter; the letter and its bar were erased and the
  // column footprint lost its top and bottom cells.
  std::optional<int> erased;
};

using SlideTrace = std::vector<SlideStep>;

// Skew tableau with one cell holding the puncture ∗. Letters of the
// punctured column fill its footprint in increasing order, skipping the
// punctured cell; cols[j-1] never stores the puncture.
struct PuncturedTableau {
  int rank = 0;
  Partition outer, inner;
  std::vector<std::vector<Letter>> cols;
  Cell punct;

  // Puncture at a removable cell of the inner shape (start of a forward
  // slide); the cell leaves the inner shape.
  static PuncturedTableau at_inner_corner(const SkewTableau& t, Cell c);
  // Puncture at an addable cell of the outer shape (start of a reverse
  // slide); the outer shape grows by the cell.
  static PuncturedTableau at_outer_corner(const SkewTableau& t, Cell c);

  int num_columns() const { return outer.part(1); }
  int column_top(int j) const { return inner.conjugate_part(j) + 1; }
  int column_bottom(int j) const { return outer.conjugate_part(j); }
  // nullopt at the puncture and outside the diagram.
  std::optional<Letter> entry(Cell c) const;

  // Forward slides end where nothing lies beneath or right of the puncture;
  // reverse slides end where nothing lies above or left of it.
  bool forward_done() const;
  bool reverse_done() const;

  // Drop the punctured cell from the outer shape (end of a forward slide).
  SkewTableau finish_forward() const;
  // Hand the punctured cell to the inner shape (end of a reverse slide).
  SkewTableau finish_reverse() const;

  friend bool operator==(const PuncturedTableau&,
                         const PuncturedTableau&) = default;
};

// Columns admissible ignoring the puncture and split-form rows weakly
// increasing ignoring the puncture.
bool punctured_admissible(const PuncturedTableau& p);

// One elementary forward step. α is the entry under the puncture in rC1 and
// β the entry right of the puncture in rC1 (that is, in ℓC2): α ≤ β or β
// absent slides vertically, otherwise β slides horizontally according to its
// sign. Returns nullopt when both are absent (the slide is complete).
std::optional<std::pair<PuncturedTableau, SlideStep>> try_forward_slide(
    const PuncturedTableau& p);

// As above but validates the input state and throws no_move at completion.
std::pair<PuncturedTableau, SlideStep> forward_slide(const PuncturedTableau& p);

// One elementary reverse step: the unique admissible predecessor state whose
// forward step reproduces the current one. Throws slide_would_lose_cells
// when none exists (a forward contraction would be required).
std::pair<PuncturedTableau, SlideStep> reverse_step(const PuncturedTableau& p);

// Moves the empty cell from an addable outer corner into the inner shape,
// growing both shapes by one cell.
SkewTableau reverse_slide(const SkewTableau& t, Cell outer_corner,
                          SlideTrace* trace = nullptr);

using CornerChooser = std::function<Cell(const std::vector<Cell>&)>;

// Repeatedly punctures an inner corner and slides to completion until the
// inner shape is empty. The default picks the bottom-most (then right-most)
// corner; the result does not depend on the choice.
SkewTableau rectify(const SkewTableau& t, SlideTrace* trace = nullptr);
SkewTableau rectify(const SkewTableau& t, const CornerChooser& choose,
                    SlideTrace* trace = nullptr);

// Reverse-slides the straight two-column tableau C1 C2 (|C1| = p ≥ q = |C2|)
// from the outside corners under column 2 until the column lengths are
// swapped: column 1 ends with q cells in rows p-q+1..p, column 2 with p
// cells in rows 1..p.
SkewTableau swap_column_lengths(const Column& c1, const Column& c2);

// The unique skew tableau with the given column lengths (a rearrangement of
// T's) that rectifies to the straight tableau T, built by adjacent length
// swaps. Adjacent columns sit top-flush where lengths weakly decrease and
// bottom-flush where they increase.
SkewTableau skew_variant(const SkewTableau& t,
                         const std::vector<int>& target_lengths);

Column last_column(const SkewTableau& t);

}  // namespace kn
