#pragma once

#include <optional>
#include <vector>

#include "kn/tableau.hpp"

namespace kn {

// Classical (unbarred) right key, computed entirely inside the stand-alone
// grid model below: column j of the key is the last column obtained by
// classically swapping the lengths of the suffix starting at column j. The
// implementation shares no sliding code with the symplectic routines, which
// makes it an independent cross-check on barless input. Throws not_type_a
// when a barred letter is present.
SkewTableau right_key_type_a(const SkewTableau& t);

namespace typea {

// Minimal stand-alone model of classical jeu de taquin on unbarred skew
// tableaux.
struct ClassicalState {
  Partition outer, inner;
  // entries[r-1][c-1]; 0 marks the hole or an absent cell.
  std::vector<std::vector<int>> entries;
  Cell punct;

  friend bool operator==(const ClassicalState&,
                         const ClassicalState&) = default;
};

// Punctures a removable inner cell of an unbarred tableau.
ClassicalState classical_from_tableau(const SkewTableau& t, Cell punct);

// One classical forward slide: compare the entry below the hole with the
// entry to its right, swap with the smaller (ties go down). Returns nullopt
// when neither exists.
std::optional<std::pair<ClassicalState, bool>> classical_forward_slide(
    const ClassicalState& s);  // bool: vertical

// One classical reverse slide: the unique semistandard predecessor whose
// forward slide reproduces the current state.
ClassicalState classical_reverse_step(const ClassicalState& s);

// Swaps the lengths of a straight two-column pair (|a| = p ≥ q = |b|) by
// classical reverse slides from the corners under the second column.
std::pair<std::vector<int>, std::vector<int>> classical_swap(
    const std::vector<int>& a, const std::vector<int>& b);

}  // namespace typea

}  // namespace kn
