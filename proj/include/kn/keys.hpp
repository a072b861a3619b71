#pragma once

#include <utility>
#include <vector>

#include "kn/sjdt.hpp"
#include "kn/tableau.hpp"

namespace kn {

// Greedy pairing between a column D and ℓC of its right neighbour: every
// entry of ℓC, largest first, is matched with the biggest not yet matched
// entry of D that is ≤ it. Positions are 1-indexed cells.
struct Matching {
  std::vector<std::pair<int, int>> pairs;  // (position in D, position in ℓC)
  std::vector<Letter> unmatched_left;      // entries of D left unmatched, increasing
};

Matching match_columns(const Column& d, const Column& c);

struct ExtendReport {
  Matching matching;
  std::vector<Letter> appended;  // in append order
  Column column;                 // rC ∪ appended, sorted; same length as D
};

// Extension rule: for each unmatched α of D in increasing order, append the
// smallest letter γ ≥ α such that neither γ nor γ̄ occurs in rC or among the
// letters appended so far.
ExtendReport direct_extend_report(const Column& d, const Column& c);
Column direct_extend(const Column& d, const Column& c);

// First column of the right key, by direct inspection: start from rC1 and
// extend through every further column.
Column right_key_column_direct(const SkewTableau& t);

// First column of the right key via the jeu de taquin: swap column lengths
// pairwise left to right, then take the right column of the final column.
Column right_key_column_jdt(const SkewTableau& t);

enum class KeyMethod { jdt, direct };

// Right key tableau: column j is the first-column right key of the suffix
// C_j ... C_k. Both methods agree; the result is a key tableau of T's shape.
SkewTableau right_key(const SkewTableau& t, KeyMethod method);

}  // namespace kn
