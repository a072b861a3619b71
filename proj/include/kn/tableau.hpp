#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kn/column.hpp"
#include "kn/partition.hpp"

namespace kn {

// Entry i-1 holds (#i) - (#ī) for the tableau it describes.
using WeightVector = std::vector<int>;

// Filling of a skew diagram with letters of [±n], strictly increasing down
// each column. Covers straight tableaux (empty inner shape); semistandardness
// across rows is part of the Kashiwara-Nakashima check, not of this type.
class SkewTableau {
 public:
  SkewTableau() = default;
  // columns[j-1] lists column j top to bottom and must match the shape's
  // column lengths. Throws on any mismatch.
  SkewTableau(int rank, SkewShape shape,
              std::vector<std::vector<Letter>> columns);

  // Straight tableau from column letter lists; lengths must be weakly
  // decreasing.
  static SkewTableau straight(int rank,
                              const std::vector<std::vector<Letter>>& columns);

  int rank() const { return rank_; }
  const SkewShape& shape() const { return shape_; }
  int num_columns() const { return shape_.num_columns(); }
  const std::vector<Letter>& column_letters(int j) const {
    return columns_[j - 1];
  }
  Column column(int j) const { return Column{rank_, columns_[j - 1]}; }
  std::vector<int> column_lengths() const;
  std::optional<Letter> entry(Cell c) const;
  bool straight() const { return shape_.straight(); }
  bool empty() const { return shape_.cells() == 0; }

  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;

 private:
  int rank_ = 0;
  SkewShape shape_;
  std::vector<std::vector<Letter>> columns_;
};

// Each column C replaced by ℓC rC; the shape doubles columnwise. Requires
// every column admissible.
SkewTableau split_form(const SkewTableau& t);

struct KnReport {
  bool ok = true;
  std::string reason;
};

// A skew tableau is Kashiwara-Nakashima iff all columns are admissible and
// its split form is a skew SSYT.
KnReport check_kn(const SkewTableau& t);
bool is_kn(const SkewTableau& t);

WeightVector weight(const SkewTableau& t);

// Key tableau test: straight KN tableau whose column sets are nested right to
// left and whose columns never contain a symmetric pair. Throws on skew
// input.
bool is_key(const SkewTableau& t);

// The unique key tableau of weight v: column j collects sign(v_i)·i over all
// i with |v_i| ≥ j. v must have exactly n entries with |v_i| ≤ n.
SkewTableau key_from_vector(const std::vector<int>& v, int n);

// All weights in the orbit of λ under signed permutations, each yielding one
// key tableau of shape λ.
std::vector<std::vector<int>> orbit_vectors(const Partition& lambda, int n);

// Entrywise comparison in the alphabet order; shapes must agree.
bool entrywise_leq(const SkewTableau& a, const SkewTableau& b);

}  // namespace kn
