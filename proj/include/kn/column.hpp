#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "kn/letter.hpp"

namespace kn {

// Strictly increasing sequence of letters of [±n], displayed vertically.
// Any strictly increasing sequence is a valid Column (length up to 2n);
// admissibility is a separate predicate.
struct Column {
  int rank = 0;
  std::vector<Letter> letters;

  int size() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const Column&, const Column&) = default;
};

// Validating constructors; throw on letters out of [±n] or not strictly
// increasing.
Column make_column(int rank, std::vector<Letter> letters);
Column make_column(int rank, std::initializer_list<int> values);

struct OneCCReport {
  bool admissible = true;
  // Minimal z such that z and z̄ are both in the column and more than z
  // entries have absolute value ≤ z; present iff not admissible.
  std::optional<int> break_letter;
};

// One-column condition: for every pair i, ī with i in row a from the top and
// ī in row b from the bottom, a + b ≤ i.
OneCCReport check_1cc(const Column& c);
bool is_admissible(const Column& c);

struct SplitPair {
  Column left;   // ℓC: same barred part as C, unbarred z_i replaced by t_i
  Column right;  // rC: same unbarred part as C, barred z̄_i replaced by t̄_i
};

// Splits an admissible column using the greedy witness set
// J = {t_1 > ... > t_r}: t_1 is the greatest letter of [n] below z_1 with
// neither t_1 nor t̄_1 in C, and t_i the greatest below min(t_{i-1}, z_i)
// with the same exclusion. Throws not_admissible if the 1CC fails.
SplitPair split(const Column& c);

// Dual condition: for every pair i, ī with i in row a and ī in row b, both
// counted from the top, b - a ≤ n - i.
bool check_coadmissible(const Column& c);

// Φ(C): unbarred entries from ℓC, barred entries from rC. Maps admissible
// columns bijectively onto coadmissible ones.
Column phi(const Column& c);

// Inverse of Φ, computed by the mirror greedy: pairs t_r < ... < t_1 of C
// are lifted to z_i = min{z > max(t_i, z_{i+1}) : z, z̄ ∉ C}, smallest pair
// first. Throws not_coadmissible when no lift exists.
Column phi_inverse(const Column& c);

namespace detail {
// The greedy witness as (z_i, t_i) pairs, or nullopt when the greedy search
// gets stuck. Empty vector for columns without symmetric pairs.
std::optional<std::vector<std::pair<int, int>>> split_witness(const Column& c);
}  // namespace detail

}  // namespace kn
