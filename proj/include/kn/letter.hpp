#pragma once

#include <compare>
#include <string>

#include "kn/errors.hpp"

namespace kn {

// One symbol of the signed alphabet [±n] = {1, ..., n, n̄, ..., 1̄}.
// A barred letter ī is stored as the negative integer -i, so bar(bar(x)) = x.
// The alphabet order 1 < ... < n < n̄ < ... < 1̄ is realized through rank(),
// never through raw integer comparison.
struct Letter {
  int value = 0;

  friend bool operator==(Letter, Letter) = default;
};

inline bool is_barred(Letter a) { return a.value < 0; }
inline int absolute(Letter a) { return a.value < 0 ? -a.value : a.value; }
inline Letter bar(Letter a) { return Letter{-a.value}; }

// Position in the alphabet order, a bijection onto {1, ..., 2n}:
// rank(i) = i and rank(ī) = 2n+1-i.
inline int rank(Letter a, int n) {
  return a.value > 0 ? a.value : 2 * n + 1 + a.value;
}

inline void validate_letter(Letter a, int n) {
  if (a.value == 0 || absolute(a) > n)
    fail(Err::invalid_letter,
         "letter " + std::to_string(a.value) + " is not in [±" +
             std::to_string(n) + "]");
}

inline std::strong_ordering compare_letters(Letter a, Letter b, int n) {
  return rank(a, n) <=> rank(b, n);
}
inline bool letter_less(Letter a, Letter b, int n) {
  return rank(a, n) < rank(b, n);
}
inline bool letter_leq(Letter a, Letter b, int n) {
  return rank(a, n) <= rank(b, n);
}

inline std::string to_string(Letter a) { return std::to_string(a.value); }

// Overbar rendering for documentation output: -2 becomes "2̄" (combining
// macron). Machine formats always use the signed integer form instead.
inline std::string to_string_bars(Letter a) {
  if (!is_barred(a)) return std::to_string(a.value);
  return std::to_string(-a.value) + "̄";
}

}  // namespace kn
