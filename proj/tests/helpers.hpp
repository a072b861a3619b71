#pragma once

#include <string>
#include <vector>

#include "kn/enumerate.hpp"
#include "kn/tableau.hpp"
#include "kn/text_io.hpp"

namespace kntest {

inline kn::SkewTableau tab(int n, const std::string& rows) {
  return kn::parse_tableau(rows, n);
}

// The running three-column example of rank 3 and its six length variants.
inline kn::SkewTableau hexagon() { return tab(3, "1 3 -1\n3 -3\n-3"); }

struct HexVariant {
  std::vector<int> lengths;
  const char* rows;
};

inline const std::vector<HexVariant>& hexagon_variants() {
  static const std::vector<HexVariant> variants = {
      {{3, 2, 1}, "1 3 -1\n3 -3\n-3"},
      {{2, 3, 1}, ". 3 -1\n1 -3\n2 -2"},
      {{3, 1, 2}, ". . 3\n1 -3 -1\n3\n-3"},
      {{1, 3, 2}, ". 1 3\n. -3 -1\n2 -2"},
      {{2, 1, 3}, ". . 3\n. . -3\n1 -2 -1\n2"},
      {{1, 2, 3}, ". . 3\n. 1 -3\n2 -2 -1"},
  };
  return variants;
}

inline kn::SkewTableau hexagon_key() { return tab(3, "3 3 -1\n-2 -1\n-1"); }

// Straight shapes with at most max_cells cells and at most n rows.
inline std::vector<kn::Partition> shapes(int max_cells, int n) {
  return kn::partitions_up_to(max_cells, n);
}

}  // namespace kntest
