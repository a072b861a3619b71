#pragma once

#include <functional>
#include <vector>

#include "kn/tableau.hpp"

namespace kn {

// All admissible columns of the given length over [±n], ordered
// lexicographically by rank.
std::vector<Column> admissible_columns(int n, int length);

// Visits every element of KN(λ, n) exactly once, in a deterministic order.
// Columns are filled left to right, pruning by the split-form row condition
// per completed column pair. Shapes with more than n rows have no valid
// filling and produce no output.
void for_each_kn(const Partition& lambda, int n,
                 const std::function<void(const SkewTableau&)>& fn);

std::vector<SkewTableau> enumerate_kn(const Partition& lambda, int n);

}  // namespace kn
