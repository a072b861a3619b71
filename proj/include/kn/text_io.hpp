#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "kn/tableau.hpp"

namespace kn {

// Text format shared by the CLI: one line per row, top to bottom, entries
// separated by single spaces, barred letters as negative integers, inner
// cells as ".". Blank lines and lines starting with "#" are ignored. Inner
// cells must form a prefix of their row.
SkewTableau parse_tableau(std::istream& in, int rank);
SkewTableau parse_tableau(const std::string& text, int rank);

std::string format_tableau(const SkewTableau& t, bool bars = false);

std::string format_weight(const WeightVector& w);  // "(0, 2, 1)"

nlohmann::json tableau_json(const SkewTableau& t);

}  // namespace kn
