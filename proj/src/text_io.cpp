#include "kn/text_io.hpp"

#include <sstream>
#include <vector>

namespace kn {

namespace {

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

SkewTableau parse_tableau(std::istream& in, int rank) {
  std::vector<int> outer, inner;
  std::vector<std::vector<Letter>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> toks;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty() || toks[0][0] == '#') continue;
    int dots = 0;
    std::vector<Letter> entries;
    for (const std::string& s : toks) {
      if (s == ".") {
        if (!entries.empty())
          fail(Err::parse_error, "line " + std::to_string(lineno) +
                                     ": inner cells must precede entries");
        ++dots;
      } else if (is_integer(s)) {
        entries.push_back(Letter{std::stoi(s)});
      } else {
        fail(Err::parse_error,
             "line " + std::to_string(lineno) + ": bad token \"" + s + "\"");
      }
    }
    inner.push_back(dots);
    outer.push_back(dots + static_cast<int>(entries.size()));
    rows.push_back(std::move(entries));
  }
  Partition mu, nu;
  try {
    mu = Partition(outer);
    nu = Partition(inner);
  } catch (const DomainError& e) {
    fail(Err::parse_error, std::string("rows do not form a skew shape: ") +
                               e.what());
  }
  SkewShape shape(mu, nu);
  std::vector<std::vector<Letter>> cols(shape.num_columns());
  for (int r = 1; r <= static_cast<int>(rows.size()); ++r)
    for (int c = shape.row_begin(r); c <= shape.row_end(r); ++c)
      cols[c - 1].push_back(rows[r - 1][c - 1 - shape.inner().part(r)]);
  return SkewTableau(rank, shape, cols);
}

SkewTableau parse_tableau(const std::string& text, int rank) {
  std::istringstream in(text);
  return parse_tableau(in, rank);
}

std::string format_tableau(const SkewTableau& t, bool bars) {
  std::string out;
  for (int r = 1; r <= t.shape().num_rows(); ++r) {
    if (r > 1) out += "\n";
    bool first = true;
    for (int c = 1; c <= t.shape().inner().part(r); ++c) {
      if (!first) out += " ";
      out += ".";
      first = false;
    }
    for (int c = t.shape().row_begin(r); c <= t.shape().row_end(r); ++c) {
      if (!first) out += " ";
      Letter a = *t.entry(Cell{r, c});
      out += bars ? to_string_bars(a) : to_string(a);
      first = false;
    }
  }
  return out;
}

std::string format_weight(const WeightVector& w) {
  std::string out = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(w[i]);
  }
  return out + ")";
}

nlohmann::json tableau_json(const SkewTableau& t) {
  nlohmann::json j;
  j["shape"] = t.shape().outer().parts();
  j["inner_shape"] = t.shape().inner().parts();
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 1; r <= t.shape().num_rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = t.shape().row_begin(r); c <= t.shape().row_end(r); ++c)
      row.push_back(t.entry(Cell{r, c})->value);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  j["weight"] = weight(t);
  return j;
}

}  // namespace kn
