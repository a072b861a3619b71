#include "kn/typea.hpp"

#include <algorithm>

namespace kn {

namespace typea {

namespace {

int at(const ClassicalState& s, int r, int c) {
  if (r < 1 || c < 1 || r > s.outer.num_parts()) return 0;
  if (c <= s.inner.part(r) || c > s.outer.part(r)) return 0;
  if (Cell{r, c} == s.punct) return 0;
  return s.entries[r - 1][c - 1];
}

bool in_shape(const ClassicalState& s, int r, int c) {
  return r >= 1 && c >= 1 && r <= s.outer.num_parts() &&
         c > s.inner.part(r) && c <= s.outer.part(r);
}

// Semistandard ignoring the hole: rows weakly increase, columns strictly
// increase, in both cases across the gap.
bool classical_valid(const ClassicalState& s) {
  for (int r = 1; r <= s.outer.num_parts(); ++r) {
    int prev = 0;
    for (int c = s.inner.part(r) + 1; c <= s.outer.part(r); ++c) {
      int v = at(s, r, c);
      if (v == 0) continue;
      if (prev != 0 && v < prev) return false;
      prev = v;
    }
  }
  for (int c = 1; c <= s.outer.part(1); ++c) {
    int prev = 0;
    for (int r = 1; r <= s.outer.num_parts(); ++r) {
      if (!in_shape(s, r, c)) continue;
      int v = at(s, r, c);
      if (v == 0) continue;
      if (prev != 0 && v <= prev) return false;
      prev = v;
    }
  }
  return true;
}

}  // namespace

ClassicalState classical_from_tableau(const SkewTableau& t, Cell punct) {
  const Partition& inner = t.shape().inner();
  if (inner.part(punct.row) != punct.col ||
      inner.part(punct.row + 1) >= punct.col)
    fail(Err::not_an_inner_corner,
         "puncture must sit on a removable inner cell");
  ClassicalState s;
  s.outer = t.shape().outer();
  std::vector<int> shrunk = inner.parts();
  shrunk[punct.row - 1] -= 1;
  s.inner = Partition(shrunk);
  s.entries.assign(s.outer.num_parts(),
                   std::vector<int>(s.outer.part(1), 0));
  for (int r = 1; r <= s.outer.num_parts(); ++r)
    for (int c = inner.part(r) + 1; c <= s.outer.part(r); ++c) {
      auto e = t.entry(Cell{r, c});
      if (e) s.entries[r - 1][c - 1] = e->value;
    }
  s.punct = punct;
  return s;
}

std::optional<std::pair<ClassicalState, bool>> classical_forward_slide(
    const ClassicalState& s) {
  int r = s.punct.row, c = s.punct.col;
  int below = at(s, r + 1, c);
  int right = at(s, r, c + 1);
  if (below == 0 && right == 0) return std::nullopt;
  ClassicalState q = s;
  bool vertical = below != 0 && (right == 0 || below <= right);
  if (vertical) {
    q.entries[r - 1][c - 1] = below;
    q.entries[r][c - 1] = 0;
    q.punct = Cell{r + 1, c};
  } else {
    q.entries[r - 1][c - 1] = right;
    q.entries[r - 1][c] = 0;
    q.punct = Cell{r, c + 1};
  }
  return {{std::move(q), vertical}};
}

ClassicalState classical_reverse_step(const ClassicalState& s) {
  int r = s.punct.row, c = s.punct.col;
  std::vector<ClassicalState> hits;
  auto consider = [&](ClassicalState q) {
    if (!classical_valid(q)) return;
    auto f = classical_forward_slide(q);
    if (f && f->first == s) hits.push_back(std::move(q));
  };
  if (int above = at(s, r - 1, c)) {
    ClassicalState q = s;
    q.entries[r - 1][c - 1] = above;
    q.entries[r - 2][c - 1] = 0;
    q.punct = Cell{r - 1, c};
    consider(std::move(q));
  }
  if (int left = at(s, r, c - 1)) {
    ClassicalState q = s;
    q.entries[r - 1][c - 1] = left;
    q.entries[r - 1][c - 2] = 0;
    q.punct = Cell{r, c - 1};
    consider(std::move(q));
  }
  if (hits.size() != 1)
    fail(Err::invalid_punctured_tableau,
         hits.empty() ? "no classical predecessor" : "ambiguous predecessor");
  return hits[0];
}

std::pair<std::vector<int>, std::vector<int>> classical_swap(
    const std::vector<int>& a, const std::vector<int>& b) {
  int p = static_cast<int>(a.size()), q = static_cast<int>(b.size());
  if (p < q) fail(Err::length_order, "first column must be at least as long");
  if (p == q) return {a, b};
  ClassicalState s;
  std::vector<int> outer(p, 1);
  for (int r = 0; r < q; ++r) outer[r] = 2;
  s.outer = Partition(outer);
  s.inner = Partition{};
  s.entries.assign(p, std::vector<int>(2, 0));
  for (int r = 0; r < p; ++r) s.entries[r][0] = a[r];
  for (int r = 0; r < q; ++r) s.entries[r][1] = b[r];
  s.punct = Cell{0, 0};
  for (int i = 1; i <= p - q; ++i) {
    std::vector<int> grown = s.outer.parts();
    grown[q + i - 1] += 1;
    s.outer = Partition(grown);
    s.punct = Cell{q + i, 2};
    while (in_shape(s, s.punct.row - 1, s.punct.col) ||
           in_shape(s, s.punct.row, s.punct.col - 1))
      s = classical_reverse_step(s);
    std::vector<int> inner = s.inner.parts();
    inner.resize(std::max<size_t>(inner.size(), s.punct.row), 0);
    inner[s.punct.row - 1] += 1;
    s.inner = Partition(inner);
    s.punct = Cell{0, 0};
  }
  std::vector<int> left, right;
  for (int r = 1; r <= s.outer.num_parts(); ++r) {
    if (in_shape(s, r, 1)) left.push_back(s.entries[r - 1][0]);
    if (in_shape(s, r, 2)) right.push_back(s.entries[r - 1][1]);
  }
  return {left, right};
}

}  // namespace typea

SkewTableau right_key_type_a(const SkewTableau& t) {
  if (!t.straight())
    fail(Err::invalid_tableau, "right keys are defined on straight tableaux");
  for (int j = 1; j <= t.num_columns(); ++j)
    for (Letter a : t.column_letters(j))
      if (is_barred(a))
        fail(Err::not_type_a,
             "tableau contains the barred letter " + to_string(a));
  auto rep = check_kn(t);  // unbarred: plain semistandardness
  if (!rep.ok) fail(Err::invalid_tableau, rep.reason);

  int k = t.num_columns();
  std::vector<std::vector<Letter>> key_cols;
  for (int j = 1; j <= k; ++j) {
    std::vector<int> d;
    for (Letter a : t.column_letters(j)) d.push_back(a.value);
    for (int i = j + 1; i <= k; ++i) {
      std::vector<int> next;
      for (Letter a : t.column_letters(i)) next.push_back(a.value);
      d = typea::classical_swap(d, next).second;
    }
    std::vector<Letter> col;
    for (int v : d) col.push_back(Letter{v});
    key_cols.push_back(std::move(col));
  }
  return SkewTableau::straight(t.rank(), key_cols);
}

}  // namespace kn
