#include "kn/tableau.hpp"

#include <algorithm>
#include <set>

namespace kn {

SkewTableau::SkewTableau(int rank, SkewShape shape,
                         std::vector<std::vector<Letter>> columns)
    : rank_(rank), shape_(std::move(shape)), columns_(std::move(columns)) {
  if (rank_ < 1) fail(Err::invalid_tableau, "rank must be positive");
  if (static_cast<int>(columns_.size()) != shape_.num_columns())
    fail(Err::invalid_tableau, "column count does not match shape");
  for (int j = 1; j <= shape_.num_columns(); ++j) {
    if (static_cast<int>(columns_[j - 1].size()) != shape_.column_length(j))
      fail(Err::invalid_tableau,
           "column " + std::to_string(j) + " does not fill its cells");
    make_column(rank_, columns_[j - 1]);  // validates letters and ordering
  }
}

SkewTableau SkewTableau::straight(
    int rank, const std::vector<std::vector<Letter>>& columns) {
  std::vector<int> lengths;
  for (const auto& col : columns) lengths.push_back(int(col.size()));
  for (size_t j = 1; j < lengths.size(); ++j)
    if (lengths[j] > lengths[j - 1])
      fail(Err::invalid_tableau,
           "straight tableau column lengths must weakly decrease");
  while (!lengths.empty() && lengths.back() == 0) lengths.pop_back();
  std::vector<int> mu;
  for (int r = 1; r <= (lengths.empty() ? 0 : lengths[0]); ++r) {
    int width = 0;
    for (int len : lengths)
      if (len >= r) ++width;
    mu.push_back(width);
  }
  std::vector<std::vector<Letter>> cols(columns.begin(),
                                        columns.begin() + lengths.size());
  return SkewTableau(rank, SkewShape(Partition(mu), Partition{}),
                     std::move(cols));
}

std::vector<int> SkewTableau::column_lengths() const {
  std::vector<int> lengths;
  for (int j = 1; j <= num_columns(); ++j)
    lengths.push_back(shape_.column_length(j));
  return lengths;
}

std::optional<Letter> SkewTableau::entry(Cell c) const {
  if (!shape_.contains_cell(c)) return std::nullopt;
  return columns_[c.col - 1][c.row - shape_.column_top(c.col)];
}

SkewTableau split_form(const SkewTableau& t) {
  std::vector<int> outer2, inner2;
  for (int r = 1; r <= t.shape().num_rows(); ++r) {
    outer2.push_back(2 * t.shape().outer().part(r));
    inner2.push_back(2 * t.shape().inner().part(r));
  }
  std::vector<std::vector<Letter>> cols;
  for (int j = 1; j <= t.num_columns(); ++j) {
    SplitPair s = split(t.column(j));
    cols.push_back(s.left.letters);
    cols.push_back(s.right.letters);
  }
  return SkewTableau(t.rank(),
                     SkewShape(Partition(outer2), Partition(inner2)),
                     std::move(cols));
}

KnReport check_kn(const SkewTableau& t) {
  for (int j = 1; j <= t.num_columns(); ++j) {
    auto rep = check_1cc(t.column(j));
    if (!rep.admissible)
      return KnReport{false, "column " + std::to_string(j) +
                                 " breaks the one-column condition at " +
                                 std::to_string(*rep.break_letter)};
  }
  SkewTableau s = split_form(t);
  for (int r = 1; r <= s.shape().num_rows(); ++r) {
    for (int c = s.shape().row_begin(r); c < s.shape().row_end(r); ++c) {
      Letter a = *s.entry(Cell{r, c});
      Letter b = *s.entry(Cell{r, c + 1});
      if (!letter_leq(a, b, t.rank()))
        return KnReport{false, "split form row " + std::to_string(r) +
                                   " decreases at column " +
                                   std::to_string(c)};
    }
  }
  return KnReport{};
}

bool is_kn(const SkewTableau& t) { return check_kn(t).ok; }

WeightVector weight(const SkewTableau& t) {
  WeightVector w(t.rank(), 0);
  for (int j = 1; j <= t.num_columns(); ++j)
    for (Letter a : t.column_letters(j))
      w[absolute(a) - 1] += is_barred(a) ? -1 : 1;
  return w;
}

bool is_key(const SkewTableau& t) {
  if (!t.straight())
    fail(Err::invalid_tableau, "key tableaux are straight tableaux");
  if (!is_kn(t)) return false;
  for (int j = 1; j <= t.num_columns(); ++j) {
    std::set<int> values;
    for (Letter a : t.column_letters(j)) {
      if (values.count(-a.value)) return false;  // symmetric pair
      values.insert(a.value);
    }
    if (j > 1) {
      std::set<int> prev;
      for (Letter a : t.column_letters(j - 1)) prev.insert(a.value);
      for (Letter a : t.column_letters(j))
        if (!prev.count(a.value)) return false;  // not nested
    }
  }
  return true;
}

SkewTableau key_from_vector(const std::vector<int>& v, int n) {
  if (static_cast<int>(v.size()) != n)
    fail(Err::invalid_orbit_vector,
         "orbit vector must have exactly " + std::to_string(n) + " entries");
  int max_abs = 0;
  for (int x : v) max_abs = std::max(max_abs, std::abs(x));
  std::vector<std::vector<Letter>> cols;
  for (int j = 1; j <= max_abs; ++j) {
    std::vector<Letter> col;
    for (int i = 1; i <= n; ++i)
      if (std::abs(v[i - 1]) >= j) col.push_back(Letter{v[i - 1] < 0 ? -i : i});
    std::sort(col.begin(), col.end(), [n](Letter a, Letter b) {
      return letter_less(a, b, n);
    });
    cols.push_back(std::move(col));
  }
  return SkewTableau::straight(n, cols);
}

std::vector<std::vector<int>> orbit_vectors(const Partition& lambda, int n) {
  if (lambda.num_parts() > n)
    fail(Err::invalid_orbit_vector,
         "shape has more parts than the rank allows");
  std::vector<int> base(n, 0);
  for (int i = 1; i <= lambda.num_parts(); ++i) base[i - 1] = lambda.part(i);
  std::sort(base.begin(), base.end());
  std::set<std::vector<int>> out;
  do {
    std::vector<int> nonzero;
    for (int i = 0; i < n; ++i)
      if (base[i] != 0) nonzero.push_back(i);
    for (unsigned mask = 0; mask < (1u << nonzero.size()); ++mask) {
      std::vector<int> v = base;
      for (size_t b = 0; b < nonzero.size(); ++b)
        if (mask & (1u << b)) v[nonzero[b]] = -v[nonzero[b]];
      out.insert(std::move(v));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return {out.begin(), out.end()};
}

bool entrywise_leq(const SkewTableau& a, const SkewTableau& b) {
  if (a.shape() != b.shape() || a.rank() != b.rank())
    fail(Err::invalid_tableau, "entrywise comparison needs equal shapes");
  for (int j = 1; j <= a.num_columns(); ++j)
    for (size_t i = 0; i < a.column_letters(j).size(); ++i)
      if (!letter_leq(a.column_letters(j)[i], b.column_letters(j)[i],
                      a.rank()))
        return false;
  return true;
}

}  // namespace kn
