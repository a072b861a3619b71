#include "kn/keys.hpp"

#include <algorithm>

namespace kn {

Matching match_columns(const Column& d, const Column& c) {
  Column lc = split(c).left;
  int n = d.rank;
  std::vector<bool> matched(d.size(), false);
  std::vector<std::pair<int, int>> pairs;
  for (int i = lc.size() - 1; i >= 0; --i) {  // largest β first
    int pick = -1;
    for (int j = d.size() - 1; j >= 0; --j)
      if (!matched[j] && letter_leq(d.letters[j], lc.letters[i], n)) {
        pick = j;
        break;
      }
    if (pick < 0)
      fail(Err::unmatchable_entry,
           "no partner for " + to_string(lc.letters[i]) +
               " in the left column");
    matched[pick] = true;
    pairs.emplace_back(pick + 1, i + 1);
  }
  std::sort(pairs.begin(), pairs.end());
  Matching m;
  m.pairs = std::move(pairs);
  for (int j = 0; j < d.size(); ++j)
    if (!matched[j]) m.unmatched_left.push_back(d.letters[j]);
  return m;
}

ExtendReport direct_extend_report(const Column& d, const Column& c) {
  int n = d.rank;
  ExtendReport rep;
  rep.matching = match_columns(d, c);
  Column rc = split(c).right;
  std::vector<bool> used(n + 1, false);
  for (Letter a : rc.letters) used[absolute(a)] = true;
  std::vector<Letter> letters = rc.letters;
  for (Letter alpha : rep.matching.unmatched_left) {
    int rk = rank(alpha, n);
    while (rk <= 2 * n) {
      Letter gamma{rk <= n ? rk : rk - 2 * n - 1};
      if (!used[absolute(gamma)]) {
        used[absolute(gamma)] = true;
        rep.appended.push_back(gamma);
        letters.push_back(gamma);
        break;
      }
      ++rk;
    }
    if (rk > 2 * n)
      fail(Err::alphabet_exhausted,
           "no letter available for unmatched " + to_string(alpha));
  }
  std::sort(letters.begin(), letters.end(), [n](Letter a, Letter b) {
    return letter_less(a, b, n);
  });
  rep.column = Column{n, std::move(letters)};
  return rep;
}

Column direct_extend(const Column& d, const Column& c) {
  return direct_extend_report(d, c).column;
}

namespace {

void require_straight_kn(const SkewTableau& t) {
  if (!t.straight())
    fail(Err::invalid_tableau, "right keys are defined on straight tableaux");
  auto rep = check_kn(t);
  if (!rep.ok) fail(Err::invalid_tableau, rep.reason);
}

}  // namespace

Column right_key_column_direct(const SkewTableau& t) {
  require_straight_kn(t);
  if (t.num_columns() == 0) return Column{t.rank(), {}};
  Column d = split(t.column(1)).right;
  for (int j = 2; j <= t.num_columns(); ++j) d = direct_extend(d, t.column(j));
  return d;
}

Column right_key_column_jdt(const SkewTableau& t) {
  require_straight_kn(t);
  if (t.num_columns() == 0) return Column{t.rank(), {}};
  if (t.num_columns() == 1) return split(t.column(1)).right;
  Column d = t.column(1);
  for (int j = 2; j <= t.num_columns(); ++j) {
    Column next = t.column(j);
    if (d.size() == next.size()) {
      d = next;
    } else {
      SkewTableau swapped = swap_column_lengths(d, next);
      d = Column{t.rank(), swapped.column_letters(2)};
    }
  }
  return split(d).right;
}

SkewTableau right_key(const SkewTableau& t, KeyMethod method) {
  require_straight_kn(t);
  std::vector<std::vector<Letter>> key_cols;
  for (int j = 1; j <= t.num_columns(); ++j) {
    std::vector<std::vector<Letter>> suffix;
    for (int i = j; i <= t.num_columns(); ++i)
      suffix.push_back(t.column_letters(i));
    SkewTableau s = SkewTableau::straight(t.rank(), suffix);
    Column col = method == KeyMethod::direct ? right_key_column_direct(s)
                                             : right_key_column_jdt(s);
    key_cols.push_back(col.letters);
  }
  return SkewTableau::straight(t.rank(), key_cols);
}

}  // namespace kn
