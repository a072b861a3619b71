#include "kn/column.hpp"

#include <algorithm>

namespace kn {

namespace {

std::string show(const Column& c) {
  std::string s = "[";
  for (int i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += to_string(c.letters[i]);
  }
  return s + "]";
}

// Absolute values present in the column, as a lookup table over 1..n.
std::vector<bool> abs_present(const Column& c) {
  std::vector<bool> present(c.rank + 1, false);
  for (Letter a : c.letters) present[absolute(a)] = true;
  return present;
}

// Values z with both z and z̄ in the column, descending.
std::vector<int> symmetric_pairs(const Column& c) {
  std::vector<bool> unbarred(c.rank + 1, false), barred(c.rank + 1, false);
  for (Letter a : c.letters)
    (is_barred(a) ? barred : unbarred)[absolute(a)] = true;
  std::vector<int> zs;
  for (int z = c.rank; z >= 1; --z)
    if (unbarred[z] && barred[z]) zs.push_back(z);
  return zs;
}

void sort_letters(std::vector<Letter>& letters, int n) {
  std::sort(letters.begin(), letters.end(),
            [n](Letter a, Letter b) { return rank(a, n) < rank(b, n); });
}

void replace_letter(std::vector<Letter>& letters, Letter from, Letter to) {
  for (Letter& a : letters)
    if (a == from) {
      a = to;
      return;
    }
}

}  // namespace

Column make_column(int rank, std::vector<Letter> letters) {
  if (rank < 1) fail(Err::invalid_letter, "rank must be positive");
  for (Letter a : letters) validate_letter(a, rank);
  for (size_t i = 1; i < letters.size(); ++i)
    if (!letter_less(letters[i - 1], letters[i], rank))
      fail(Err::invalid_tableau,
           "column letters must strictly increase: " +
               show(Column{rank, letters}));
  return Column{rank, std::move(letters)};
}

Column make_column(int rank, std::initializer_list<int> values) {
  std::vector<Letter> letters;
  for (int v : values) letters.push_back(Letter{v});
  return make_column(rank, std::move(letters));
}

OneCCReport check_1cc(const Column& c) {
  auto zs = symmetric_pairs(c);
  std::reverse(zs.begin(), zs.end());  // ascending: minimal break first
  for (int z : zs) {
    int count = 0;
    for (Letter a : c.letters)
      if (absolute(a) <= z) ++count;
    if (count > z) return OneCCReport{false, z};
  }
  return OneCCReport{};
}

bool is_admissible(const Column& c) { return check_1cc(c).admissible; }

namespace detail {

std::optional<std::vector<std::pair<int, int>>> split_witness(
    const Column& c) {
  auto present = abs_present(c);
  std::vector<std::pair<int, int>> zt;
  int prev_t = c.rank + 1;
  for (int z : symmetric_pairs(c)) {
    int upper = zt.empty() ? z : std::min(prev_t, z);
    int t = upper - 1;
    while (t >= 1 && present[t]) --t;
    if (t < 1) return std::nullopt;
    zt.emplace_back(z, t);
    prev_t = t;
  }
  return zt;
}

}  // namespace detail

SplitPair split(const Column& c) {
  auto rep = check_1cc(c);
  if (!rep.admissible)
    fail(Err::not_admissible, "column " + show(c) +
                                  " breaks the one-column condition at " +
                                  std::to_string(*rep.break_letter));
  auto witness = detail::split_witness(c);
  if (!witness)
    fail(Err::no_split_witness,
         "no splitting witness for admissible column " + show(c));
  Column left = c, right = c;
  for (auto [z, t] : *witness) {
    replace_letter(left.letters, Letter{z}, Letter{t});
    replace_letter(right.letters, Letter{-z}, Letter{-t});
  }
  sort_letters(left.letters, c.rank);
  sort_letters(right.letters, c.rank);
  return SplitPair{std::move(left), std::move(right)};
}

bool check_coadmissible(const Column& c) {
  for (int i = 0; i < c.size(); ++i) {
    Letter a = c.letters[i];
    if (is_barred(a)) continue;
    for (int j = i + 1; j < c.size(); ++j)
      if (c.letters[j] == bar(a) && (j - i) > c.rank - a.value) return false;
  }
  return true;
}

Column phi(const Column& c) {
  SplitPair s = split(c);
  std::vector<Letter> letters;
  for (Letter a : s.left.letters)
    if (!is_barred(a)) letters.push_back(a);
  for (Letter a : s.right.letters)
    if (is_barred(a)) letters.push_back(a);
  return Column{c.rank, std::move(letters)};
}

Column phi_inverse(const Column& c) {
  if (!check_coadmissible(c))
    fail(Err::not_coadmissible, "column " + show(c) + " is not coadmissible");
  auto present = abs_present(c);
  auto ts = symmetric_pairs(c);  // descending
  std::vector<std::pair<int, int>> tz;
  int prev_z = 0;
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {  // smallest pair first
    int z = std::max(*it, prev_z) + 1;
    while (z <= c.rank && present[z]) ++z;
    if (z > c.rank)
      fail(Err::not_coadmissible,
           "no admissible preimage for column " + show(c));
    tz.emplace_back(*it, z);
    prev_z = z;
  }
  Column out = c;
  for (auto [t, z] : tz) {
    replace_letter(out.letters, Letter{t}, Letter{z});
    replace_letter(out.letters, Letter{-t}, Letter{-z});
  }
  sort_letters(out.letters, c.rank);
  return out;
}

}  // namespace kn
