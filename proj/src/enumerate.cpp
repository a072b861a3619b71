#include "kn/enumerate.hpp"

#include <map>

namespace kn {

namespace {

void collect_columns(int n, int length, int min_rank,
                     std::vector<Letter>& cur, std::vector<Column>& out) {
  if (static_cast<int>(cur.size()) == length) {
    Column c{n, cur};
    if (is_admissible(c)) out.push_back(std::move(c));
    return;
  }
  for (int rk = min_rank; rk <= 2 * n; ++rk) {
    Letter a{rk <= n ? rk : rk - 2 * n - 1};
    cur.push_back(a);
    collect_columns(n, length, rk + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Column> admissible_columns(int n, int length) {
  std::vector<Column> out;
  std::vector<Letter> cur;
  if (length == 0) {
    out.push_back(Column{n, {}});
    return out;
  }
  if (length <= n) collect_columns(n, length, 1, cur, out);
  return out;
}

void for_each_kn(const Partition& lambda, int n,
                 const std::function<void(const SkewTableau&)>& fn) {
  std::vector<int> lengths;
  for (int j = 1; j <= lambda.part(1); ++j)
    lengths.push_back(lambda.conjugate_part(j));
  for (int len : lengths)
    if (len > n) return;  // no admissible column that long

  // candidate columns with their splits, per occurring length
  struct Candidate {
    Column column;
    SplitPair split_pair;
  };
  std::map<int, std::vector<Candidate>> pool;
  for (int len : lengths)
    if (!pool.count(len))
      for (Column& c : admissible_columns(n, len))
        pool[len].push_back(Candidate{c, split(c)});

  int k = static_cast<int>(lengths.size());
  std::vector<const Candidate*> chosen(k);
  std::vector<std::vector<Letter>> cols(k);

  auto rows_ok = [&](const Candidate& prev, const Candidate& cur) {
    // split-form row condition across the pair: rC_prev ≤ ℓC_cur rowwise
    for (int r = 0; r < cur.column.size(); ++r)
      if (!letter_leq(prev.split_pair.right.letters[r],
                      cur.split_pair.left.letters[r], n))
        return false;
    return true;
  };

  std::function<void(int)> fill = [&](int j) {
    if (j == k) {
      for (int i = 0; i < k; ++i) cols[i] = chosen[i]->column.letters;
      fn(SkewTableau::straight(n, cols));
      return;
    }
    for (const Candidate& cand : pool[lengths[j]]) {
      if (j > 0 && !rows_ok(*chosen[j - 1], cand)) continue;
      chosen[j] = &cand;
      fill(j + 1);
    }
  };

  if (k == 0) {
    fn(SkewTableau::straight(n, {}));
    return;
  }
  fill(0);
}

std::vector<SkewTableau> enumerate_kn(const Partition& lambda, int n) {
  std::vector<SkewTableau> out;
  for_each_kn(lambda, n, [&](const SkewTableau& t) { out.push_back(t); });
  return out;
}

}  // namespace kn
