#include "kn/sjdt.hpp"

#include <algorithm>
#include <string>

namespace kn {

const char* to_string(SlideKind k) {
  switch (k) {
    case SlideKind::vertical: return "vertical";
    case SlideKind::horizontal_barred: return "horizontal-barred";
    case SlideKind::horizontal_unbarred: return "horizontal-unbarred";
  }
  return "?";
}

namespace {

std::string show(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

bool cell_addable(const Partition& p, Cell c) {
  return c.row >= 1 && c.col >= 1 && p.part(c.row) == c.col - 1 &&
         (c.row == 1 || p.part(c.row - 1) >= c.col);
}

bool cell_removable(const Partition& p, Cell c) {
  return c.row >= 1 && p.part(c.row) == c.col && p.part(c.row + 1) < c.col;
}

Partition with_cell_added(const Partition& p, Cell c) {
  std::vector<int> parts = p.parts();
  if (c.row > static_cast<int>(parts.size())) parts.resize(c.row, 0);
  parts[c.row - 1] += 1;
  return Partition(parts);
}

Partition with_cell_removed(const Partition& p, Cell c) {
  std::vector<int> parts = p.parts();
  parts[c.row - 1] -= 1;
  return Partition(parts);
}

std::vector<Letter> inserted(std::vector<Letter> v, Letter a, int n) {
  auto it = std::lower_bound(v.begin(), v.end(), a, [n](Letter x, Letter y) {
    return rank(x, n) < rank(y, n);
  });
  if (it != v.end() && *it == a)
    fail(Err::invalid_punctured_tableau,
         "letter " + to_string(a) + " already present");
  v.insert(it, a);
  return v;
}

std::vector<Letter> erased(std::vector<Letter> v, Letter a) {
  auto it = std::find(v.begin(), v.end(), a);
  if (it == v.end())
    fail(Err::invalid_punctured_tableau,
         "letter " + to_string(a) + " not present");
  v.erase(it);
  return v;
}

// Index into the stored letters of column j for the footprint cell (r, j),
// skipping the puncture; -1 at the puncture itself.
int letter_index(const PuncturedTableau& p, int r, int j) {
  int idx = r - p.column_top(j);
  if (j == p.punct.col) {
    if (r == p.punct.row) return -1;
    if (r > p.punct.row) --idx;
  }
  return idx;
}

}  // namespace

PuncturedTableau PuncturedTableau::at_inner_corner(const SkewTableau& t,
                                                   Cell c) {
  if (!cell_removable(t.shape().inner(), c))
    fail(Err::not_an_inner_corner,
         show(c) + " is not a removable cell of the inner shape");
  PuncturedTableau p;
  p.rank = t.rank();
  p.outer = t.shape().outer();
  p.inner = with_cell_removed(t.shape().inner(), c);
  for (int j = 1; j <= t.num_columns(); ++j)
    p.cols.push_back(t.column_letters(j));
  p.punct = c;
  return p;
}

PuncturedTableau PuncturedTableau::at_outer_corner(const SkewTableau& t,
                                                   Cell c) {
  if (!cell_addable(t.shape().outer(), c))
    fail(Err::not_an_outer_corner,
         show(c) + " is not an addable cell of the outer shape");
  PuncturedTableau p;
  p.rank = t.rank();
  p.outer = with_cell_added(t.shape().outer(), c);
  p.inner = t.shape().inner();
  for (int j = 1; j <= t.num_columns(); ++j)
    p.cols.push_back(t.column_letters(j));
  if (p.outer.part(1) > static_cast<int>(p.cols.size())) p.cols.push_back({});
  p.punct = c;
  return p;
}

std::optional<Letter> PuncturedTableau::entry(Cell c) const {
  if (c.col < 1 || c.col > num_columns()) return std::nullopt;
  if (c.row < column_top(c.col) || c.row > column_bottom(c.col))
    return std::nullopt;
  int idx = letter_index(*this, c.row, c.col);
  if (idx < 0) return std::nullopt;
  return cols[c.col - 1][idx];
}

bool PuncturedTableau::forward_done() const {
  int j = punct.col, r = punct.row;
  bool below = r < column_bottom(j);
  bool right = j < num_columns() && r >= column_top(j + 1) &&
               r <= column_bottom(j + 1);
  return !below && !right;
}

bool PuncturedTableau::reverse_done() const {
  int j = punct.col, r = punct.row;
  bool above = r > column_top(j);
  bool left = j >= 2 && r >= column_top(j - 1) && r <= column_bottom(j - 1);
  return !above && !left;
}

SkewTableau PuncturedTableau::finish_forward() const {
  if (!forward_done())
    fail(Err::invalid_punctured_tableau, "slide is not complete");
  Partition shrunk = with_cell_removed(outer, punct);
  std::vector<std::vector<Letter>> trimmed(cols.begin(),
                                           cols.begin() + shrunk.part(1));
  return SkewTableau(rank, SkewShape(shrunk, inner), std::move(trimmed));
}

SkewTableau PuncturedTableau::finish_reverse() const {
  if (!reverse_done())
    fail(Err::invalid_punctured_tableau, "reverse slide is not complete");
  return SkewTableau(rank, SkewShape(outer, with_cell_added(inner, punct)),
                     cols);
}

bool punctured_admissible(const PuncturedTableau& p) {
  if (!p.outer.contains(p.inner)) return false;
  if (p.punct.col < 1 || p.punct.col > p.num_columns()) return false;
  if (p.punct.row < p.column_top(p.punct.col) ||
      p.punct.row > p.column_bottom(p.punct.col))
    return false;
  if (static_cast<int>(p.cols.size()) != p.num_columns()) return false;

  std::vector<SplitPair> splits(p.num_columns());
  for (int j = 1; j <= p.num_columns(); ++j) {
    const auto& letters = p.cols[j - 1];
    int cells = p.column_bottom(j) - p.column_top(j) + 1;
    if (j == p.punct.col) --cells;
    if (static_cast<int>(letters.size()) != std::max(cells, 0)) return false;
    for (size_t i = 1; i < letters.size(); ++i)
      if (!letter_less(letters[i - 1], letters[i], p.rank)) return false;
    Column c{p.rank, letters};
    if (!is_admissible(c)) return false;
    splits[j - 1] = split(c);
  }

  for (int r = 1; r <= p.outer.num_parts(); ++r) {
    std::optional<Letter> prev;
    for (int c = p.inner.part(r) + 1; c <= p.outer.part(r); ++c) {
      if (Cell{r, c} == p.punct) continue;
      int idx = letter_index(p, r, c);
      for (const auto* half : {&splits[c - 1].left, &splits[c - 1].right}) {
        Letter a = half->letters[idx];
        if (prev && !letter_leq(*prev, a, p.rank)) return false;
        prev = a;
      }
    }
  }
  return true;
}

std::optional<std::pair<PuncturedTableau, SlideStep>> try_forward_slide(
    const PuncturedTableau& p) {
  int j = p.punct.col, r = p.punct.row;
  bool has_below = r < p.column_bottom(j);
  bool has_right = j < p.num_columns() && r >= p.column_top(j + 1) &&
                   r <= p.column_bottom(j + 1);
  if (!has_below && !has_right) return std::nullopt;

  std::optional<Letter> alpha, beta;
  if (has_below)
    alpha = split(Column{p.rank, p.cols[j - 1]})
                .right.letters[letter_index(p, r + 1, j)];
  if (has_right)
    beta = split(Column{p.rank, p.cols[j]})
               .left.letters[r - p.column_top(j + 1)];

  if (has_below && (!beta || rank(*alpha, p.rank) <= rank(*beta, p.rank))) {
    Letter moved = p.cols[j - 1][letter_index(p, r + 1, j)];
    PuncturedTableau q = p;
    q.punct.row = r + 1;
    return {{std::move(q),
             SlideStep{p.punct, SlideKind::vertical, moved, std::nullopt}}};
  }

  Letter b = *beta;
  PuncturedTableau q = p;
  q.punct = Cell{r, j + 1};
  SlideStep step{p.punct,
                 is_barred(b) ? SlideKind::horizontal_barred
                              : SlideKind::horizontal_unbarred,
                 b, std::nullopt};
  if (is_barred(b)) {
    // β sits in C2 itself at the puncture's row; it moves into Φ(C1)
    q.cols[j] = erased(p.cols[j], b);
    Column image = phi(Column{p.rank, p.cols[j - 1]});
    q.cols[j - 1] =
        phi_inverse(Column{p.rank, inserted(image.letters, b, p.rank)})
            .letters;
  } else {
    // β leaves Φ(C2) and lands in C1, which may break the 1CC and contract
    auto letters = inserted(p.cols[j - 1], b, p.rank);
    auto rep = check_1cc(Column{p.rank, letters});
    if (!rep.admissible) {
      int z = *rep.break_letter;
      letters = erased(erased(letters, Letter{z}), Letter{-z});
      Cell top{p.column_top(j), j}, bottom{p.column_bottom(j), j};
      if (!cell_addable(q.inner, top) || !cell_removable(q.outer, bottom))
        fail(Err::invalid_punctured_tableau,
             "contraction at " + std::to_string(z) +
                 " produces an invalid shape");
      q.inner = with_cell_added(q.inner, top);
      q.outer = with_cell_removed(q.outer, bottom);
      step.erased = z;
    }
    q.cols[j - 1] = letters;
    Column image = phi(Column{p.rank, p.cols[j]});
    q.cols[j] =
        phi_inverse(Column{p.rank, erased(image.letters, b)}).letters;
  }
  return {{std::move(q), step}};
}

std::pair<PuncturedTableau, SlideStep> forward_slide(
    const PuncturedTableau& p) {
  if (!punctured_admissible(p))
    fail(Err::invalid_punctured_tableau, "not an admissible punctured tableau");
  auto step = try_forward_slide(p);
  if (!step) fail(Err::no_move, "slide sequence is complete");
  return *step;
}

std::pair<PuncturedTableau, SlideStep> reverse_step(
    const PuncturedTableau& p) {
  int j = p.punct.col, r = p.punct.row;
  std::vector<std::pair<PuncturedTableau, SlideStep>> hits;
  auto consider = [&](PuncturedTableau s) {
    if (!punctured_admissible(s)) return;
    auto f = try_forward_slide(s);
    if (f && f->first == p) hits.emplace_back(std::move(s), f->second);
  };

  // undo a vertical slide: the entry above moves back down
  if (r - 1 >= p.column_top(j)) {
    PuncturedTableau s = p;
    s.punct.row = r - 1;
    consider(std::move(s));
  }

  // undo a horizontal slide: the entry at the puncture's row of rC_{j-1}
  // returns to column j
  if (j >= 2 && r >= p.column_top(j - 1) && r <= p.column_bottom(j - 1)) {
    try {
      Letter e = split(Column{p.rank, p.cols[j - 2]})
                     .right.letters[r - p.column_top(j - 1)];
      PuncturedTableau s = p;
      s.punct = Cell{r, j - 1};
      if (is_barred(e)) {
        Column image = phi(Column{p.rank, p.cols[j - 2]});
        s.cols[j - 2] =
            phi_inverse(Column{p.rank, erased(image.letters, e)}).letters;
        s.cols[j - 1] = inserted(p.cols[j - 1], e, p.rank);
      } else {
        s.cols[j - 2] = erased(p.cols[j - 2], e);
        Column image = phi(Column{p.rank, p.cols[j - 1]});
        s.cols[j - 1] =
            phi_inverse(Column{p.rank, inserted(image.letters, e, p.rank)})
                .letters;
      }
      consider(std::move(s));
    } catch (const DomainError&) {
      // mechanically impossible candidate
    }
  }

  if (hits.size() == 1) {
    hits[0].second.puncture = p.punct;
    return std::move(hits[0]);
  }
  if (hits.empty())
    fail(Err::slide_would_lose_cells,
         "no admissible predecessor at " + show(p.punct) +
             "; a contraction would be required");
  fail(Err::invalid_punctured_tableau,
       "ambiguous reverse slide at " + show(p.punct));
}

SkewTableau reverse_slide(const SkewTableau& t, Cell outer_corner,
                          SlideTrace* trace) {
  auto rep = check_kn(t);
  if (!rep.ok) fail(Err::invalid_tableau, rep.reason);
  PuncturedTableau p = PuncturedTableau::at_outer_corner(t, outer_corner);
  while (!p.reverse_done()) {
    auto [q, step] = reverse_step(p);
    if (trace) trace->push_back(step);
    p = std::move(q);
  }
  return p.finish_reverse();
}

SkewTableau rectify(const SkewTableau& t, const CornerChooser& choose,
                    SlideTrace* trace) {
  auto rep = check_kn(t);
  if (!rep.ok) fail(Err::invalid_tableau, rep.reason);
  SkewTableau cur = t;
  while (!cur.shape().inner().empty()) {
    Cell corner = choose(cur.shape().inner_corners());
    PuncturedTableau p = PuncturedTableau::at_inner_corner(cur, corner);
    while (auto step = try_forward_slide(p)) {
      if (trace) trace->push_back(step->second);
      p = std::move(step->first);
    }
    cur = p.finish_forward();
  }
  return cur;
}

SkewTableau rectify(const SkewTableau& t, SlideTrace* trace) {
  return rectify(
      t,
      [](const std::vector<Cell>& corners) {
        Cell best = corners.front();
        for (Cell c : corners)
          if (c.row > best.row || (c.row == best.row && c.col > best.col))
            best = c;
        return best;
      },
      trace);
}

SkewTableau swap_column_lengths(const Column& c1, const Column& c2) {
  if (c1.rank != c2.rank)
    fail(Err::invalid_tableau, "columns have different ranks");
  int p = c1.size(), q = c2.size();
  if (p < q)
    fail(Err::length_order, "first column must be at least as long");
  SkewTableau t = SkewTableau::straight(c1.rank, {c1.letters, c2.letters});
  auto rep = check_kn(t);
  if (!rep.ok) fail(Err::invalid_tableau, rep.reason);
  for (int i = 1; i <= p - q; ++i)
    t = reverse_slide(t, Cell{q + i, 2});
  if (p > q && (t.shape().column_top(1) != p - q + 1 ||
                t.shape().column_bottom(2) != p))
    fail(Err::invalid_punctured_tableau,
         "length swap produced an unexpected shape");
  return t;
}

namespace {

Partition from_conjugate(const std::vector<int>& conj) {
  int rows = conj.empty() ? 0 : conj[0];
  std::vector<int> parts;
  for (int r = 1; r <= rows; ++r) {
    int width = 0;
    for (int c : conj)
      if (c >= r) ++width;
    parts.push_back(width);
  }
  return Partition(parts);
}

}  // namespace

SkewTableau skew_variant(const SkewTableau& t,
                         const std::vector<int>& target) {
  if (!t.straight())
    fail(Err::invalid_tableau, "skew variants start from a straight tableau");
  auto rep = check_kn(t);
  if (!rep.ok) fail(Err::invalid_tableau, rep.reason);
  std::vector<int> len = t.column_lengths();
  {
    auto a = len, b = target;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      fail(Err::invalid_permutation,
           "target lengths are not a rearrangement of the column lengths");
  }
  std::vector<std::vector<Letter>> cols;
  for (int j = 1; j <= t.num_columns(); ++j)
    cols.push_back(t.column_letters(j));

  auto swap_adjacent = [&](int a) {  // 0-based column pair (a, a+1)
    if (len[a] != len[a + 1]) {
      if (len[a] > len[a + 1]) {
        SkewTableau s = swap_column_lengths(Column{t.rank(), cols[a]},
                                            Column{t.rank(), cols[a + 1]});
        cols[a] = s.column_letters(1);
        cols[a + 1] = s.column_letters(2);
      } else {
        // the pair sits bottom-flush; rectifying it swaps the lengths back
        int L = len[a + 1];
        SkewTableau pair(
            t.rank(),
            SkewShape(Partition(std::vector<int>(L, 2)),
                      Partition(std::vector<int>(L - len[a], 1))),
            {cols[a], cols[a + 1]});
        SkewTableau s = rectify(pair);
        cols[a] = s.column_letters(1);
        cols[a + 1] = s.column_letters(2);
      }
      std::swap(len[a], len[a + 1]);
    }
  };

  for (int j = 0; j < static_cast<int>(target.size()); ++j) {
    int i = j;
    while (len[i] != target[j]) ++i;
    for (; i > j; --i) swap_adjacent(i - 1);
  }

  int k = static_cast<int>(len.size());
  if (k == 0) return t;
  std::vector<int> top(k, 1);
  for (int j = k - 2; j >= 0; --j)
    top[j] = len[j] >= len[j + 1] ? top[j + 1]
                                  : top[j + 1] + (len[j + 1] - len[j]);
  std::vector<int> mu_conj(k), nu_conj(k);
  for (int j = 0; j < k; ++j) {
    nu_conj[j] = top[j] - 1;
    mu_conj[j] = top[j] - 1 + len[j];
  }
  return SkewTableau(
      t.rank(), SkewShape(from_conjugate(mu_conj), from_conjugate(nu_conj)),
      cols);
}

Column last_column(const SkewTableau& t) {
  if (t.num_columns() == 0) return Column{t.rank(), {}};
  return t.column(t.num_columns());
}

}  // namespace kn
