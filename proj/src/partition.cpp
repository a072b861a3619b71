#include "kn/partition.hpp"

#include <numeric>
#include <string>

namespace kn {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0)
      fail(Err::invalid_partition, "negative part in partition");
    if (i > 0 && parts_[i] > parts_[i - 1])
      fail(Err::invalid_partition, "partition parts must weakly decrease");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::cells() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& other) const {
  if (other.num_parts() > num_parts()) return false;
  for (int i = 1; i <= other.num_parts(); ++i)
    if (other.part(i) > part(i)) return false;
  return true;
}

int Partition::conjugate_part(int j) const {
  int count = 0;
  for (int p : parts_)
    if (p >= j) ++count;
  return count;
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  for (int j = 1; j <= part(1); ++j) conj.push_back(conjugate_part(j));
  return Partition(std::move(conj));
}

namespace {

void collect_partitions(int max_first, int remaining, int parts_left,
                        std::vector<int>& cur, std::vector<Partition>& out) {
  for (int p = std::min(max_first, remaining); p >= 1; --p) {
    cur.push_back(p);
    out.push_back(Partition(cur));
    if (parts_left > 1 && remaining - p > 0)
      collect_partitions(p, remaining - p, parts_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_up_to(int max_cells, int max_parts) {
  std::vector<Partition> out;
  std::vector<int> cur;
  if (max_cells >= 1 && max_parts >= 1)
    collect_partitions(max_cells, max_cells, max_parts, cur, out);
  return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    fail(Err::invalid_shape, "inner shape not contained in outer shape");
}

bool SkewShape::contains_cell(Cell c) const {
  return c.row >= 1 && c.col >= 1 && c.col > inner_.part(c.row) &&
         c.col <= outer_.part(c.row);
}

std::vector<Cell> SkewShape::inner_corners() const {
  std::vector<Cell> out;
  for (int r = 1; r <= inner_.num_parts(); ++r)
    if (inner_.part(r) > 0 && inner_.part(r + 1) < inner_.part(r))
      out.push_back(Cell{r, inner_.part(r)});
  return out;
}

}  // namespace kn
