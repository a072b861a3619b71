#pragma once

#include <stdexcept>
#include <string>

namespace kn {

// Failure conditions surfaced by the library. Each maps to one precondition
// or domain rule; the CLI turns any of these into exit code 1.
enum class Err {
  invalid_letter,
  invalid_partition,
  invalid_shape,
  invalid_tableau,
  parse_error,
  not_admissible,
  no_split_witness,
  not_coadmissible,
  invalid_orbit_vector,
  no_move,
  invalid_punctured_tableau,
  not_an_inner_corner,
  not_an_outer_corner,
  slide_would_lose_cells,
  length_order,
  invalid_permutation,
  unmatchable_entry,
  alphabet_exhausted,
  not_type_a,
};

class DomainError : public std::runtime_error {
 public:
  DomainError(Err kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) {
  throw DomainError(kind, msg);
}

}  // namespace kn
