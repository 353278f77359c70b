// Clause-count lower bounds for unit-propagation-complete encodings of the
// at-most-one / exactly-one constraints, plus a tabulation helper that lines
// the bounds up against the sizes our generators actually achieve.
#pragma once

#include <optional>
#include <vector>

#include "pcenc/cnf.hpp"

namespace pcenc {

// Minimum number of clauses in any propagation-complete encoding of the
// exactly-one constraint over n inputs (auxiliary variables allowed).
//   n = 2        -> 1
//   3 <= n <= 8  -> 3n - 6
//   n >= 9       -> 2n - 2 + ceil(sqrt(n))
// Throws invalid_n for n < 2.
long lower_bound_general(int n);

// Same quantity restricted to encodings whose clauses have at most two
// literals each.
//   n = 2         -> 1
//   3 <= n <= 10  -> 3n - 6
//   n >= 11       -> 2n - 3 + ceil(sqrt(4n))
// Throws invalid_n for n < 2.
long lower_bound_2cnf(int n);

struct RegularFloor {
  double value;  // (4n - 3 + sqrt(4n - 3)) / 2
  long ceiling;  // smallest integer >= value, computed in exact arithmetic
};

// Clause-count floor specific to encodings in regular form.  Defined for
// n >= 7 (smaller instances never reach regular form); throws invalid_n
// otherwise.
RegularFloor regular_form_floor(int n);

struct BoundsRow {
  int n = 0;
  long lb_general = 0;
  long lb_2cnf = 0;
  std::optional<double> regular_floor;     // present for n >= 7
  std::optional<long> regular_floor_ceil;  // present for n >= 7
  long size_pairwise = 0;
  long size_sequential = 0;
  long size_product = 0;
};

// One row per n in [from, to].  Requires 3 <= from <= to (the size columns
// need the chain constructions, which start at n = 3).
std::vector<BoundsRow> bounds_table(int from, int to);

}  // namespace pcenc
