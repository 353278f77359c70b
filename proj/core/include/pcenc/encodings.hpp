// Constructions of at-most-one and exactly-one CNF encodings.  Inputs are
// numbered 1..n and auxiliaries n+1 onward, in the order the recurrences
// introduce them (outermost level first).
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "pcenc/cnf.hpp"

namespace pcenc {

enum class Kind {
  pairwise_amo,       // all (~xi | ~xj); the prime representation of AMO
  prime_exone,        // pairwise plus the positive clause (x1 | ... | xn)
  sequential_amo,     // chain recurrence, 3n-6 clauses, n-3 auxiliaries
  tree_amo,           // chain variant recursing on (x3..xn, y)
  product_amo,        // best of chain step and grid step at every level
  exone_wrap,         // (x1 | ... | xn) & sequential_amo(n)
  amo_wrap,           // (~x1 | z) & sequential_amo with z replacing x1
  nonpc_exone,        // exactly-one encoding that unit propagation cannot complete
  partition_fixture,  // block-structured AMO encoding with five auxiliaries
};

struct EncodingKind {
  Kind kind;
  int n;
  std::array<int, 4> blocks{0, 0, 0, 0};  // partition_fixture block sizes
};

Encoding generate(const EncodingKind& k);
std::size_t expected_size(const EncodingKind& k);

const char* kind_name(Kind k);
std::optional<Kind> kind_from_name(std::string_view name);

Encoding pairwise_amo(int n);                                  // n >= 1
Encoding prime_exone(int n);                                   // n >= 1
Encoding sequential_amo(int n);                                // n >= 3
Encoding tree_amo(int n);                                      // n >= 3
Encoding product_amo(int n);                                   // n >= 3
Encoding nonpc_exone(int n);                                   // n >= 3
Encoding partition_fixture(int n, int a, int b, int c, int d); // blocks >= 1

// Wrap an at-most-one encoding with standard numbering (inputs 1..n) into an
// exactly-one encoding by adding the positive input clause.
Encoding exone_wrap(const Encoding& inner);
// Wrap by rerouting x1 through a fresh auxiliary z: (~x1 | z) plus the inner
// formula with z substituted for x1.  Keeps the at-most-one function.
Encoding amo_wrap(const Encoding& inner);

}  // namespace pcenc
