#include "pcenc/bounds.hpp"

#include <cmath>
#include <string>

#include "pcenc/encodings.hpp"

namespace pcenc {

namespace {

void require_at_least(int n, int least, const char* what) {
  if (n < least)
    throw Error(errc::invalid_n, std::string(what) + " requires n >= " +
                                     std::to_string(least) + ", got n = " +
                                     std::to_string(n));
}

// Floor of sqrt(x) in integer arithmetic (float estimate plus correction).
long isqrt(long x) {
  auto r = static_cast<long>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

long ceil_sqrt(long x) {
  long r = isqrt(x);
  return r * r == x ? r : r + 1;
}

}  // namespace

long lower_bound_general(int n) {
  require_at_least(n, 2, "lower_bound_general");
  if (n == 2) return 1;
  if (n <= 8) return 3L * n - 6;
  return 2L * n - 2 + ceil_sqrt(n);
}

long lower_bound_2cnf(int n) {
  require_at_least(n, 2, "lower_bound_2cnf");
  if (n == 2) return 1;
  if (n <= 10) return 3L * n - 6;
  return 2L * n - 3 + ceil_sqrt(4L * n);
}

RegularFloor regular_form_floor(int n) {
  require_at_least(n, 7, "regular_form_floor");
  long m = 4L * n - 3;
  long t = isqrt(m);
  RegularFloor out;
  out.value = (static_cast<double>(m) + std::sqrt(static_cast<double>(m))) / 2.0;
  // (m + sqrt(m)) / 2 is an integer exactly when m is a perfect square (m odd
  // forces t odd then, so m + t is even).  Otherwise sqrt(m) lies strictly
  // between t and t + 1 and the ceiling is floor((m + t) / 2) + 1 whatever
  // the parity of t.
  out.ceiling = (t * t == m) ? (m + t) / 2 : (m + t) / 2 + 1;
  return out;
}

std::vector<BoundsRow> bounds_table(int from, int to) {
  require_at_least(from, 3, "bounds_table");
  if (to < from)
    throw Error(errc::invalid_parameters, "bounds_table: empty range " +
                                              std::to_string(from) + ".." +
                                              std::to_string(to));
  std::vector<BoundsRow> rows;
  rows.reserve(static_cast<std::size_t>(to - from + 1));
  for (int n = from; n <= to; ++n) {
    BoundsRow r;
    r.n = n;
    r.lb_general = lower_bound_general(n);
    r.lb_2cnf = lower_bound_2cnf(n);
    if (n >= 7) {
      RegularFloor f = regular_form_floor(n);
      r.regular_floor = f.value;
      r.regular_floor_ceil = f.ceiling;
    }
    r.size_pairwise = static_cast<long>(n) * (n - 1) / 2;
    r.size_sequential =
        static_cast<long>(expected_size({Kind::sequential_amo, n}));
    r.size_product = static_cast<long>(expected_size({Kind::product_amo, n}));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace pcenc
