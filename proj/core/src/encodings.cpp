#include "pcenc/encodings.hpp"

#include <cmath>
#include <map>
#include <string>

namespace pcenc {

namespace {

void require_n(int n, int least, const char* what) {
  if (n < least)
    throw Error(errc::invalid_n,
                std::string(what) + " requires n >= " + std::to_string(least));
}

void emit_pairwise(std::vector<Clause>& out, const std::vector<Var>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      out.push_back({Lit::neg(vs[i]), Lit::neg(vs[j])});
}

// Chain step shared by the sequential and tree recurrences: guard the first
// two variables and hand a fresh auxiliary to the recursive call.
void build_seq(std::vector<Clause>& out, std::vector<Var> vs, Var& next, bool tree) {
  while (vs.size() > 3) {
    Var y = next++;
    out.push_back({Lit::neg(vs[0]), Lit::neg(vs[1])});
    out.push_back({Lit::neg(vs[0]), Lit::pos(y)});
    out.push_back({Lit::neg(vs[1]), Lit::pos(y)});
    std::vector<Var> rest(vs.begin() + 2, vs.end());
    if (tree)
      rest.push_back(y);  // tree recurrence: (x3, ..., xn, y)
    else
      rest.insert(rest.begin(), y);  // sequential recurrence: (y, x3, ..., xn)
    vs = std::move(rest);
  }
  emit_pairwise(out, vs);
}

int grid_rows(int n) { return static_cast<int>(std::ceil(std::sqrt(double(n)))); }
int grid_cols(int n) { return (n + grid_rows(n) - 1) / grid_rows(n); }

// Clause count of the product construction: at every level the cheaper of the
// chain step (3 + S(n-1)) and the grid step (2n + S(m1) + S(m2)); ties go to
// the grid step, which is the one in regular form.
std::size_t product_size(int n) {
  static std::map<int, std::size_t> memo;
  if (n == 3) return 3;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::size_t chain = 3 + product_size(n - 1);
  std::size_t best = chain;
  if (n >= 7) {
    int m1 = grid_rows(n), m2 = grid_cols(n);
    std::size_t grid = 2 * std::size_t(n) + product_size(m1) + product_size(m2);
    best = std::min(chain, grid);
  }
  memo[n] = best;
  return best;
}

void build_product(std::vector<Clause>& out, std::vector<Var> vs, Var& next) {
  int k = static_cast<int>(vs.size());
  if (k == 3) {
    emit_pairwise(out, vs);
    return;
  }
  bool grid = false;
  if (k >= 7) {
    int m1 = grid_rows(k), m2 = grid_cols(k);
    std::size_t grid_sz = 2 * std::size_t(k) + product_size(m1) + product_size(m2);
    grid = grid_sz <= 3 + product_size(k - 1);
  }
  if (!grid) {
    Var y = next++;
    out.push_back({Lit::neg(vs[0]), Lit::neg(vs[1])});
    out.push_back({Lit::neg(vs[0]), Lit::pos(y)});
    out.push_back({Lit::neg(vs[1]), Lit::pos(y)});
    std::vector<Var> rest(vs.begin() + 2, vs.end());
    rest.insert(rest.begin(), y);
    build_product(out, std::move(rest), next);
    return;
  }
  int m1 = grid_rows(k), m2 = grid_cols(k);
  std::vector<Var> rows(m1), cols(m2);
  for (int r = 0; r < m1; ++r) rows[r] = next++;
  for (int c = 0; c < m2; ++c) cols[c] = next++;
  for (int i = 0; i < k; ++i) {
    out.push_back({Lit::neg(vs[i]), Lit::pos(rows[i / m2])});
    out.push_back({Lit::neg(vs[i]), Lit::pos(cols[i % m2])});
  }
  build_product(out, rows, next);
  build_product(out, cols, next);
}

std::vector<Var> iota_inputs(int n) {
  std::vector<Var> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return v;
}

}  // namespace

Encoding pairwise_amo(int n) {
  require_n(n, 1, "pairwise_amo");
  std::vector<Clause> cs;
  emit_pairwise(cs, iota_inputs(n));
  return Encoding(Formula(std::move(cs)), iota_inputs(n));
}

Encoding prime_exone(int n) {
  require_n(n, 1, "prime_exone");
  std::vector<Clause> cs;
  emit_pairwise(cs, iota_inputs(n));
  std::vector<Lit> all;
  for (int i = 1; i <= n; ++i) all.push_back(Lit::pos(i));
  cs.push_back(Clause(std::move(all)));
  return Encoding(Formula(std::move(cs)), iota_inputs(n));
}

Encoding sequential_amo(int n) {
  require_n(n, 3, "sequential_amo");
  std::vector<Clause> cs;
  Var next = n + 1;
  build_seq(cs, iota_inputs(n), next, /*tree=*/false);
  return Encoding(Formula(std::move(cs)), iota_inputs(n));
}

Encoding tree_amo(int n) {
  require_n(n, 3, "tree_amo");
  std::vector<Clause> cs;
  Var next = n + 1;
  build_seq(cs, iota_inputs(n), next, /*tree=*/true);
  return Encoding(Formula(std::move(cs)), iota_inputs(n));
}

Encoding product_amo(int n) {
  require_n(n, 3, "product_amo");
  std::vector<Clause> cs;
  Var next = n + 1;
  build_product(cs, iota_inputs(n), next);
  return Encoding(Formula(std::move(cs)), iota_inputs(n));
}

Encoding nonpc_exone(int n) {
  require_n(n, 3, "nonpc_exone");
  Var y = n + 1;
  std::vector<Clause> cs;
  std::vector<Lit> first;
  for (int i = 1; i <= n - 2; ++i) first.push_back(Lit::pos(i));
  first.push_back(Lit::pos(n));
  first.push_back(Lit::pos(y));
  cs.push_back(Clause(std::move(first)));
  cs.push_back({Lit::pos(n - 1), Lit::pos(n), Lit::neg(y)});
  emit_pairwise(cs, iota_inputs(n));
  return Encoding(Formula(std::move(cs)), iota_inputs(n));
}

Encoding partition_fixture(int n, int a, int b, int c, int d) {
  if (a < 1 || b < 1 || c < 1 || d < 1 || a + b + c + d != n)
    throw Error(errc::invalid_parameters,
                "partition_fixture needs four positive blocks summing to n");
  auto block = [&](int lo, int len) {
    std::vector<Var> v(len);
    for (int i = 0; i < len; ++i) v[i] = lo + i;
    return v;
  };
  std::vector<Var> A = block(1, a), B = block(1 + a, b), C = block(1 + a + b, c),
                   D = block(1 + a + b + c, d);
  Var y1 = n + 1, y2 = n + 2, y3 = n + 3, y4 = n + 4, y5 = n + 5;

  auto in = [](const std::vector<Var>& s, Var v) {
    return std::find(s.begin(), s.end(), v) != s.end();
  };
  std::vector<Clause> cs;
  // All-pairs guard except across A-B and C-D.
  for (Var i = 1; i <= n; ++i)
    for (Var j = i + 1; j <= n; ++j) {
      bool skip = (in(A, i) && in(B, j)) || (in(B, i) && in(A, j)) ||
                  (in(C, i) && in(D, j)) || (in(D, i) && in(C, j));
      if (!skip) cs.push_back({Lit::neg(i), Lit::neg(j)});
    }
  cs.push_back({Lit::pos(y1), Lit::pos(y2), Lit::pos(y3), Lit::pos(y4), Lit::pos(y5)});
  auto selector = [&](Var y, const std::vector<Var>& pos_block,
                      const std::vector<Var>& neg_block) {
    std::vector<Lit> big{Lit::neg(y)};
    for (Var v : pos_block) big.push_back(Lit::pos(v));
    cs.push_back(Clause(std::move(big)));
    for (Var v : neg_block) cs.push_back({Lit::neg(y), Lit::neg(v)});
  };
  selector(y1, A, B);
  selector(y2, B, A);
  selector(y3, C, D);
  selector(y4, D, C);
  for (Var i = 1; i <= n; ++i) cs.push_back({Lit::neg(y5), Lit::neg(i)});
  return Encoding(Formula(std::move(cs)), iota_inputs(n));
}

Encoding exone_wrap(const Encoding& inner) {
  if (inner.inputs() != iota_inputs(inner.n()))
    throw Error(errc::invalid_parameters, "wrap needs standard input numbering");
  std::vector<Lit> all;
  for (int i = 1; i <= inner.n(); ++i) all.push_back(Lit::pos(i));
  return Encoding(inner.formula().with(Clause(std::move(all))), inner.inputs());
}

Encoding amo_wrap(const Encoding& inner) {
  int n = inner.n();
  if (inner.inputs() != iota_inputs(n))
    throw Error(errc::invalid_parameters, "wrap needs standard input numbering");
  Var z = n + 1;
  std::vector<Clause> cs;
  cs.push_back({Lit::neg(1), Lit::pos(z)});
  // Inner formula with x1 replaced by z and its auxiliaries shifted up by one.
  for (const auto& cl : inner.formula()) {
    std::vector<Lit> lits;
    for (Lit l : cl) {
      Var v = l.var();
      Var w = v == 1 ? z : (v <= n ? v : v + 1);
      lits.push_back(Lit(w, l.negative()));
    }
    cs.push_back(Clause(std::move(lits)));
  }
  return Encoding(Formula(std::move(cs)), iota_inputs(n));
}

Encoding generate(const EncodingKind& k) {
  switch (k.kind) {
    case Kind::pairwise_amo: return pairwise_amo(k.n);
    case Kind::prime_exone: return prime_exone(k.n);
    case Kind::sequential_amo: return sequential_amo(k.n);
    case Kind::tree_amo: return tree_amo(k.n);
    case Kind::product_amo: return product_amo(k.n);
    case Kind::exone_wrap: return exone_wrap(sequential_amo(k.n));
    case Kind::amo_wrap: return amo_wrap(sequential_amo(k.n));
    case Kind::nonpc_exone: return nonpc_exone(k.n);
    case Kind::partition_fixture:
      return partition_fixture(k.n, k.blocks[0], k.blocks[1], k.blocks[2], k.blocks[3]);
  }
  throw Error(errc::invalid_parameters, "unknown kind");
}

std::size_t expected_size(const EncodingKind& k) {
  auto nn = static_cast<std::size_t>(k.n);
  switch (k.kind) {
    case Kind::pairwise_amo:
      require_n(k.n, 1, "pairwise_amo");
      return nn * (nn - 1) / 2;
    case Kind::prime_exone:
      require_n(k.n, 1, "prime_exone");
      return nn * (nn - 1) / 2 + 1;
    case Kind::sequential_amo:
    case Kind::tree_amo:
      require_n(k.n, 3, "chain encodings");
      return 3 * nn - 6;
    case Kind::product_amo:
      require_n(k.n, 3, "product_amo");
      return product_size(k.n);
    case Kind::exone_wrap:
    case Kind::amo_wrap:
      require_n(k.n, 3, "wraps");
      return 3 * nn - 5;
    case Kind::nonpc_exone:
      require_n(k.n, 3, "nonpc_exone");
      return nn * (nn - 1) / 2 + 2;
    case Kind::partition_fixture: {
      auto [a, b, c, d] = k.blocks;
      if (a < 1 || b < 1 || c < 1 || d < 1 || a + b + c + d != k.n)
        throw Error(errc::invalid_parameters, "bad partition blocks");
      return nn * (nn - 1) / 2 - std::size_t(a) * b - std::size_t(c) * d + 2 * nn + 5;
    }
  }
  throw Error(errc::invalid_parameters, "unknown kind");
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::pairwise_amo: return "pairwise-amo";
    case Kind::prime_exone: return "prime-exone";
    case Kind::sequential_amo: return "sequential-amo";
    case Kind::tree_amo: return "tree-amo";
    case Kind::product_amo: return "product-amo";
    case Kind::exone_wrap: return "exone-wrap";
    case Kind::amo_wrap: return "amo-wrap";
    case Kind::nonpc_exone: return "nonpc-exone";
    case Kind::partition_fixture: return "partition-fixture";
  }
  return "?";
}

std::optional<Kind> kind_from_name(std::string_view name) {
  for (Kind k : {Kind::pairwise_amo, Kind::prime_exone, Kind::sequential_amo,
                 Kind::tree_amo, Kind::product_amo, Kind::exone_wrap, Kind::amo_wrap,
                 Kind::nonpc_exone, Kind::partition_fixture})
    if (name == kind_name(k)) return k;
  return std::nullopt;
}

}  // namespace pcenc
