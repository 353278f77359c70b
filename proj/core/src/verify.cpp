#include "pcenc/verify.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "pcenc/up.hpp"

namespace pcenc {

FunctionSpec FunctionSpec::table_of(int n, std::vector<bool> t) {
  if (n < 1 || n > 26 || t.size() != (std::size_t(1) << n))
    throw Error(errc::invalid_parameters, "table size must be 2^n");
  return {Func::explicit_table, n, std::move(t)};
}

bool FunctionSpec::eval(std::uint32_t mask) const {
  switch (func) {
    case Func::amo: return std::popcount(mask) <= 1;
    case Func::exactly_one: return std::popcount(mask) == 1;
    case Func::explicit_table: return table[mask];
  }
  return false;
}

std::vector<std::uint32_t> FunctionSpec::models() const {
  std::vector<std::uint32_t> out;
  switch (func) {
    case Func::amo:
      out.push_back(0);
      [[fallthrough]];
    case Func::exactly_one:
      for (int i = 0; i < n; ++i) out.push_back(std::uint32_t(1) << i);
      if (func == Func::amo) std::sort(out.begin(), out.end());
      return out;
    case Func::explicit_table:
      for (std::uint32_t m = 0; m < (std::uint32_t(1) << n); ++m)
        if (table[m]) out.push_back(m);
      return out;
  }
  return out;
}

std::vector<bool> encoded_function(const Encoding& e, int var_limit,
                                   std::size_t clause_budget) {
  int n = e.n();
  if (n > 24 || n > var_limit)
    throw Error(errc::too_large, "input table over " + std::to_string(n) + " variables");
  Var total = e.max_var();
  std::vector<bool> table(std::size_t(1) << n, false);

  if (total <= std::min(var_limit, 24)) {
    std::uint64_t count = std::uint64_t(1) << total;
    for (std::uint64_t m = 0; m < count; ++m) {
      auto mask = static_cast<std::uint32_t>(m);
      if (!eval_formula(e.formula(), mask)) continue;
      std::uint32_t proj = 0;
      for (int j = 0; j < n; ++j)
        if ((mask >> (e.inputs()[j] - 1)) & 1u) proj |= std::uint32_t(1) << j;
      table[proj] = true;
    }
    return table;
  }

  // Eliminate auxiliaries, fewest occurrences first, under the clause budget.
  Formula g = e.formula();
  for (;;) {
    Var pick = 0;
    int best = -1;
    for (Var y : e.auxiliaries()) {
      int occ = 0;
      for (const auto& c : g)
        if (c.contains_var(y)) ++occ;
      if (occ > 0 && (best < 0 || occ < best)) {
        best = occ;
        pick = y;
      }
    }
    if (pick == 0) break;
    g = dp_eliminate(g, pick);
    if (g.size() > clause_budget)
      throw Error(errc::too_large, "clause budget exceeded while eliminating auxiliaries");
  }
  // g now mentions inputs only; renumber them onto positions 1..n.
  std::map<Var, Var> pos;
  for (int j = 0; j < n; ++j) pos[e.inputs()[j]] = j + 1;
  std::vector<Clause> remapped;
  remapped.reserve(g.size());
  for (const auto& c : g) {
    std::vector<Lit> lits;
    for (Lit l : c) lits.push_back(Lit(pos.at(l.var()), l.negative()));
    remapped.push_back(Clause(std::move(lits)));
  }
  Formula h(std::move(remapped));
  for (std::uint32_t m = 0; m < (std::uint32_t(1) << n); ++m)
    if (eval_formula(h, m)) table[m] = true;
  return table;
}

bool is_encoding_of(const Encoding& e, const FunctionSpec& f, int var_limit) {
  if (f.n != e.n())
    throw Error(errc::invalid_parameters, "function arity differs from input count");
  std::vector<bool> t = encoded_function(e, var_limit);
  for (std::uint32_t m = 0; m < t.size(); ++m)
    if (t[m] != f.eval(m)) return false;
  return true;
}

PCReport check_p_conditions(const Encoding& e) {
  PCReport r;
  for (Var xi : e.inputs()) {
    ++r.checked;
    if (!satisfiable(e.formula(), PartialAssignment{Lit::pos(xi)})) {
      r.ok = false;
      r.witness = {PartialAssignment{Lit::pos(xi)}, std::nullopt,
                   "formula unsatisfiable with input " + std::to_string(xi) + " true"};
      return r;
    }
  }
  for (Var xi : e.inputs()) {
    UPOutcome o = up_closure(e.formula(), PartialAssignment{Lit::pos(xi)});
    for (Var xj : e.inputs()) {
      if (xi == xj) continue;
      ++r.checked;
      if (!o.conflict && !o.has(Lit::neg(xj))) {
        r.ok = false;
        r.witness = {PartialAssignment{Lit::pos(xi)}, Lit::neg(xj),
                     "propagation from " + std::to_string(xi) + " misses -" +
                         std::to_string(xj)};
        return r;
      }
    }
  }
  return r;
}

namespace {

// Enumerate nonempty sign assignments over `vars`: by size, then by variable
// combination (lexicographic over ascending positions), then by sign pattern
// with positive before negative, last variable fastest.  Stops when body
// returns false.
template <class Body>
void for_each_assumption_set(const std::vector<Var>& vars, Body&& body) {
  int k = static_cast<int>(vars.size());
  for (int s = 1; s <= k; ++s) {
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      for (std::uint32_t signs = 0; signs < (std::uint32_t(1) << s); ++signs) {
        std::vector<Lit> lits(s);
        for (int j = 0; j < s; ++j) {
          bool negative = (signs >> (s - 1 - j)) & 1u;
          lits[j] = Lit(vars[idx[j]], negative);
        }
        if (!body(idx, lits)) return;
      }
      int i = s - 1;
      while (i >= 0 && idx[i] == k - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

// Shared core of the completeness checks: `positions` maps each candidate
// variable to its mask bit, `fmodels` lists the satisfying masks.
PCReport completeness_check(const Formula& formula, const std::vector<Var>& vars,
                            const std::vector<std::uint32_t>& fmodels) {
  PCReport r;
  for_each_assumption_set(vars, [&](const std::vector<int>& idx,
                                    const std::vector<Lit>& lits) {
    ++r.checked;
    std::uint32_t pos_mask = 0, neg_mask = 0;
    for (std::size_t j = 0; j < lits.size(); ++j) {
      std::uint32_t bit = std::uint32_t(1) << idx[j];
      (lits[j].negative() ? neg_mask : pos_mask) |= bit;
    }
    std::uint32_t and_all = ~std::uint32_t(0), or_all = 0;
    bool any = false;
    for (std::uint32_t m : fmodels) {
      if ((m & pos_mask) != pos_mask || (m & neg_mask) != 0) continue;
      any = true;
      and_all &= m;
      or_all |= m;
    }
    PartialAssignment rho{std::vector<Lit>(lits)};
    UPOutcome o = up_closure(formula, rho);
    if (!any) {
      if (!o.conflict) {
        r.ok = false;
        r.witness = {rho, std::nullopt,
                     "assumptions exclude every model but propagation finds no "
                     "contradiction"};
        return false;
      }
      return true;
    }
    if (o.conflict) return true;  // contradiction satisfies every requirement
    for (std::size_t q = 0; q < vars.size(); ++q) {
      std::uint32_t bit = std::uint32_t(1) << q;
      std::optional<Lit> h;
      if (and_all & bit)
        h = Lit::pos(vars[q]);
      else if (!(or_all & bit))
        h = Lit::neg(vars[q]);
      if (h && !o.has(*h)) {
        r.ok = false;
        r.witness = {rho, *h,
                     "entailed literal not derived by unit propagation"};
        return false;
      }
    }
    return true;
  });
  return r;
}

}  // namespace

PCReport is_input_pc(const Encoding& e, const FunctionSpec& f, bool fast_families) {
  if (f.n != e.n())
    throw Error(errc::invalid_parameters, "function arity differs from input count");
  if (!fast_families && e.n() > 12)
    throw Error(errc::too_large, "exhaustive input check limited to 12 inputs");

  if (fast_families && f.func != Func::explicit_table) {
    PCReport r;
    const auto& in = e.inputs();
    int n = e.n();
    // Single positive: every other input must propagate to false.
    for (int i = 0; i < n && r.ok; ++i) {
      UPOutcome o = up_closure(e.formula(), PartialAssignment{Lit::pos(in[i])});
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        ++r.checked;
        if (!o.conflict && !o.has(Lit::neg(in[j]))) {
          r.ok = false;
          r.witness = {PartialAssignment{Lit::pos(in[i])}, Lit::neg(in[j]),
                       "entailed literal not derived by unit propagation"};
          break;
        }
      }
    }
    // Two positives: inconsistent, so propagation must close with a contradiction.
    for (int i = 0; i < n && r.ok; ++i)
      for (int j = i + 1; j < n && r.ok; ++j) {
        ++r.checked;
        UPOutcome o = up_closure(
            e.formula(), PartialAssignment{Lit::pos(in[i]), Lit::pos(in[j])});
        if (!o.conflict) {
          r.ok = false;
          r.witness = {PartialAssignment{Lit::pos(in[i]), Lit::pos(in[j])},
                       std::nullopt,
                       "assumptions exclude every model but propagation finds no "
                       "contradiction"};
        }
      }
    if (f.func == Func::exactly_one) {
      // All-but-one negative entails the remaining input.
      for (int k = 0; k < n && r.ok; ++k) {
        ++r.checked;
        std::vector<Lit> lits;
        for (int i = 0; i < n; ++i)
          if (i != k) lits.push_back(Lit::neg(in[i]));
        UPOutcome o = up_closure(e.formula(), PartialAssignment(lits));
        if (!o.conflict && !o.has(Lit::pos(in[k]))) {
          r.ok = false;
          r.witness = {PartialAssignment(lits), Lit::pos(in[k]),
                       "entailed literal not derived by unit propagation"};
        }
      }
      if (r.ok) {
        ++r.checked;
        std::vector<Lit> lits;
        for (int i = 0; i < n; ++i) lits.push_back(Lit::neg(in[i]));
        UPOutcome o = up_closure(e.formula(), PartialAssignment(lits));
        if (!o.conflict) {
          r.ok = false;
          r.witness = {PartialAssignment(lits), std::nullopt,
                       "assumptions exclude every model but propagation finds no "
                       "contradiction"};
        }
      }
    }
    return r;
  }

  if (e.n() > 12)
    throw Error(errc::too_large, "exhaustive input check limited to 12 inputs");
  return completeness_check(e.formula(), e.inputs(), f.models());
}

PCReport is_full_pc(const Formula& f) {
  Var total = f.max_var();
  if (total > 16)
    throw Error(errc::too_large, "full check limited to 16 variables");
  std::vector<Var> vars(total);
  for (Var v = 1; v <= total; ++v) vars[v - 1] = v;
  return completeness_check(f, vars, all_models(f, total));
}

Classified classify(const Encoding& e, int var_limit) {
  std::vector<bool> t = encoded_function(e, var_limit);
  bool amo = true, eo = true;
  for (std::uint32_t m = 0; m < t.size(); ++m) {
    int pc = std::popcount(m);
    if (t[m] != (pc <= 1)) amo = false;
    if (t[m] != (pc == 1)) eo = false;
  }
  if (amo) return Classified::amo;
  if (eo) return Classified::exactly_one;
  return Classified::neither;
}

bool is_prime(const Formula& f, int var_limit) {
  for (const auto& c : f) {
    for (Lit drop : c) {
      std::vector<Lit> sub;
      for (Lit l : c)
        if (l != drop) sub.push_back(l);
      if (is_implicate(f, Clause(std::move(sub)), var_limit)) return false;
    }
  }
  return true;
}

std::vector<Lit> unit_implicates(const Formula& f) {
  std::vector<Lit> out;
  for (Var v = 1; v <= f.max_var(); ++v) {
    for (bool neg : {false, true}) {
      Lit l(v, neg);
      if (!satisfiable(f, PartialAssignment{~l})) out.push_back(l);
    }
  }
  return out;
}

std::vector<std::pair<Var, int>> reducible_auxiliaries(const Encoding& e) {
  std::vector<std::pair<Var, int>> out;
  for (Var y : e.auxiliaries()) {
    int occ = 0;
    for (const auto& c : e.formula())
      if (c.contains_var(y)) ++occ;
    if (occ <= 4) out.emplace_back(y, occ);
  }
  return out;
}

}  // namespace pcenc
