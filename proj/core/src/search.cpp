#include "pcenc/search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <vector>

#include "pcenc/semantics.hpp"
#include "pcenc/up.hpp"

namespace pcenc {

Consequences semantic_consequences(const Formula& f, const PartialAssignment& rho) {
  Consequences out;
  if (!satisfiable(f, rho)) {
    out.inconsistent = true;
    return out;
  }
  for (Var v : f.vars()) {
    if (rho.assigns(v)) continue;
    for (bool neg : {false, true}) {
      Lit l(v, neg);
      std::vector<Lit> blocked(rho.begin(), rho.end());
      blocked.push_back(~l);
      if (!satisfiable(f, PartialAssignment(std::move(blocked)))) {
        out.literals.push_back(l);
        break;  // a consistent formula cannot entail both signs
      }
    }
  }
  return out;
}

const char* requirement_name(Requirement r) {
  switch (r) {
    case Requirement::encoding: return "encoding";
    case Requirement::p_encoding: return "p-encoding";
    case Requirement::input_pc: return "input-pc";
  }
  return "?";
}

std::optional<Requirement> requirement_from_name(std::string_view name) {
  if (name == "encoding") return Requirement::encoding;
  if (name == "p-encoding") return Requirement::p_encoding;
  if (name == "input-pc") return Requirement::input_pc;
  return std::nullopt;
}

namespace {

// Model set of a clause over assignments to vars 1..n, as a bitset indexed by
// assignment mask (bit v-1 of the mask carries the value of variable v).
std::uint32_t clause_models(const Clause& c, int n) {
  std::uint32_t m = 0;
  for (std::uint32_t a = 0; a < (1u << n); ++a)
    if (eval_clause(c, a)) m |= (1u << a);
  return m;
}

// Every nonempty non-tautological clause over vars 1..n, canonical order.
std::vector<Clause> clause_pool(int n) {
  std::vector<Clause> out;
  for (std::uint32_t varset = 1; varset < (1u << n); ++varset) {
    std::vector<Var> vs;
    for (Var v = 1; v <= n; ++v)
      if (varset & (1u << (v - 1))) vs.push_back(v);
    for (std::uint32_t signs = 0; signs < (1u << vs.size()); ++signs) {
      std::vector<Lit> lits;
      for (std::size_t j = 0; j < vs.size(); ++j)
        lits.push_back(Lit(vs[j], (signs >> j) & 1u));
      out.emplace_back(std::move(lits));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Formula permute_inputs(const Formula& f, const std::vector<Var>& image) {
  std::vector<Clause> cs;
  cs.reserve(f.size());
  for (const Clause& c : f) {
    std::vector<Lit> ls;
    ls.reserve(c.size());
    for (Lit l : c) ls.emplace_back(image[static_cast<std::size_t>(l.var()) - 1], l.negative());
    cs.emplace_back(std::move(ls));
  }
  return Formula(std::move(cs));
}

bool formula_less(const Formula& a, const Formula& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// No permutation of the inputs maps the formula to something smaller.
bool canonical_under_permutations(const Formula& f, int n) {
  std::vector<Var> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  while (std::next_permutation(image.begin(), image.end()))
    if (formula_less(permute_inputs(f, image), f)) return false;
  return true;
}

// Propagation completeness over input assumptions for a formula whose
// variables are exactly the inputs, checked against the model mask.
bool input_pc_holds(const Formula& f, int n, std::uint32_t fmask) {
  // Assumption sets: each variable independently unset / true / false.
  std::vector<int> state(static_cast<std::size_t>(n), 0);
  auto advance = [&]() {
    for (int v = 0; v < n; ++v) {
      if (++state[static_cast<std::size_t>(v)] < 3) return true;
      state[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  };
  while (advance()) {
    std::vector<Lit> lits;
    std::uint32_t compatible = fmask;
    for (Var v = 1; v <= n; ++v) {
      int s = state[static_cast<std::size_t>(v - 1)];
      if (s == 0) continue;
      lits.push_back(Lit(v, s == 2));
      for (std::uint32_t a = 0; a < (1u << n); ++a) {
        bool value = (a >> (v - 1)) & 1u;
        if (value == (s == 2)) compatible &= ~(1u << a);
      }
    }
    UPOutcome o = up_closure(f, PartialAssignment(std::move(lits)));
    if (compatible == 0) {
      if (!o.conflict) return false;
      continue;
    }
    if (o.conflict) return false;  // sound propagation cannot conflict here
    for (Var v = 1; v <= n; ++v) {
      if (state[static_cast<std::size_t>(v - 1)] != 0) continue;
      bool all_true = true, all_false = true;
      for (std::uint32_t a = 0; a < (1u << n); ++a) {
        if (!(compatible & (1u << a))) continue;
        ((a >> (v - 1)) & 1u) ? all_false = false : all_true = false;
      }
      if (all_true && !o.has(Lit::pos(v))) return false;
      if (all_false && !o.has(Lit::neg(v))) return false;
    }
  }
  return true;
}

}  // namespace

SearchResult find_minimum(const SearchSpec& spec) {
  const int n = spec.function.n;
  if (n < 2 || n > 4)
    throw Error(errc::invalid_parameters,
                "find_minimum handles 2 to 4 inputs, got n = " + std::to_string(n));
  if (spec.max_size < 1 || spec.max_size > 8)
    throw Error(errc::invalid_parameters,
                "find_minimum max_size must be in 1..8, got " +
                    std::to_string(spec.max_size));
  if (spec.max_size > 4 && !spec.allow_large)
    throw Error(errc::invalid_parameters,
                "max_size > 4 explodes the subset space; set allow_large to proceed");
  if (spec.function.func == Func::explicit_table &&
      spec.function.table.size() != (1u << n))
    throw Error(errc::invalid_parameters, "explicit table has the wrong size");

  std::uint32_t target = 0;
  for (std::uint32_t m : spec.function.models()) target |= (1u << m);

  // Assignments in which input v is true; used for the satisfiability-per-
  // input condition.
  std::vector<std::uint32_t> pos_mask(static_cast<std::size_t>(n), 0);
  for (std::uint32_t a = 0; a < (1u << n); ++a)
    for (Var v = 1; v <= n; ++v)
      if ((a >> (v - 1)) & 1u) pos_mask[static_cast<std::size_t>(v - 1)] |= (1u << a);

  // Candidate pool.  For the function-bound requirements only implicates of
  // the target can appear in a solution, so everything else is dropped.
  std::vector<Clause> pool = clause_pool(n);
  std::vector<std::uint32_t> masks;
  if (spec.requirement != Requirement::p_encoding) {
    std::vector<Clause> kept;
    for (Clause& c : pool) {
      std::uint32_t m = clause_models(c, n);
      if ((m & target) == target) {
        kept.push_back(std::move(c));
        masks.push_back(m);
      }
    }
    pool = std::move(kept);
  } else {
    masks.reserve(pool.size());
    for (const Clause& c : pool) masks.push_back(clause_models(c, n));
  }

  const bool symmetric = spec.function.func != Func::explicit_table;
  const int M = static_cast<int>(pool.size());

  SearchResult result;
  result.candidate_clauses = pool.size();

  auto evaluate = [&](const std::vector<int>& idx) -> bool {
    ++result.nodes_explored;
    std::uint32_t fmask = ~0u;
    for (int i : idx) fmask &= masks[static_cast<std::size_t>(i)];
    fmask &= (1u << (1u << n)) - 1u;
    if (spec.requirement != Requirement::p_encoding) {
      if (fmask != target) return false;
    } else {
      for (int v = 0; v < n; ++v)
        if ((fmask & pos_mask[static_cast<std::size_t>(v)]) == 0) return false;
    }
    std::vector<Clause> cs;
    cs.reserve(idx.size());
    for (int i : idx) cs.push_back(pool[static_cast<std::size_t>(i)]);
    Formula f(std::move(cs));
    if (symmetric && !canonical_under_permutations(f, n)) return false;
    switch (spec.requirement) {
      case Requirement::encoding:
        break;  // the model mask already decided it
      case Requirement::p_encoding:
        for (Var v = 1; v <= n; ++v) {
          UPOutcome o = up_closure(f, PartialAssignment{Lit::pos(v)});
          if (o.conflict) return false;
          for (Var w = 1; w <= n; ++w)
            if (w != v && !o.has(Lit::neg(w))) return false;
        }
        break;
      case Requirement::input_pc:
        if (!input_pc_holds(f, n, fmask)) return false;
        break;
    }
    result.found = true;
    result.formula = std::move(f);
    result.size = static_cast<int>(idx.size());
    return true;
  };

  for (int s = 1; s <= spec.max_size && !result.found; ++s) {
    if (s > M) break;
    std::vector<int> idx(static_cast<std::size_t>(s));
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      if (evaluate(idx)) break;
      // Colexicographic successor: bump the lowest position that has room
      // below its neighbour, reset everything beneath it.
      int j = 0;
      while (j < s) {
        int limit = (j + 1 < s) ? idx[static_cast<std::size_t>(j + 1)] : M;
        if (idx[static_cast<std::size_t>(j)] + 1 < limit) break;
        ++j;
      }
      if (j == s) break;
      ++idx[static_cast<std::size_t>(j)];
      for (int i = 0; i < j; ++i) idx[static_cast<std::size_t>(i)] = i;
    }
  }

  result.certificate = result.found && result.size <= 4;
  return result;
}

}  // namespace pcenc
