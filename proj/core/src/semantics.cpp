#include "pcenc/semantics.hpp"

#include <algorithm>
#include <string>

namespace pcenc {

namespace {

constexpr int kTableCeiling = 26;  // hard ceiling for flat enumeration

// Minimal exact search: repeated unit propagation plus two-way branching on
// the first unassigned variable of an unsatisfied clause.
class Search {
 public:
  explicit Search(const Formula& f) {
    nvars_ = f.max_var();
    clauses_.reserve(f.size());
    for (const auto& c : f) {
      std::vector<int> cl;
      cl.reserve(c.size());
      for (Lit l : c) cl.push_back(l.code());
      clauses_.push_back(std::move(cl));
    }
    val_.assign(nvars_ + 1, 0);
  }

  bool run() { return solve(); }

 private:
  int value_of(int code) const {
    int v = code >> 1;
    if (val_[v] == 0) return 0;
    bool want_true = (code & 1) == 0;
    return (val_[v] == 1) == want_true ? 1 : -1;
  }

  bool solve() {
    // Propagate to fixpoint.
    std::vector<int> trail;
    for (;;) {
      bool changed = false;
      for (const auto& cl : clauses_) {
        int unassigned = 0, last = 0;
        bool sat = false;
        for (int code : cl) {
          int s = value_of(code);
          if (s == 1) {
            sat = true;
            break;
          }
          if (s == 0) {
            ++unassigned;
            last = code;
            if (unassigned > 1) break;
          }
        }
        if (sat) continue;
        if (unassigned == 0) {
          undo(trail);
          return false;
        }
        if (unassigned == 1) {
          set(last, trail);
          changed = true;
        }
      }
      if (!changed) break;
    }
    int branch = pick_branch();
    if (branch == 0) {
      undo(trail);
      return true;  // every clause satisfied
    }
    for (int code : {branch, branch ^ 1}) {
      std::vector<int> sub;
      set(code, sub);
      if (solve()) {
        undo(sub);
        undo(trail);
        return true;
      }
      undo(sub);
    }
    undo(trail);
    return false;
  }

  // First unassigned variable of an unsatisfied clause (positive phase), or 0.
  int pick_branch() const {
    for (const auto& cl : clauses_) {
      bool sat = false;
      int first = 0;
      for (int code : cl) {
        int s = value_of(code);
        if (s == 1) {
          sat = true;
          break;
        }
        if (s == 0 && first == 0) first = code & ~1;
      }
      if (!sat && first != 0) return first;
    }
    return 0;
  }

  void set(int code, std::vector<int>& trail) {
    int v = code >> 1;
    val_[v] = (code & 1) ? -1 : 1;
    trail.push_back(v);
  }

  void undo(std::vector<int>& trail) {
    for (int v : trail) val_[v] = 0;
    trail.clear();
  }

  std::vector<std::vector<int>> clauses_;
  std::vector<signed char> val_;
  int nvars_ = 0;
};

}  // namespace

bool eval_clause(const Clause& c, std::uint32_t mask) {
  for (Lit l : c) {
    bool bit = (mask >> (l.var() - 1)) & 1u;
    if (bit != l.negative()) return true;
  }
  return false;
}

bool eval_formula(const Formula& f, std::uint32_t mask) {
  for (const auto& c : f)
    if (!eval_clause(c, mask)) return false;
  return true;
}

std::vector<std::uint32_t> all_models(const Formula& f, int num_vars, int var_limit) {
  if (num_vars < 0 || num_vars > var_limit || num_vars > kTableCeiling)
    throw Error(errc::too_large,
                std::to_string(num_vars) + " variables exceed the enumeration limit of " +
                    std::to_string(std::min(var_limit, kTableCeiling)));
  if (f.max_var() > num_vars)
    throw Error(errc::invalid_parameters, "formula mentions variables beyond the range");
  std::vector<std::uint32_t> out;
  std::uint64_t count = std::uint64_t(1) << num_vars;
  for (std::uint64_t m = 0; m < count; ++m)
    if (eval_formula(f, static_cast<std::uint32_t>(m))) out.push_back(static_cast<std::uint32_t>(m));
  return out;
}

bool satisfiable(const Formula& f) {
  for (const auto& c : f)
    if (c.empty()) return false;
  if (f.empty()) return true;
  return Search(f).run();
}

bool satisfiable(const Formula& f, const PartialAssignment& rho) {
  return satisfiable(assign(f, rho));
}

bool is_implicate(const Formula& f, const Clause& c, int var_limit) {
  Var v = f.max_var();
  for (Lit l : c) v = std::max(v, l.var());
  if (v > var_limit)
    throw Error(errc::too_large, std::to_string(v) + " variables exceed the limit of " +
                                     std::to_string(var_limit));
  if (v <= 16) {
    std::uint64_t count = std::uint64_t(1) << v;
    for (std::uint64_t m = 0; m < count; ++m) {
      auto mask = static_cast<std::uint32_t>(m);
      if (eval_formula(f, mask) && !eval_clause(c, mask)) return false;
    }
    return true;
  }
  // f entails c iff f with every literal of c flipped to a unit is unsatisfiable.
  std::vector<Lit> negs;
  negs.reserve(c.size());
  for (Lit l : c) negs.push_back(~l);
  return !satisfiable(assign(f, PartialAssignment(std::move(negs))));
}

namespace {

// Canonically smallest implicate of f among the subclauses of c.  Subsets are
// scanned by size, then lexicographically over the (sorted) literal sequence,
// so the first hit is minimal in the clause order and therefore prime.
Clause minimal_implicate_within(const Formula& f, const Clause& c, int var_limit) {
  const auto& lits = c.lits();
  int k = static_cast<int>(lits.size());
  for (int s = 0; s < k; ++s) {
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      std::vector<Lit> sub;
      sub.reserve(s);
      for (int i : idx) sub.push_back(lits[i]);
      Clause candidate(std::move(sub));
      if (is_implicate(f, candidate, var_limit)) return candidate;
      // next s-combination in lexicographic order
      int i = s - 1;
      while (i >= 0 && idx[i] == k - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return c;
}

}  // namespace

Formula prime_reduce(const Formula& f, int var_limit) {
  std::vector<Clause> out;
  out.reserve(f.size());
  for (const auto& c : f) out.push_back(minimal_implicate_within(f, c, var_limit));
  return Formula(std::move(out));
}

}  // namespace pcenc
