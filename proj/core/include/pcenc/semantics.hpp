// Semantic operations decided exactly at desk scale: model enumeration over a
// bounded variable count, satisfiability, implicate tests, prime reduction.
//
// Operations that build or scan truth tables enforce a variable-count limit
// (default 24) and raise too_large beyond it.  Within the limit, small
// instances are enumerated directly and larger ones are decided by exhaustive
// backtracking with unit propagation; both routes are exact.
#pragma once

#include <cstdint>
#include <vector>

#include "pcenc/cnf.hpp"

namespace pcenc {

inline constexpr int default_var_limit = 24;

// True when the clause evaluates to true under the assignment mask, whose bit
// (v-1) carries the value of variable v.
bool eval_clause(const Clause& c, std::uint32_t mask);
bool eval_formula(const Formula& f, std::uint32_t mask);

// All satisfying assignments over variables 1..num_vars, as masks in
// increasing numeric order.  Raises too_large when num_vars exceeds the limit
// (or the 26-variable table ceiling).
std::vector<std::uint32_t> all_models(const Formula& f, int num_vars,
                                      int var_limit = default_var_limit);

// Exact satisfiability (backtracking with unit propagation; no size limit).
bool satisfiable(const Formula& f);
bool satisfiable(const Formula& f, const PartialAssignment& rho);

// Whether every model of f satisfies c, over vars(f) ∪ vars(c).
bool is_implicate(const Formula& f, const Clause& c, int var_limit = default_var_limit);

// Replace every clause by the canonically smallest implicate of f contained in
// it (which is then a prime implicate); duplicates collapse.  Never grows f.
Formula prime_reduce(const Formula& f, int var_limit = default_var_limit);

}  // namespace pcenc
