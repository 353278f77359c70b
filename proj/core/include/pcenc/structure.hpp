// Structural analysis of encodings around the negative occurrences of inputs.
//
// For input x_i, Q_i is the set of clauses containing ~x_i.  An encoding is in
// regular form when every Q_i consists of exactly two binary clauses that
// mention no other input variable.  The partner literals of those clauses form
// PA_i (and their variables PB_i).  reduce_step rewrites one violation of
// regular form at a time, shrinking the clause count by at least one (same
// inputs) or at least three (one input fewer).
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pcenc/cnf.hpp"
#include "pcenc/semantics.hpp"

namespace pcenc {

struct QSets {
  // Per input (in input order): indices into the formula's canonical clause
  // list of the clauses containing that input negated.
  std::vector<std::vector<std::size_t>> by_input;
};

QSets q_sets(const Encoding& e);

struct PSets {
  std::vector<std::array<Lit, 2>> pa;  // per input: partner literals, in order
  std::vector<std::array<Var, 2>> pb;  // their variables, ascending
};

struct StructureReport {
  std::vector<std::size_t> q_sizes;
  std::vector<bool> r1, r2, r3;  // per input: two clauses / no other inputs / binary
  bool regular = false;
  std::vector<std::size_t> type_q;  // clause indices in any Q_i
  std::vector<std::size_t> type_r;  // the remaining clause indices
  std::optional<PSets> p_sets;      // present when regular
};

// Verifies the propagation conditions first (raising not_a_p_encoding on
// failure), then reports the regular-form conditions per input.
StructureReport check_regular(const Encoding& e);

struct StarEntry {
  Lit h;                    // an auxiliary literal appearing in some PA_i
  std::vector<Var> i_set;   // inputs whose PA contains h
  std::vector<Lit> l_set;   // union of PA_i over i_set
};

struct StarReport {
  std::vector<StarEntry> entries;        // canonical literal order
  std::vector<std::vector<Lit>> m_sets;  // per input: auxiliary literals
                                         // unit-propagated from that input
  Lit chosen_g;      // literal maximizing |I_h| (ties: canonical order)
  Var chosen_input;  // smallest input in I_{chosen_g}
  std::size_t type_r_count = 0;
};

// Star analysis of a regular encoding (raises not_regular otherwise).
StarReport star_analysis(const Encoding& e);

enum class ReduceRule {
  single_negative,  // |Q_i| = 1: substitute the partner by x_i       (size -1)
  many_negatives,   // |Q_i| >= 3: set x_i to false                   (size -3, n-1)
  impure_pair,      // two-input clause: set x_i false, then as above  (size -3, n-1)
  long_clause,      // long Q-clause: resolve it onto the partner,
                    // then substitute                                 (size -1)
};

const char* rule_name(ReduceRule r);

struct ReduceOutcome {
  Encoding encoding;
  ReduceRule rule;
  Var input;  // the input whose violation was rewritten
};

// Applies exactly one rewriting rule to a prime p-encoding not in regular
// form (n >= 4).  Rules are tried in the order many_negatives,
// single_negative, impure_pair, long_clause, at the lowest violating input.
// Structural preconditions taken from primality are re-verified and raise
// not_prime when violated.
ReduceOutcome reduce_step(const Encoding& e);

struct NormalizeOutcome {
  Encoding encoding;
  std::vector<ReduceRule> trace;
};

// Alternates prime reduction and reduce_step until the encoding is regular or
// fewer than four inputs remain.
NormalizeOutcome normalize_to_regular(const Encoding& e, int var_limit = default_var_limit);

}  // namespace pcenc
