// Core CNF value types: literals, clauses, formulas, partial assignments,
// and encodings (formulas with a designated input/auxiliary variable split).
//
// Clauses and formulas have set semantics and are kept in a canonical order:
// literals sorted by (variable, positive-before-negative), clauses sorted by
// (length, then lexicographic over their literal sequences).  All operations
// preserve this normal form, so structural equality is semantic set equality.
#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcenc {

using Var = int;  // 1-based variable index

enum class errc {
  tautological,
  not_resolvable,
  too_large,
  parse_error,
  invalid_header,
  undeclared_variable,
  invalid_parameters,
  not_a_p_encoding,
  not_regular,
  not_prime,
  already_regular,
  too_few_inputs,
  not_two_cnf,
  invalid_n,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

// A literal over variable v, encoded as 2*v + (negative ? 1 : 0).  The induced
// integer order is the canonical literal order: by variable, and for the same
// variable the positive literal precedes the negative one.
class Lit {
 public:
  Lit() : code_(0) {}
  Lit(Var v, bool negative) : code_(2 * v + (negative ? 1 : 0)) {}

  static Lit pos(Var v) { return Lit(v, false); }
  static Lit neg(Var v) { return Lit(v, true); }

  Var var() const { return code_ >> 1; }
  bool negative() const { return (code_ & 1) != 0; }
  Lit operator~() const { return from_code(code_ ^ 1); }

  int to_dimacs() const { return negative() ? -var() : var(); }
  static Lit from_dimacs(int d) { return d < 0 ? neg(-d) : pos(d); }

  int code() const { return code_; }
  static Lit from_code(int c) {
    Lit l;
    l.code_ = c;
    return l;
  }

  auto operator<=>(const Lit&) const = default;

 private:
  int code_;
};

std::string to_string(Lit l);

// A clause: a set of literals with no complementary pair.  The empty clause is
// the contradiction.  Construction canonicalizes (sorts, deduplicates) and
// rejects tautologies.
class Clause {
 public:
  Clause() = default;  // the empty clause ⊥
  explicit Clause(std::vector<Lit> lits);
  Clause(std::initializer_list<Lit> lits) : Clause(std::vector<Lit>(lits)) {}

  bool empty() const { return lits_.empty(); }
  std::size_t size() const { return lits_.size(); }
  bool contains(Lit l) const;
  bool contains_var(Var v) const;

  const std::vector<Lit>& lits() const { return lits_; }
  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }

  // Canonical clause order: by length, then lexicographic on literal codes.
  std::strong_ordering operator<=>(const Clause& o) const;
  bool operator==(const Clause& o) const { return lits_ == o.lits_; }

 private:
  std::vector<Lit> lits_;  // sorted, unique
};

std::string to_string(const Clause& c);

// A CNF formula: a set of clauses in canonical order.
class Formula {
 public:
  Formula() = default;
  explicit Formula(std::vector<Clause> clauses);

  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }
  bool contains(const Clause& c) const;
  const std::vector<Clause>& clauses() const { return clauses_; }
  auto begin() const { return clauses_.begin(); }
  auto end() const { return clauses_.end(); }
  const Clause& operator[](std::size_t i) const { return clauses_[i]; }

  Var max_var() const;                // 0 when empty
  std::vector<Var> vars() const;      // sorted distinct variables occurring
  bool mentions(Var v) const;

  Formula with(const Clause& c) const;
  Formula without(const Clause& c) const;

  bool operator==(const Formula&) const = default;

 private:
  std::vector<Clause> clauses_;  // sorted, unique
};

std::string to_string(const Formula& f);

// A consistent set of literals, at most one per variable.
class PartialAssignment {
 public:
  PartialAssignment() = default;
  explicit PartialAssignment(std::vector<Lit> lits);
  PartialAssignment(std::initializer_list<Lit> lits)
      : PartialAssignment(std::vector<Lit>(lits)) {}

  bool contains(Lit l) const;
  bool assigns(Var v) const;
  std::size_t size() const { return lits_.size(); }
  const std::vector<Lit>& lits() const { return lits_; }
  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }

  bool operator==(const PartialAssignment&) const = default;

 private:
  std::vector<Lit> lits_;  // sorted, consistent
};

// Resolution of two clauses over their unique clashing literal.  Raises
// not_resolvable when there is no clashing pair or more than one.
Clause resolve(const Clause& c1, const Clause& c2);

// Replace g1 by g2 and ~g1 by ~g2 throughout; clauses that become tautological
// are dropped, duplicates collapse.  Requires var(g1) != var(g2).
Formula substitute(const Formula& f, Lit g1, Lit g2);

// Apply a partial assignment: satisfied clauses are removed, falsified
// literals are deleted from the rest (possibly yielding the empty clause).
Formula assign(const Formula& f, const PartialAssignment& rho);

// Davis–Putnam elimination of variable y: all clauses mentioning y are
// replaced by the non-tautological resolvents on y of each pos/neg pair.
Formula dp_eliminate(const Formula& f, Var y);

// A formula together with an ordered input sequence; every other variable in
// 1..V is auxiliary.  Variable ids must be contiguous: inputs and auxiliaries
// partition {1..V} and jointly cover every variable occurring in the formula.
class Encoding {
 public:
  Encoding(Formula formula, std::vector<Var> inputs);
  Encoding(Formula formula, std::vector<Var> inputs, std::vector<Var> auxiliaries);

  const Formula& formula() const { return formula_; }
  const std::vector<Var>& inputs() const { return inputs_; }
  const std::vector<Var>& auxiliaries() const { return aux_; }
  int n() const { return static_cast<int>(inputs_.size()); }
  Var max_var() const { return max_var_; }
  bool is_input(Var v) const;
  bool is_aux(Var v) const { return v >= 1 && v <= max_var_ && !is_input(v); }

  bool operator==(const Encoding&) const = default;

 private:
  void validate() const;
  Formula formula_;
  std::vector<Var> inputs_;  // ordered, distinct
  std::vector<Var> aux_;     // sorted
  Var max_var_ = 0;
};

// Renumber an encoding onto contiguous ids: inputs first (keeping their
// order), then the auxiliaries that still occur in the formula, ascending.
// Auxiliaries without occurrences are dropped.
Encoding compact(const Encoding& e);

}  // namespace pcenc
