// Verification of encodings: the boolean function an encoding represents, the
// two propagation conditions (every single input settable to true without
// contradiction, and unit propagation completing every pairwise exclusion),
// and propagation completeness over input assumptions or over all variables.
//
// Exhaustive completeness checks enumerate assumption sets ordered by size,
// then by the chosen variable combination, then by sign pattern (positive
// before negative); the first violation found is the reported witness.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcenc/cnf.hpp"
#include "pcenc/semantics.hpp"

namespace pcenc {

enum class Func { amo, exactly_one, explicit_table };

// A boolean function over n inputs: at-most-one, exactly-one, or an explicit
// truth table indexed by input masks (bit j carries input position j).
struct FunctionSpec {
  Func func;
  int n;
  std::vector<bool> table;  // used only by explicit_table, size 2^n

  static FunctionSpec amo(int n) { return {Func::amo, n, {}}; }
  static FunctionSpec exactly_one(int n) { return {Func::exactly_one, n, {}}; }
  static FunctionSpec table_of(int n, std::vector<bool> t);

  bool eval(std::uint32_t mask) const;
  std::vector<std::uint32_t> models() const;  // satisfying input masks, ascending
};

struct PCWitness {
  PartialAssignment assumptions;
  std::optional<Lit> literal;  // entailed but not derived; nullopt: missing conflict
  std::string reason;
};

struct PCReport {
  bool ok = true;
  std::size_t checked = 0;  // assumption sets (or condition instances) examined
  std::optional<PCWitness> witness;
};

// The function encoded on the inputs: existential projection of the
// auxiliaries, as a truth table indexed by input-position masks.  Enumerates
// directly when the total variable count is within the limit, otherwise
// eliminates auxiliaries (fewest occurrences first) under a clause budget.
std::vector<bool> encoded_function(const Encoding& e, int var_limit = default_var_limit,
                                   std::size_t clause_budget = 20000);

bool is_encoding_of(const Encoding& e, const FunctionSpec& f,
                    int var_limit = default_var_limit);

// P1: the formula stays satisfiable with any single input set to true.
// P2: unit propagation from any true input derives every other input negated.
PCReport check_p_conditions(const Encoding& e);

// Propagation completeness over input-literal assumptions, verified against f
// exhaustively (n <= 12).  With fast_families, only the semantically relevant
// assumption families for AMO/EO are checked (sound for those functions).
PCReport is_input_pc(const Encoding& e, const FunctionSpec& f, bool fast_families = false);

// Propagation completeness over assumptions on all variables (<= 16 vars).
PCReport is_full_pc(const Formula& f);

enum class Classified { amo, exactly_one, neither };
Classified classify(const Encoding& e, int var_limit = default_var_limit);

// Every clause is a prime implicate of the formula.
bool is_prime(const Formula& f, int var_limit = default_var_limit);

// All unit implicates of the formula (exact; a healthy encoding has none).
std::vector<Lit> unit_implicates(const Formula& f);

// Auxiliaries occurring in at most four clauses, with their occurrence counts;
// eliminating such a variable never increases the clause count.
std::vector<std::pair<Var, int>> reducible_auxiliaries(const Encoding& e);

}  // namespace pcenc
