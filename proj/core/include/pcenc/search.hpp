// Exact oracles used to cross-check the rest of the toolkit: semantic
// consequence computation (what *must* hold, independent of unit propagation)
// and a brute-force search for the smallest formula over the bare inputs that
// meets a requirement.  Everything here is exhaustive and therefore only
// sized for desk-scale instances.
#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "pcenc/cnf.hpp"
#include "pcenc/verify.hpp"

namespace pcenc {

// Literals semantically entailed by f under rho, decided by exact
// satisfiability tests (no variable limit).
struct Consequences {
  bool inconsistent = false;  // f together with rho has no model
  std::vector<Lit> literals;  // entailed literals on unassigned variables, sorted
};

Consequences semantic_consequences(const Formula& f, const PartialAssignment& rho);

enum class Requirement {
  encoding,    // models over the inputs equal the target function exactly
  p_encoding,  // both propagation conditions hold (target function is ignored)
  input_pc,    // encoding, and propagation-complete over input assumptions
};

const char* requirement_name(Requirement r);
std::optional<Requirement> requirement_from_name(std::string_view name);

struct SearchSpec {
  Requirement requirement = Requirement::encoding;
  FunctionSpec function = FunctionSpec::amo(3);
  int max_size = 4;          // largest formula size to try
  bool allow_large = false;  // required to raise max_size beyond 4
};

struct SearchResult {
  bool found = false;
  Formula formula;  // a smallest formula meeting the requirement, when found
  int size = 0;
  bool certificate = false;  // found within the exhaustively safe regime (size <= 4)
  std::uint64_t nodes_explored = 0;   // candidate subsets examined
  std::size_t candidate_clauses = 0;  // clause pool size after prefiltering
};

// Smallest formula over variables 1..n (no auxiliaries) meeting the
// requirement.  Candidate subsets are enumerated by size, then in
// colexicographic order over the canonical clause pool; for the symmetric
// target functions, subsets that are not lexicographically minimal under
// input permutations are skipped, so the reported formula is the canonical
// representative of its orbit.  Guardrails: 2 <= n <= 4 and
// 1 <= max_size <= 8; max_size > 4 additionally requires allow_large.
SearchResult find_minimum(const SearchSpec& spec);

}  // namespace pcenc
