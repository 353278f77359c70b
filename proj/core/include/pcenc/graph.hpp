// Implication graphs of 2-CNF formulas and the structural diagnostics they
// support: for each binary clause (g | h) the graph carries the arcs ~g -> h
// and ~h -> g, so unit propagation from a literal reaches exactly the graph
// successors.  The encoding-aware build also decomposes the auxiliary
// co-occurrence graph into connected components and collects the PB edges
// (partner variable pairs) of a regular encoding.
#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pcenc/cnf.hpp"

namespace pcenc {

struct ImplicationGraph {
  Var max_var = 0;
  std::vector<std::vector<Lit>> succ;  // indexed by literal code, targets sorted
  std::size_t arc_count = 0;
  // Filled by the encoding-aware build:
  std::vector<std::vector<Var>> aux_components;  // auxiliary co-occurrence graph
  std::vector<std::array<Var, 2>> pb_edges;      // per input, when regular

  // Literals over variables the formula never mentions have no arcs.
  const std::vector<Lit>& successors(Lit l) const {
    static const std::vector<Lit> none{};
    return l.code() < succ.size() ? succ[l.code()] : none;
  }
};

// Raises not_two_cnf when a clause has more than two literals.  Unit clauses
// contribute no arcs.
ImplicationGraph implication_graph(const Formula& f);
ImplicationGraph implication_graph(const Encoding& e);

// Literals reachable from `from` (excluding it unless on a cycle), sorted.
std::vector<Lit> reachable(const ImplicationGraph& g, Lit from);

// A shortest arc path from -> to, inclusive, or nullopt.
std::optional<std::vector<Lit>> path(const ImplicationGraph& g, Lit from, Lit to);

struct EqualPBPair {
  Var r, s;            // inputs with identical partner variable pairs
  bool sign_flipped;   // whether PA_s is the literal-wise negation of PA_r
};

enum class TwoCnfBranch { equal_pb, triangle, mantel };

struct TwoCnfDiagnostics {
  int n = 0;
  std::vector<std::pair<std::size_t, Var>> positive_input_occurrences;
  std::vector<EqualPBPair> equal_pb;
  std::vector<std::array<Var, 3>> triangles;  // representative input triples
  int pb_support = 0;   // auxiliary variables incident to a PB edge
  int aux_total = 0;
  double mantel_bound = 0.0;  // 2*sqrt(n)
  bool mantel_ok = false;     // n <= pb_support^2 / 4
  bool mantel_tight = false;  // pb_support == ceil(2*sqrt(n)) and n == pb_support^2/4
  TwoCnfBranch branch = TwoCnfBranch::mantel;
  long implied_bound = 0;  // clause-count lower bound implied by the branch
};

// Structural case analysis of a regular 2-CNF p-encoding (raises not_two_cnf
// or not_regular).  The branch mirrors the case split used to bound minimum
// two-literal encodings: identical PB pairs, PB triangles, else the
// triangle-free (Mantel) count of auxiliaries.
TwoCnfDiagnostics analyze_2cnf(const Encoding& e);

}  // namespace pcenc
