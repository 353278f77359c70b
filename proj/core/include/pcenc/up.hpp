// Unit propagation with reproducible traces.  The propagation queue is FIFO,
// seeded with the assumptions in canonical literal order; clauses are scanned
// in canonical formula order; unit clauses of the formula participate as
// initial units.  Propagation stops at the first contradiction.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcenc/cnf.hpp"

namespace pcenc {

struct TraceStep {
  Clause clause;
  std::optional<Lit> derived;  // nullopt marks the contradiction step

  bool operator==(const TraceStep&) const = default;
};

struct UPOutcome {
  bool conflict = false;
  std::vector<Lit> derived;      // sorted; includes the assumptions
  std::vector<TraceStep> trace;  // one entry per propagation step

  bool has(Lit l) const;
};

UPOutcome up_closure(const Formula& f, const PartialAssignment& assumptions);

// Whether unit propagation from the assumptions derives h or a contradiction.
bool derives(const Formula& f, const PartialAssignment& assumptions, Lit h);

// One step per line: "clause -> literal", or "clause -> conflict".
std::string render_trace(const UPOutcome& o);

}  // namespace pcenc
