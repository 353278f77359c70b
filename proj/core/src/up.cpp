#include "pcenc/up.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace pcenc {

bool UPOutcome::has(Lit l) const {
  return std::binary_search(derived.begin(), derived.end(), l);
}

UPOutcome up_closure(const Formula& f, const PartialAssignment& assumptions) {
  UPOutcome out;
  std::map<Var, bool> value;  // var -> is the positive literal true
  auto truth = [&](Lit l) -> int {
    auto it = value.find(l.var());
    if (it == value.end()) return 0;
    return it->second != l.negative() ? 1 : -1;
  };
  std::deque<Lit> queue;
  auto put = [&](Lit l) {
    value[l.var()] = !l.negative();
    queue.push_back(l);
  };
  for (Lit l : assumptions) put(l);  // canonical order: PartialAssignment is sorted

  // Occurrence lists in canonical formula order, so each trigger scans its
  // clauses deterministically.
  std::map<int, std::vector<std::size_t>> occ;  // literal code -> clause indices
  for (std::size_t i = 0; i < f.size(); ++i)
    for (Lit l : f[i]) occ[l.code()].push_back(i);

  auto fire = [&](const Clause& c) -> bool {
    // Returns false when propagation must stop (contradiction found).
    int open = 0;
    Lit unit;
    for (Lit l : c) {
      int s = truth(l);
      if (s == 1) return true;  // satisfied
      if (s == 0) {
        ++open;
        if (open > 1) return true;  // nothing to do yet
        unit = l;
      }
    }
    if (open == 0) {
      out.trace.push_back({c, std::nullopt});
      out.conflict = true;
      return false;
    }
    put(unit);
    out.trace.push_back({c, unit});
    return true;
  };

  // Unit (and empty) clauses of the formula act as initial units.
  for (std::size_t i = 0; i < f.size() && !out.conflict; ++i)
    if (f[i].size() <= 1 && !fire(f[i])) break;

  while (!queue.empty() && !out.conflict) {
    Lit g = queue.front();
    queue.pop_front();
    auto it = occ.find((~g).code());
    if (it == occ.end()) continue;
    for (std::size_t i : it->second)
      if (!fire(f[i])) break;
  }

  out.derived.reserve(value.size());
  for (auto& [v, pos] : value) out.derived.push_back(Lit(v, !pos));
  std::sort(out.derived.begin(), out.derived.end());
  return out;
}

bool derives(const Formula& f, const PartialAssignment& assumptions, Lit h) {
  UPOutcome o = up_closure(f, assumptions);
  return o.conflict || o.has(h);
}

std::string render_trace(const UPOutcome& o) {
  std::string s;
  for (const auto& step : o.trace) {
    s += to_string(step.clause);
    s += " -> ";
    s += step.derived ? to_string(*step.derived) : "conflict";
    s += "\n";
  }
  return s;
}

}  // namespace pcenc
