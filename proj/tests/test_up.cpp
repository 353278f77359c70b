#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "pcenc/encodings.hpp"
#include "pcenc/graph.hpp"
#include "pcenc/up.hpp"

using namespace pcenc;

namespace {

std::set<int> as_dimacs(const std::vector<Lit>& ls) {
  std::set<int> out;
  for (Lit l : ls) out.insert(l.to_dimacs());
  return out;
}

// Replays a derivation trace, checking that every step is locally justified:
// all but one literal of the clause falsified for a derivation, all literals
// falsified for the closing conflict.
void check_trace(const Formula& f, const PartialAssignment& rho, const UPOutcome& o) {
  std::set<int> have;
  for (Lit l : rho) have.insert(l.to_dimacs());
  for (std::size_t i = 0; i < o.trace.size(); ++i) {
    const TraceStep& step = o.trace[i];
    REQUIRE(f.contains(step.clause));
    int open = 0;
    bool derived_open = false;
    for (Lit l : step.clause) {
      if (have.count(-l.to_dimacs())) continue;  // falsified earlier
      ++open;
      if (step.derived && l == *step.derived) derived_open = true;
    }
    if (step.derived) {
      CHECK(open == 1);
      CHECK(derived_open);
      have.insert(step.derived->to_dimacs());
    } else {
      CHECK(open == 0);
      CHECK(i + 1 == o.trace.size());  // conflict ends the trace
    }
  }
  if (o.conflict) {
    REQUIRE(!o.trace.empty());
    CHECK(!o.trace.back().derived.has_value());
  }
}

}  // namespace

TEST_SUITE_BEGIN("up");

TEST_CASE("closure on the chain encoding from a single input") {
  Formula f = sequential_amo(3).formula();
  UPOutcome o = up_closure(f, PartialAssignment{Lit::pos(1)});
  CHECK(!o.conflict);
  CHECK(as_dimacs(o.derived) == std::set<int>{1, -2, -3});
}

TEST_CASE("conflict on a falsified clause") {
  Formula f({Clause{Lit::neg(1), Lit::neg(2)}});
  UPOutcome o = up_closure(f, PartialAssignment{Lit::pos(1), Lit::pos(2)});
  CHECK(o.conflict);
  CHECK(derives(f, PartialAssignment{Lit::pos(1), Lit::pos(2)}, Lit::pos(3)));
}

TEST_CASE("the non-propagating fixture does not derive the last input") {
  Formula f = nonpc_exone(3).formula();
  UPOutcome o = up_closure(f, PartialAssignment{Lit::neg(1), Lit::neg(2)});
  CHECK(!o.conflict);
  CHECK(as_dimacs(o.derived) == std::set<int>{-1, -2});
  CHECK(!derives(f, PartialAssignment{Lit::neg(1), Lit::neg(2)}, Lit::pos(3)));
}

TEST_CASE("derives on canonical examples") {
  CHECK(derives(sequential_amo(5).formula(), PartialAssignment{Lit::pos(2)}, Lit::neg(5)));
  CHECK(!derives(pairwise_amo(3).formula(), PartialAssignment{Lit::neg(1)}, Lit::neg(2)));
}

TEST_CASE("unit clauses participate as initial units") {
  Formula f({Clause{Lit::pos(1)}, Clause{Lit::neg(1), Lit::pos(2)}});
  UPOutcome o = up_closure(f, {});
  CHECK(as_dimacs(o.derived) == std::set<int>{1, 2});
  check_trace(f, {}, o);
}

TEST_CASE("derived set matches the scan-to-fixpoint oracle on random formulas") {
  std::mt19937 rng(2024);
  for (int iter = 0; iter < 400; ++iter) {
    int nvars = 3 + int(rng() % 6);  // 3..8
    auto rf = oracle::random_formula(rng, nvars, 2 + int(rng() % 9), 1, 3);
    Formula f = oracle::lift(rf);
    std::vector<int> assum;
    std::vector<Lit> assum_l;
    for (int v = 1; v <= nvars; ++v)
      if (rng() % 4 == 0) {
        int s = rng() % 2 ? v : -v;
        assum.push_back(s);
        assum_l.push_back(Lit::from_dimacs(s));
      }
    PartialAssignment rho(assum_l);
    UPOutcome o = up_closure(f, rho);
    oracle::UPResult r = oracle::up(rf, assum);
    CHECK(o.conflict == r.conflict);
    if (!o.conflict) CHECK(as_dimacs(o.derived) == r.lits);
    check_trace(f, rho, o);
  }
}

TEST_CASE("soundness: derived literals are semantic consequences") {
  std::mt19937 rng(555);
  for (int iter = 0; iter < 200; ++iter) {
    int nvars = 3 + int(rng() % 5);
    auto rf = oracle::random_formula(rng, nvars, 2 + int(rng() % 8), 1, 3);
    Formula f = oracle::lift(rf);
    std::vector<int> assum;
    std::vector<Lit> assum_l;
    for (int v = 1; v <= nvars; ++v)
      if (rng() % 4 == 0) {
        int s = rng() % 2 ? v : -v;
        assum.push_back(s);
        assum_l.push_back(Lit::from_dimacs(s));
      }
    UPOutcome o = up_closure(f, PartialAssignment(assum_l));
    oracle::Entailed sem = oracle::entailed(rf, nvars, assum);
    if (o.conflict) {
      CHECK(sem.inconsistent);
    } else if (!sem.inconsistent) {
      std::set<int> assumed(assum.begin(), assum.end());
      for (Lit l : o.derived)
        if (!assumed.count(l.to_dimacs())) CHECK(sem.lits.count(l.to_dimacs()) == 1);
    }
  }
}

TEST_CASE("monotonicity in the assumptions") {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 200; ++iter) {
    int nvars = 3 + int(rng() % 5);
    auto rf = oracle::random_formula(rng, nvars, 2 + int(rng() % 8), 1, 3);
    Formula f = oracle::lift(rf);
    std::vector<Lit> small, large;
    for (int v = 1; v <= nvars; ++v) {
      int roll = int(rng() % 4);
      if (roll == 0) {
        Lit l(v, rng() % 2 == 0);
        small.push_back(l);
        large.push_back(l);
      } else if (roll == 1) {
        large.push_back(Lit(v, rng() % 2 == 0));
      }
    }
    UPOutcome a = up_closure(f, PartialAssignment(small));
    UPOutcome b = up_closure(f, PartialAssignment(large));
    if (a.conflict) continue;  // superset must conflict too, checked below
    if (b.conflict) continue;
    auto da = as_dimacs(a.derived), db = as_dimacs(b.derived);
    CHECK(std::includes(db.begin(), db.end(), da.begin(), da.end()));
  }
}

TEST_CASE("conflicts are monotone too") {
  Formula f({Clause{Lit::neg(1), Lit::neg(2)}, Clause{Lit::neg(1), Lit::pos(3)}});
  UPOutcome a = up_closure(f, PartialAssignment{Lit::pos(1), Lit::pos(2)});
  REQUIRE(a.conflict);
  UPOutcome b = up_closure(f, PartialAssignment{Lit::pos(1), Lit::pos(2), Lit::neg(3)});
  CHECK(b.conflict);
}

TEST_CASE("construction order of the formula does not change the outcome") {
  std::mt19937 rng(313);
  for (int iter = 0; iter < 50; ++iter) {
    int nvars = 4 + int(rng() % 4);
    auto rf = oracle::random_formula(rng, nvars, 3 + int(rng() % 7), 1, 3);
    Formula f1 = oracle::lift(rf);
    std::shuffle(rf.begin(), rf.end(), rng);
    Formula f2 = oracle::lift(rf);
    REQUIRE(f1 == f2);  // canonical order is construction-order-free
    UPOutcome a = up_closure(f1, PartialAssignment{Lit::pos(1)});
    UPOutcome b = up_closure(f2, PartialAssignment{Lit::pos(1)});
    CHECK(a.conflict == b.conflict);
    CHECK(as_dimacs(a.derived) == as_dimacs(b.derived));
  }
}

TEST_CASE("two-literal reversal: g derives ~h iff h derives ~g") {
  std::mt19937 rng(42);
  for (int iter = 0; iter < 150; ++iter) {
    int nvars = 3 + int(rng() % 5);
    auto rf = oracle::random_formula(rng, nvars, 2 + int(rng() % 8), 2, 2);
    Formula f = oracle::lift(rf);
    for (int gi = 1; gi <= nvars; ++gi)
      for (int hi = 1; hi <= nvars; ++hi) {
        if (gi == hi) continue;
        Lit g(gi, rng() % 2 == 0), h(hi, rng() % 2 == 0);
        // a conflict certifies every literal at once and need not be
        // symmetric in (g, h); the reversal law is about conflict-free runs
        if (up_closure(f, PartialAssignment{g}).conflict ||
            up_closure(f, PartialAssignment{h}).conflict)
          continue;
        CHECK(derives(f, PartialAssignment{g}, ~h) ==
              derives(f, PartialAssignment{h}, ~g));
      }
  }
}

TEST_CASE("two-literal derivation follows implication-graph paths") {
  std::mt19937 rng(4242);
  for (int iter = 0; iter < 100; ++iter) {
    int nvars = 3 + int(rng() % 5);
    auto rf = oracle::random_formula(rng, nvars, 2 + int(rng() % 8), 2, 2);
    Formula f = oracle::lift(rf);
    ImplicationGraph g = implication_graph(f);
    for (int vi = 1; vi <= nvars; ++vi) {
      Lit from(vi, rng() % 2 == 0);
      auto reach = reachable(g, from);
      std::set<int> reach_set = as_dimacs(reach);
      for (int wi = 1; wi <= nvars; ++wi)
        for (bool neg : {false, true}) {
          Lit e(wi, neg);
          bool derived = derives(f, PartialAssignment{from}, e);
          bool graph_says = (e == from) || reach_set.count(e.to_dimacs()) != 0;
          // derivation may also come from a conflict; exclude that case
          if (!up_closure(f, PartialAssignment{from}).conflict)
            CHECK(derived == graph_says);
        }
    }
  }
}

TEST_CASE("substitution preserves unit derivations when the image is satisfiable") {
  // 200 random formulas; whenever the closure of f contains h with
  // var(h) != var(g1) and the substituted formula is satisfiable, the
  // substituted formula still derives h.
  std::mt19937 rng(0xBEEF);
  int checked = 0;
  for (int iter = 0; iter < 200; ++iter) {
    int nvars = 4 + int(rng() % 5);  // 4..8
    auto rf = oracle::random_formula(rng, nvars, 3 + int(rng() % 9), 1, 3);
    Formula f = oracle::lift(rf);
    int v1 = 1 + int(rng() % nvars);
    int v2 = 1 + int(rng() % nvars);
    while (v2 == v1) v2 = 1 + int(rng() % nvars);
    Lit g1(v1, rng() % 2 == 0), g2(v2, rng() % 2 == 0);
    Formula image = substitute(f, g1, g2);
    if (!oracle::satisfiable(oracle::raw(image), nvars)) continue;
    UPOutcome base = up_closure(f, {});
    if (base.conflict) continue;  // an unsatisfiable source has no satisfiable image here
    for (Lit h : base.derived) {
      if (h.var() == g1.var()) continue;
      CHECK(derives(image, {}, h));
      ++checked;
    }
  }
  CHECK(checked > 50);  // the property must not pass vacuously
}

TEST_CASE("trace rendering is one step per line") {
  Formula f({Clause{Lit::pos(1)}, Clause{Lit::neg(1), Lit::pos(2)}});
  UPOutcome o = up_closure(f, {});
  std::string text = render_trace(o);
  CHECK(text == "(1) -> 1\n(-1 2) -> 2\n");
}

TEST_SUITE_END();
