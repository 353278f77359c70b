#include "pcenc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

#include "pcenc/bounds.hpp"
#include "pcenc/structure.hpp"

namespace pcenc {

namespace {

ImplicationGraph build_graph(const Formula& f, Var max_var) {
  ImplicationGraph g;
  g.max_var = max_var;
  g.succ.assign(2 * (max_var + 1), {});
  for (const auto& c : f) {
    if (c.size() > 2) throw Error(errc::not_two_cnf, "clause " + to_string(c));
    if (c.size() != 2) continue;
    Lit a = c.lits()[0], b = c.lits()[1];
    g.succ[(~a).code()].push_back(b);
    g.succ[(~b).code()].push_back(a);
    g.arc_count += 2;
  }
  for (auto& v : g.succ) std::sort(v.begin(), v.end());
  return g;
}

}  // namespace

ImplicationGraph implication_graph(const Formula& f) {
  return build_graph(f, f.max_var());
}

ImplicationGraph implication_graph(const Encoding& e) {
  ImplicationGraph g = build_graph(e.formula(), e.max_var());

  // Connected components of the auxiliary co-occurrence graph.
  std::map<Var, std::vector<Var>> adj;
  for (Var y : e.auxiliaries()) adj[y];
  for (const auto& c : e.formula()) {
    std::vector<Var> aux;
    for (Lit l : c)
      if (e.is_aux(l.var())) aux.push_back(l.var());
    for (std::size_t i = 0; i < aux.size(); ++i)
      for (std::size_t j = i + 1; j < aux.size(); ++j) {
        adj[aux[i]].push_back(aux[j]);
        adj[aux[j]].push_back(aux[i]);
      }
  }
  std::set<Var> seen;
  for (Var y : e.auxiliaries()) {
    if (seen.count(y)) continue;
    std::vector<Var> comp;
    std::deque<Var> todo{y};
    seen.insert(y);
    while (!todo.empty()) {
      Var v = todo.front();
      todo.pop_front();
      comp.push_back(v);
      for (Var w : adj[v])
        if (seen.insert(w).second) todo.push_back(w);
    }
    std::sort(comp.begin(), comp.end());
    g.aux_components.push_back(std::move(comp));
  }

  StructureReport rep;
  try {
    rep = check_regular(e);
  } catch (const Error&) {
    return g;  // PB edges only meaningful for p-encodings in regular form
  }
  if (rep.regular)
    for (const auto& pb : rep.p_sets->pb) g.pb_edges.push_back(pb);
  return g;
}

std::vector<Lit> reachable(const ImplicationGraph& g, Lit from) {
  std::set<Lit> seen;
  std::deque<Lit> todo{from};
  while (!todo.empty()) {
    Lit l = todo.front();
    todo.pop_front();
    for (Lit next : g.successors(l))
      if (seen.insert(next).second) todo.push_back(next);
  }
  return {seen.begin(), seen.end()};
}

std::optional<std::vector<Lit>> path(const ImplicationGraph& g, Lit from, Lit to) {
  std::map<Lit, Lit> parent;
  std::deque<Lit> todo{from};
  parent.emplace(from, from);
  while (!todo.empty()) {
    Lit l = todo.front();
    todo.pop_front();
    for (Lit next : g.successors(l)) {
      if (parent.count(next)) continue;
      parent.emplace(next, l);
      if (next == to) {
        std::vector<Lit> p{to};
        for (Lit at = to; at != from; at = parent.at(at)) p.push_back(parent.at(at));
        std::reverse(p.begin(), p.end());
        return p;
      }
      todo.push_back(next);
    }
  }
  if (from == to) return std::vector<Lit>{from};
  return std::nullopt;
}

namespace {

// Minimum clause count of a two-literal propagation encoding, extended to the
// degenerate arities that appear in the case split.
long penc_floor(int n) {
  if (n <= 1) return 0;
  return lower_bound_2cnf(n);
}

}  // namespace

TwoCnfDiagnostics analyze_2cnf(const Encoding& e) {
  for (const auto& c : e.formula())
    if (c.size() > 2) throw Error(errc::not_two_cnf, "clause " + to_string(c));
  StructureReport rep = check_regular(e);
  if (!rep.regular) throw Error(errc::not_regular, "diagnostics need regular form");

  TwoCnfDiagnostics d;
  d.n = e.n();
  d.aux_total = static_cast<int>(e.auxiliaries().size());

  for (std::size_t c = 0; c < e.formula().size(); ++c)
    for (Lit l : e.formula()[c])
      if (!l.negative() && e.is_input(l.var()))
        d.positive_input_occurrences.emplace_back(c, l.var());

  const PSets& p = *rep.p_sets;
  for (std::size_t r = 0; r < p.pb.size(); ++r)
    for (std::size_t s = r + 1; s < p.pb.size(); ++s)
      if (p.pb[r] == p.pb[s]) {
        bool flipped = (p.pa[s][0] == ~p.pa[r][0] && p.pa[s][1] == ~p.pa[r][1]) ||
                       (p.pa[s][0] == ~p.pa[r][1] && p.pa[s][1] == ~p.pa[r][0]);
        d.equal_pb.push_back({e.inputs()[r], e.inputs()[s], flipped});
      }

  // Triangles among distinct PB edges: three pairwise different edges whose
  // endpoints span exactly three vertices.
  std::map<std::array<Var, 2>, Var> representative;  // edge -> smallest input
  for (std::size_t r = 0; r < p.pb.size(); ++r)
    representative.emplace(p.pb[r], e.inputs()[r]);
  std::set<Var> support;
  for (const auto& [edge, rep_input] : representative) {
    support.insert(edge[0]);
    support.insert(edge[1]);
  }
  std::vector<Var> verts(support.begin(), support.end());
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b)
      for (std::size_t c = b + 1; c < verts.size(); ++c) {
        auto e1 = representative.find({verts[a], verts[b]});
        auto e2 = representative.find({verts[a], verts[c]});
        auto e3 = representative.find({verts[b], verts[c]});
        if (e1 != representative.end() && e2 != representative.end() &&
            e3 != representative.end())
          d.triangles.push_back({e1->second, e2->second, e3->second});
      }

  d.pb_support = static_cast<int>(support.size());
  d.mantel_bound = 2.0 * std::sqrt(double(d.n));
  d.mantel_ok = 4L * d.n <= long(d.pb_support) * d.pb_support;
  long ceil_bound = (d.pb_support > 0 && long(d.pb_support) * d.pb_support == 4L * d.n)
                        ? d.pb_support
                        : 0;
  d.mantel_tight = ceil_bound > 0 && d.equal_pb.empty() && d.triangles.empty();

  if (!d.equal_pb.empty()) {
    d.branch = TwoCnfBranch::equal_pb;
    d.implied_bound = penc_floor(d.n - 2) + 7;
  } else if (!d.triangles.empty()) {
    d.branch = TwoCnfBranch::triangle;
    d.implied_bound = penc_floor(d.n - 2) + 6;
  } else {
    d.branch = TwoCnfBranch::mantel;
    d.implied_bound = d.n >= 2 ? lower_bound_2cnf(d.n) : 0;
  }
  return d;
}

}  // namespace pcenc
