#include "pcenc/structure.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "pcenc/up.hpp"
#include "pcenc/verify.hpp"

namespace pcenc {

QSets q_sets(const Encoding& e) {
  QSets q;
  q.by_input.resize(e.inputs().size());
  for (std::size_t i = 0; i < e.inputs().size(); ++i) {
    Lit neg = Lit::neg(e.inputs()[i]);
    for (std::size_t c = 0; c < e.formula().size(); ++c)
      if (e.formula()[c].contains(neg)) q.by_input[i].push_back(c);
  }
  return q;
}

namespace {

struct RegularShape {
  QSets q;
  std::vector<bool> r1, r2, r3;
  bool regular;
};

RegularShape shape_of(const Encoding& e) {
  RegularShape s{q_sets(e), {}, {}, {}, true};
  std::size_t n = e.inputs().size();
  s.r1.resize(n);
  s.r2.resize(n);
  s.r3.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Var xi = e.inputs()[i];
    const auto& qs = s.q.by_input[i];
    s.r1[i] = qs.size() == 2;
    s.r2[i] = true;
    s.r3[i] = true;
    for (std::size_t c : qs) {
      const Clause& cl = e.formula()[c];
      if (cl.size() != 2) s.r3[i] = false;
      for (Lit l : cl)
        if (l.var() != xi && e.is_input(l.var())) s.r2[i] = false;
    }
    if (!(s.r1[i] && s.r2[i] && s.r3[i])) s.regular = false;
  }
  return s;
}

PSets p_sets_of(const Encoding& e, const RegularShape& s) {
  PSets p;
  for (std::size_t i = 0; i < e.inputs().size(); ++i) {
    Lit neg = Lit::neg(e.inputs()[i]);
    std::array<Lit, 2> pa;
    int k = 0;
    for (std::size_t c : s.q.by_input[i])
      for (Lit l : e.formula()[c])
        if (l != neg) pa[k++] = l;
    if (pa[1] < pa[0]) std::swap(pa[0], pa[1]);
    std::array<Var, 2> pb{pa[0].var(), pa[1].var()};
    if (pb[1] < pb[0]) std::swap(pb[0], pb[1]);
    p.pa.push_back(pa);
    p.pb.push_back(pb);
  }
  return p;
}

}  // namespace

StructureReport check_regular(const Encoding& e) {
  PCReport pc = check_p_conditions(e);
  if (!pc.ok)
    throw Error(errc::not_a_p_encoding,
                pc.witness ? pc.witness->reason : "propagation conditions fail");
  RegularShape s = shape_of(e);
  StructureReport r;
  r.r1 = s.r1;
  r.r2 = s.r2;
  r.r3 = s.r3;
  r.regular = s.regular;
  for (const auto& qs : s.q.by_input) r.q_sizes.push_back(qs.size());
  std::set<std::size_t> typeq;
  for (const auto& qs : s.q.by_input) typeq.insert(qs.begin(), qs.end());
  r.type_q.assign(typeq.begin(), typeq.end());
  for (std::size_t c = 0; c < e.formula().size(); ++c)
    if (!typeq.count(c)) r.type_r.push_back(c);
  if (r.regular) r.p_sets = p_sets_of(e, s);
  return r;
}

StarReport star_analysis(const Encoding& e) {
  StructureReport rep = check_regular(e);
  if (!rep.regular) throw Error(errc::not_regular, "star analysis needs regular form");
  const PSets& p = *rep.p_sets;
  StarReport star;
  star.type_r_count = rep.type_r.size();

  std::set<Lit> all_pa;
  for (const auto& pa : p.pa) all_pa.insert(pa.begin(), pa.end());
  for (Lit h : all_pa) {
    StarEntry entry;
    entry.h = h;
    std::set<Lit> lset;
    for (std::size_t i = 0; i < p.pa.size(); ++i) {
      if (p.pa[i][0] == h || p.pa[i][1] == h) {
        entry.i_set.push_back(e.inputs()[i]);
        lset.insert(p.pa[i].begin(), p.pa[i].end());
      }
    }
    entry.l_set.assign(lset.begin(), lset.end());
    star.entries.push_back(std::move(entry));
  }

  for (std::size_t i = 0; i < e.inputs().size(); ++i) {
    UPOutcome o = up_closure(e.formula(), PartialAssignment{Lit::pos(e.inputs()[i])});
    std::vector<Lit> m;
    for (Lit l : o.derived)
      if (e.is_aux(l.var())) m.push_back(l);
    star.m_sets.push_back(std::move(m));
  }

  std::size_t best = 0;
  for (const auto& entry : star.entries) {
    if (entry.i_set.size() > best) {
      best = entry.i_set.size();
      star.chosen_g = entry.h;
      star.chosen_input = *std::min_element(entry.i_set.begin(), entry.i_set.end());
    }
  }
  return star;
}

const char* rule_name(ReduceRule r) {
  switch (r) {
    case ReduceRule::single_negative: return "single-negative";
    case ReduceRule::many_negatives: return "many-negatives";
    case ReduceRule::impure_pair: return "impure-pair";
    case ReduceRule::long_clause: return "long-clause";
  }
  return "?";
}

namespace {

// Substitute the lone partner of ~x by x itself.  `clause` is the single
// element of Q_x; its partner must be an auxiliary literal.
Formula substitute_single(const Encoding& e, Var x, const Clause& clause) {
  if (clause.size() != 2)
    throw Error(errc::not_prime, "single negative occurrence is not a binary clause");
  Lit partner;
  for (Lit l : clause)
    if (l != Lit::neg(x)) partner = l;
  if (!e.is_aux(partner.var()))
    throw Error(errc::not_prime, "partner of a lone negative occurrence is an input");
  return substitute(e.formula(), partner, Lit::pos(x));
}

std::vector<Var> inputs_without(const std::vector<Var>& inputs, Var x) {
  std::vector<Var> out;
  for (Var v : inputs)
    if (v != x) out.push_back(v);
  return out;
}

}  // namespace

ReduceOutcome reduce_step(const Encoding& e) {
  if (e.n() < 4) throw Error(errc::too_few_inputs, "reduce_step needs at least 4 inputs");
  RegularShape s = shape_of(e);
  if (s.regular) throw Error(errc::already_regular, "encoding is already in regular form");

  // Rule: some input occurs negatively three or more times -> set it false.
  for (std::size_t i = 0; i < s.q.by_input.size(); ++i) {
    if (s.q.by_input[i].size() < 3) continue;
    Var x = e.inputs()[i];
    Formula g = assign(e.formula(), PartialAssignment{Lit::neg(x)});
    Encoding out(std::move(g), inputs_without(e.inputs(), x));
    return {compact(out), ReduceRule::many_negatives, x};
  }

  // Rule: some input occurs negatively once -> substitute its partner.
  for (std::size_t i = 0; i < s.q.by_input.size(); ++i) {
    const auto& qs = s.q.by_input[i];
    if (qs.size() != 1) continue;
    Var x = e.inputs()[i];
    Formula g = substitute_single(e, x, e.formula()[qs[0]]);
    Encoding out(std::move(g), e.inputs());
    return {compact(out), ReduceRule::single_negative, x};
  }
  for (const auto& qs : s.q.by_input)
    if (qs.empty())
      throw Error(errc::not_a_p_encoding, "an input has no negative occurrence");

  // Every Q_i now has exactly two clauses.
  // Rule: a Q-clause mentions a second input -> it must be (~x_i | ~x_j);
  // set x_i false, which leaves ~x_j in a single binary clause to substitute.
  for (std::size_t i = 0; i < s.q.by_input.size(); ++i) {
    if (s.r2[i]) continue;
    Var x = e.inputs()[i];
    Var other = 0;
    for (std::size_t c : s.q.by_input[i]) {
      const Clause& cl = e.formula()[c];
      for (Lit l : cl)
        if (l.var() != x && e.is_input(l.var())) {
          if (cl.size() != 2 || !(cl == Clause{Lit::neg(x), Lit::neg(l.var())}))
            throw Error(errc::not_prime, "impure clause is not a negative pair");
          if (other == 0) other = l.var();
        }
    }
    Formula g = assign(e.formula(), PartialAssignment{Lit::neg(x)});
    Encoding mid(std::move(g), inputs_without(e.inputs(), x));
    // In the restriction, x_other kept exactly one negative occurrence.
    QSets q2 = q_sets(mid);
    std::size_t pos = 0;
    while (mid.inputs()[pos] != other) ++pos;
    if (q2.by_input[pos].size() != 1)
      throw Error(errc::not_prime, "restriction did not isolate the paired input");
    Formula g2 = substitute_single(mid, other, mid.formula()[q2.by_input[pos][0]]);
    Encoding out(std::move(g2), mid.inputs());
    return {compact(out), ReduceRule::impure_pair, x};
  }

  // Rule: a Q-clause is longer than binary.  Q_i = {(~x|y), (~x|z1|...|zl)}:
  // replace the long clause by (~y|z1|...|zl), making y the lone partner, and
  // substitute it away.
  for (std::size_t i = 0; i < s.q.by_input.size(); ++i) {
    if (s.r3[i]) continue;
    Var x = e.inputs()[i];
    const Clause *binary = nullptr, *longer = nullptr;
    for (std::size_t c : s.q.by_input[i]) {
      const Clause& cl = e.formula()[c];
      (cl.size() == 2 ? binary : longer) = &cl;
    }
    if (!binary || !longer)
      throw Error(errc::not_prime, "expected one binary and one long clause");
    Lit y;
    for (Lit l : *binary)
      if (l != Lit::neg(x)) y = l;
    if (!e.is_aux(y.var()))
      throw Error(errc::not_prime, "partner of the binary clause is an input");
    // The long clause may not be shortcut by propagation from x: unit
    // propagation from x must not falsify any of its other literals (that
    // would contradict its primality).
    UPOutcome o = up_closure(e.formula(), PartialAssignment{Lit::pos(x)});
    std::vector<Lit> rest;
    for (Lit l : *longer) {
      if (l == Lit::neg(x)) continue;
      if (l.var() == y.var())
        throw Error(errc::not_prime, "long clause repeats the partner variable");
      if (o.conflict || o.has(~l))
        throw Error(errc::not_prime, "long clause is shortcut by propagation");
      rest.push_back(l);
    }
    std::vector<Lit> c3{~y};
    c3.insert(c3.end(), rest.begin(), rest.end());
    Formula g = e.formula().without(*longer).with(Clause(std::move(c3)));
    g = substitute(g, y, Lit::pos(x));
    Encoding out(std::move(g), e.inputs());
    return {compact(out), ReduceRule::long_clause, x};
  }

  throw Error(errc::already_regular, "no rule applies");
}

NormalizeOutcome normalize_to_regular(const Encoding& e, int var_limit) {
  if (e.n() < 3) throw Error(errc::too_few_inputs, "normalization needs at least 3 inputs");
  NormalizeOutcome out{e, {}};
  for (;;) {
    if (shape_of(out.encoding).regular) break;
    if (out.encoding.n() < 4) break;
    Encoding primed =
        compact(Encoding(prime_reduce(out.encoding.formula(), var_limit),
                         out.encoding.inputs()));
    out.encoding = std::move(primed);
    if (shape_of(out.encoding).regular) break;
    ReduceOutcome step = reduce_step(out.encoding);
    out.encoding = std::move(step.encoding);
    out.trace.push_back(step.rule);
  }
  return out;
}

}  // namespace pcenc
