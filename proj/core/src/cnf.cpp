#include "pcenc/cnf.hpp"

#include <algorithm>
#include <set>

namespace pcenc {

const char* errc_name(errc c) {
  switch (c) {
    case errc::tautological: return "tautological";
    case errc::not_resolvable: return "not resolvable";
    case errc::too_large: return "too large";
    case errc::parse_error: return "parse error";
    case errc::invalid_header: return "invalid header";
    case errc::undeclared_variable: return "undeclared variable";
    case errc::invalid_parameters: return "invalid parameters";
    case errc::not_a_p_encoding: return "not a p-encoding";
    case errc::not_regular: return "not regular";
    case errc::not_prime: return "not prime";
    case errc::already_regular: return "already regular";
    case errc::too_few_inputs: return "too few inputs";
    case errc::not_two_cnf: return "not 2-cnf";
    case errc::invalid_n: return "invalid n";
  }
  return "unknown";
}

std::string to_string(Lit l) { return std::to_string(l.to_dimacs()); }

Clause::Clause(std::vector<Lit> lits) : lits_(std::move(lits)) {
  std::sort(lits_.begin(), lits_.end());
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
  for (std::size_t i = 0; i + 1 < lits_.size(); ++i) {
    if (lits_[i].var() == lits_[i + 1].var())
      throw Error(errc::tautological,
                  "clause contains both " + to_string(lits_[i]) + " and " +
                      to_string(lits_[i + 1]));
  }
}

bool Clause::contains(Lit l) const {
  return std::binary_search(lits_.begin(), lits_.end(), l);
}

bool Clause::contains_var(Var v) const {
  return contains(Lit::pos(v)) || contains(Lit::neg(v));
}

std::strong_ordering Clause::operator<=>(const Clause& o) const {
  if (auto c = lits_.size() <=> o.lits_.size(); c != 0) return c;
  for (std::size_t i = 0; i < lits_.size(); ++i) {
    if (auto c = lits_[i] <=> o.lits_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Clause& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += " ";
    s += to_string(c.lits()[i]);
  }
  return s + ")";
}

Formula::Formula(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
  std::sort(clauses_.begin(), clauses_.end());
  clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
}

bool Formula::contains(const Clause& c) const {
  return std::binary_search(clauses_.begin(), clauses_.end(), c);
}

Var Formula::max_var() const {
  Var m = 0;
  for (const auto& c : clauses_)
    for (Lit l : c) m = std::max(m, l.var());
  return m;
}

std::vector<Var> Formula::vars() const {
  std::set<Var> s;
  for (const auto& c : clauses_)
    for (Lit l : c) s.insert(l.var());
  return {s.begin(), s.end()};
}

bool Formula::mentions(Var v) const {
  for (const auto& c : clauses_)
    if (c.contains_var(v)) return true;
  return false;
}

Formula Formula::with(const Clause& c) const {
  auto cs = clauses_;
  cs.push_back(c);
  return Formula(std::move(cs));
}

Formula Formula::without(const Clause& c) const {
  std::vector<Clause> cs;
  cs.reserve(clauses_.size());
  for (const auto& d : clauses_)
    if (!(d == c)) cs.push_back(d);
  return Formula(std::move(cs));
}

std::string to_string(const Formula& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ", ";
    s += to_string(f[i]);
  }
  return s + "}";
}

PartialAssignment::PartialAssignment(std::vector<Lit> lits) : lits_(std::move(lits)) {
  std::sort(lits_.begin(), lits_.end());
  lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
  for (std::size_t i = 0; i + 1 < lits_.size(); ++i) {
    if (lits_[i].var() == lits_[i + 1].var())
      throw Error(errc::invalid_parameters,
                  "assignment sets variable " + std::to_string(lits_[i].var()) +
                      " both ways");
  }
}

bool PartialAssignment::contains(Lit l) const {
  return std::binary_search(lits_.begin(), lits_.end(), l);
}

bool PartialAssignment::assigns(Var v) const {
  return contains(Lit::pos(v)) || contains(Lit::neg(v));
}

Clause resolve(const Clause& c1, const Clause& c2) {
  Lit clash;
  int clashes = 0;
  for (Lit l : c1) {
    if (c2.contains(~l)) {
      clash = l;
      ++clashes;
    }
  }
  if (clashes != 1)
    throw Error(errc::not_resolvable,
                clashes == 0 ? "no clashing literal" : "more than one clashing literal");
  std::vector<Lit> out;
  out.reserve(c1.size() + c2.size() - 2);
  for (Lit l : c1)
    if (l != clash) out.push_back(l);
  for (Lit l : c2)
    if (l != ~clash) out.push_back(l);
  return Clause(std::move(out));
}

Formula substitute(const Formula& f, Lit g1, Lit g2) {
  if (g1.var() == g2.var())
    throw Error(errc::invalid_parameters, "substitution endpoints share a variable");
  std::vector<Clause> out;
  out.reserve(f.size());
  for (const auto& c : f) {
    std::vector<Lit> lits;
    lits.reserve(c.size());
    for (Lit l : c) {
      if (l == g1)
        lits.push_back(g2);
      else if (l == ~g1)
        lits.push_back(~g2);
      else
        lits.push_back(l);
    }
    try {
      out.push_back(Clause(std::move(lits)));
    } catch (const Error& e) {
      if (e.code() != errc::tautological) throw;
      // image clause became a tautology; drop it
    }
  }
  return Formula(std::move(out));
}

Formula assign(const Formula& f, const PartialAssignment& rho) {
  std::vector<Clause> out;
  out.reserve(f.size());
  for (const auto& c : f) {
    bool satisfied = false;
    std::vector<Lit> rest;
    rest.reserve(c.size());
    for (Lit l : c) {
      if (rho.contains(l)) {
        satisfied = true;
        break;
      }
      if (!rho.contains(~l)) rest.push_back(l);
    }
    if (!satisfied) out.push_back(Clause(std::move(rest)));
  }
  return Formula(std::move(out));
}

Formula dp_eliminate(const Formula& f, Var y) {
  std::vector<Clause> keep, pos, neg;
  for (const auto& c : f) {
    if (c.contains(Lit::pos(y)))
      pos.push_back(c);
    else if (c.contains(Lit::neg(y)))
      neg.push_back(c);
    else
      keep.push_back(c);
  }
  for (const auto& p : pos) {
    for (const auto& q : neg) {
      // Resolvent on y; pairs clashing on a second variable yield tautologies
      // and are skipped.
      std::vector<Lit> lits;
      bool taut = false;
      for (Lit l : p)
        if (l.var() != y) lits.push_back(l);
      for (Lit l : q) {
        if (l.var() == y) continue;
        if (p.contains(~l)) {
          taut = true;
          break;
        }
        lits.push_back(l);
      }
      if (!taut) keep.push_back(Clause(std::move(lits)));
    }
  }
  return Formula(std::move(keep));
}

Encoding::Encoding(Formula formula, std::vector<Var> inputs)
    : formula_(std::move(formula)), inputs_(std::move(inputs)) {
  max_var_ = formula_.max_var();
  for (Var v : inputs_) max_var_ = std::max(max_var_, v);
  std::vector<bool> in(max_var_ + 1, false);
  for (Var v : inputs_) {
    if (v < 1 || v > max_var_ || in[v])
      throw Error(errc::invalid_parameters, "bad input list");
    in[v] = true;
  }
  for (Var v = 1; v <= max_var_; ++v)
    if (!in[v]) aux_.push_back(v);
  validate();
}

Encoding::Encoding(Formula formula, std::vector<Var> inputs, std::vector<Var> auxiliaries)
    : formula_(std::move(formula)), inputs_(std::move(inputs)), aux_(std::move(auxiliaries)) {
  std::sort(aux_.begin(), aux_.end());
  max_var_ = formula_.max_var();
  for (Var v : inputs_) max_var_ = std::max(max_var_, v);
  for (Var v : aux_) max_var_ = std::max(max_var_, v);
  validate();
}

void Encoding::validate() const {
  if (inputs_.empty())
    throw Error(errc::invalid_parameters, "encoding needs at least one input");
  std::vector<int> seen(max_var_ + 1, 0);
  for (Var v : inputs_) {
    if (v < 1) throw Error(errc::invalid_parameters, "non-positive input id");
    ++seen[v];
  }
  for (Var v : aux_) {
    if (v < 1) throw Error(errc::invalid_parameters, "non-positive auxiliary id");
    ++seen[v];
  }
  for (Var v = 1; v <= max_var_; ++v) {
    if (seen[v] == 0)
      throw Error(errc::invalid_parameters,
                  "variable ids are not contiguous: " + std::to_string(v) + " missing");
    if (seen[v] > 1)
      throw Error(errc::invalid_parameters,
                  "variable " + std::to_string(v) + " declared twice");
  }
}

bool Encoding::is_input(Var v) const {
  return std::find(inputs_.begin(), inputs_.end(), v) != inputs_.end();
}

Encoding compact(const Encoding& e) {
  std::vector<int> remap(e.max_var() + 1, 0);
  Var next = 0;
  for (Var v : e.inputs()) remap[v] = ++next;
  for (Var v : e.auxiliaries())
    if (e.formula().mentions(v)) remap[v] = ++next;
  std::vector<Clause> clauses;
  clauses.reserve(e.formula().size());
  for (const auto& c : e.formula()) {
    std::vector<Lit> lits;
    lits.reserve(c.size());
    for (Lit l : c) lits.push_back(Lit(remap[l.var()], l.negative()));
    clauses.push_back(Clause(std::move(lits)));
  }
  std::vector<Var> inputs(e.inputs().size());
  for (std::size_t i = 0; i < inputs.size(); ++i) inputs[i] = static_cast<Var>(i + 1);
  return Encoding(Formula(std::move(clauses)), std::move(inputs));
}

}  // namespace pcenc
