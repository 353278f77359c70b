// pcenc: command-line frontend over the encoding toolkit.  Subcommands:
//   generate  construct an encoding and write extended DIMACS
//   verify    check a verdict (function match, propagation conditions,
//             input-PC, full-PC, primality) with witness reporting
//   analyze   structural report: regular shape, star analysis, 2-CNF
//             diagnostics, primality, reducible auxiliaries
//   reduce    normalize toward regular form, with a rule-trace sidecar
//   bounds    tabulate lower bounds against generator sizes (CSV/JSON)
//   search    brute-force minimum-size formula search (small n)
//   bench     generation sweep with size/bound columns and optional
//             input-PC verification up to the exhaustive cap
//
// Exit codes: 0 success or verdict-true, 1 verdict-false / not found,
// 2 usage or input errors.  JSON reports share a common envelope
// (tool/version/command/config) described by schemas/report.schema.json.
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcenc/bounds.hpp"
#include "pcenc/cnf.hpp"
#include "pcenc/dimacs.hpp"
#include "pcenc/encodings.hpp"
#include "pcenc/graph.hpp"
#include "pcenc/search.hpp"
#include "pcenc/semantics.hpp"
#include "pcenc/structure.hpp"
#include "pcenc/up.hpp"
#include "pcenc/verify.hpp"

namespace {

using nlohmann::json;
using namespace pcenc;

constexpr const char* kTool = "pcenc";
constexpr const char* kVersion = "0.1.0";

long g_seed = 0;

json envelope(const char* command, json config) {
  config["seed"] = g_seed;
  return json{{"tool", kTool},
              {"version", kVersion},
              {"command", command},
              {"config", std::move(config)}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json lits_json(const std::vector<Lit>& ls) {
  json a = json::array();
  for (Lit l : ls) a.push_back(l.to_dimacs());
  return a;
}

json witness_json(const PCWitness& w) {
  json out;
  out["assumptions"] = lits_json(w.assumptions.lits());
  out["literal"] = w.literal ? json(w.literal->to_dimacs()) : json(nullptr);
  out["reason"] = w.reason;
  return out;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  std::string kind;
  int n = 0;
  std::vector<int> blocks;
  std::string out;
  bool json_out = false;
};

int run_generate(const GenerateArgs& a) {
  auto kind = kind_from_name(a.kind);
  if (!kind) {
    std::cerr << "pcenc: unknown kind '" << a.kind << "'\n";
    return 2;
  }
  EncodingKind ek{*kind, a.n};
  if (!a.blocks.empty()) {
    if (a.blocks.size() != 4) {
      std::cerr << "pcenc: --blocks takes exactly four sizes\n";
      return 2;
    }
    std::copy(a.blocks.begin(), a.blocks.end(), ek.blocks.begin());
  }
  Encoding e = generate(ek);
  if (!a.out.empty()) write_dimacs_file(e, a.out);
  if (a.json_out) {
    json config{{"kind", a.kind}, {"n", a.n}};
    if (!a.blocks.empty()) config["blocks"] = a.blocks;
    if (!a.out.empty()) config["out"] = a.out;
    json rep = envelope("generate", config);
    rep["report"] = {{"clauses", e.formula().size()},
                     {"variables", e.max_var()},
                     {"inputs", e.n()},
                     {"auxiliaries", e.auxiliaries().size()},
                     {"expected_clauses", expected_size(ek)}};
    if (a.out.empty()) rep["report"]["dimacs"] = serialize_dimacs(e);
    emit(rep);
  } else if (a.out.empty()) {
    std::cout << serialize_dimacs(e);
  } else {
    std::cout << "wrote " << a.out << ": " << e.formula().size() << " clauses, "
              << e.max_var() << " variables (" << e.n() << " inputs)\n";
  }
  return 0;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string file;
  std::string function = "auto";  // amo | eo | auto
  std::string mode = "enc";       // enc | p | input-pc | full-pc | prime
  bool trace = false;
  bool fast_families = false;
  int limit = default_var_limit;
};

std::optional<FunctionSpec> resolve_function(const Encoding& e, const std::string& name,
                                             int limit, std::string& resolved) {
  if (name == "amo") {
    resolved = "amo";
    return FunctionSpec::amo(e.n());
  }
  if (name == "eo") {
    resolved = "eo";
    return FunctionSpec::exactly_one(e.n());
  }
  switch (classify(e, limit)) {
    case Classified::amo:
      resolved = "amo";
      return FunctionSpec::amo(e.n());
    case Classified::exactly_one:
      resolved = "eo";
      return FunctionSpec::exactly_one(e.n());
    case Classified::neither:
      resolved = "neither";
      return std::nullopt;
  }
  return std::nullopt;
}

int run_verify(const VerifyArgs& a) {
  Encoding e = parse_dimacs_file(a.file);
  json config{{"file", a.file}, {"function", a.function}, {"mode", a.mode},
              {"limit", a.limit}, {"fast_families", a.fast_families}};
  json rep = envelope("verify", config);
  json r;
  r["mode"] = a.mode;
  r["inputs"] = e.n();
  r["clauses"] = e.formula().size();
  // Modes that do not resolve a target function still carry the key so every
  // report matches the schema.
  r["function"] = nullptr;
  bool verdict = false;
  std::optional<PCWitness> witness;

  auto with_function = [&](auto&& body) -> bool {
    std::string resolved;
    auto f = resolve_function(e, a.function, a.limit, resolved);
    r["function"] = resolved;
    if (!f) {
      witness = PCWitness{{}, std::nullopt,
                          "encoded function is neither at-most-one nor exactly-one"};
      return false;
    }
    return body(*f);
  };

  if (a.mode == "enc") {
    verdict = with_function(
        [&](const FunctionSpec& f) { return is_encoding_of(e, f, a.limit); });
  } else if (a.mode == "p") {
    PCReport pr = check_p_conditions(e);
    verdict = pr.ok;
    r["checked"] = pr.checked;
    witness = pr.witness;
  } else if (a.mode == "input-pc") {
    verdict = with_function([&](const FunctionSpec& f) {
      PCReport pr = is_input_pc(e, f, a.fast_families);
      r["checked"] = pr.checked;
      witness = pr.witness;
      return pr.ok;
    });
  } else if (a.mode == "full-pc") {
    PCReport pr = is_full_pc(e.formula());
    verdict = pr.ok;
    r["checked"] = pr.checked;
    witness = pr.witness;
  } else if (a.mode == "prime") {
    verdict = is_prime(e.formula(), a.limit);
  } else {
    std::cerr << "pcenc: unknown mode '" << a.mode << "'\n";
    return 2;
  }

  r["verdict"] = verdict;
  if (witness) {
    r["witness"] = witness_json(*witness);
    if (a.trace) {
      UPOutcome o = up_closure(e.formula(), witness->assumptions);
      std::istringstream lines(render_trace(o));
      json tr = json::array();
      for (std::string line; std::getline(lines, line);) tr.push_back(line);
      r["trace"] = tr;
    }
  }
  rep["report"] = r;
  emit(rep);
  return verdict ? 0 : 1;
}

// ----------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string file;
  bool json_out = false;
  int limit = default_var_limit;
};

json star_json(const StarReport& st) {
  json entries = json::array();
  for (const StarEntry& s : st.entries) {
    json e;
    e["h"] = s.h.to_dimacs();
    e["i_set"] = s.i_set;
    e["l_set"] = lits_json(s.l_set);
    entries.push_back(e);
  }
  return json{{"entries", entries},
              {"chosen_g", st.chosen_g.to_dimacs()},
              {"chosen_input", st.chosen_input},
              {"type_r_count", st.type_r_count}};
}

json two_cnf_json(const TwoCnfDiagnostics& d) {
  json eq = json::array();
  for (const EqualPBPair& p : d.equal_pb)
    eq.push_back({{"r", p.r}, {"s", p.s}, {"sign_flipped", p.sign_flipped}});
  json tri = json::array();
  for (const auto& t : d.triangles) tri.push_back({t[0], t[1], t[2]});
  const char* branch = d.branch == TwoCnfBranch::equal_pb  ? "equal-pb"
                       : d.branch == TwoCnfBranch::triangle ? "triangle"
                                                            : "mantel";
  return json{{"equal_pb", eq},
              {"triangles", tri},
              {"pb_support", d.pb_support},
              {"aux_total", d.aux_total},
              {"mantel_bound", d.mantel_bound},
              {"mantel_ok", d.mantel_ok},
              {"mantel_tight", d.mantel_tight},
              {"branch", branch},
              {"implied_bound", d.implied_bound}};
}

int run_analyze(const AnalyzeArgs& a) {
  Encoding e = parse_dimacs_file(a.file);
  json r;
  r["inputs"] = e.n();
  r["auxiliaries"] = e.auxiliaries().size();
  r["variables"] = e.max_var();
  r["clauses"] = e.formula().size();

  std::optional<StructureReport> shape;
  try {
    shape = check_regular(e);
    r["regular"] = shape->regular;
    r["q_sizes"] = shape->q_sizes;
    r["type_q_count"] = shape->type_q.size();
    r["type_r_count"] = shape->type_r.size();
    if (shape->p_sets) {
      json pa = json::array(), pb = json::array();
      for (const auto& p : shape->p_sets->pa)
        pa.push_back({p[0].to_dimacs(), p[1].to_dimacs()});
      for (const auto& p : shape->p_sets->pb) pb.push_back({p[0], p[1]});
      r["p_sets"] = {{"pa", pa}, {"pb", pb}};
    }
    if (shape->regular) r["star"] = star_json(star_analysis(e));
  } catch (const Error& err) {
    r["regular"] = false;
    r["shape_error"] = err.what();
  }
  if (shape && shape->regular) {
    try {
      r["two_cnf"] = two_cnf_json(analyze_2cnf(e));
    } catch (const Error&) {
      // not a 2-CNF formula; leave the section out
    }
  }
  try {
    r["prime"] = is_prime(e.formula(), a.limit);
  } catch (const Error&) {
    r["prime"] = nullptr;  // beyond the enumeration limit
  }
  json red = json::array();
  for (auto [v, c] : reducible_auxiliaries(e)) red.push_back({{"aux", v}, {"occurrences", c}});
  r["reducible_auxiliaries"] = red;
  r["unit_implicates"] = lits_json(unit_implicates(e.formula()));

  if (a.json_out) {
    json rep = envelope("analyze", json{{"file", a.file}, {"limit", a.limit}});
    rep["report"] = r;
    emit(rep);
    return 0;
  }
  std::cout << "inputs " << e.n() << ", auxiliaries " << e.auxiliaries().size()
            << ", variables " << e.max_var() << ", clauses " << e.formula().size() << "\n";
  if (r.contains("shape_error")) {
    std::cout << "shape: " << r["shape_error"].get<std::string>() << "\n";
  } else {
    std::cout << "regular: " << (r["regular"].get<bool>() ? "yes" : "no") << " (type-Q "
              << r["type_q_count"] << ", type-R " << r["type_r_count"] << ")\n";
    if (r.contains("star"))
      std::cout << "star: " << r["star"]["entries"].size() << " entries, chosen g="
                << r["star"]["chosen_g"] << " over input " << r["star"]["chosen_input"]
                << "\n";
    if (r.contains("two_cnf")) {
      const json& d = r["two_cnf"];
      std::cout << "2-CNF: equal-PB " << d["equal_pb"].size() << ", triangles "
                << d["triangles"].size() << ", PB support " << d["pb_support"] << " of "
                << d["aux_total"] << " aux, branch " << d["branch"].get<std::string>()
                << ", implied bound " << d["implied_bound"] << "\n";
    }
  }
  std::cout << "prime: "
            << (r["prime"].is_null() ? "unknown (raise --limit)"
                                     : (r["prime"].get<bool>() ? "yes" : "no"))
            << "\n";
  std::cout << "reducible auxiliaries: " << r["reducible_auxiliaries"].size()
            << ", unit implicates: " << r["unit_implicates"].size() << "\n";
  return 0;
}

// ------------------------------------------------------------------ reduce

struct ReduceArgs {
  std::string file;
  std::string out;
  bool json_out = false;
  int limit = default_var_limit;
};

int run_reduce(const ReduceArgs& a) {
  Encoding e = parse_dimacs_file(a.file);
  NormalizeOutcome outc = normalize_to_regular(e, a.limit);
  write_dimacs_file(outc.encoding, a.out);
  std::string trace_path = a.out + ".trace";
  {
    std::ofstream tf(trace_path);
    if (!tf) {
      std::cerr << "pcenc: cannot write " << trace_path << "\n";
      return 2;
    }
    for (ReduceRule rule : outc.trace) tf << rule_name(rule) << "\n";
  }
  bool regular = false;
  try {
    regular = check_regular(outc.encoding).regular;
  } catch (const Error&) {
  }
  if (a.json_out) {
    json rep = envelope("reduce",
                        json{{"file", a.file}, {"out", a.out}, {"limit", a.limit}});
    json steps = json::array();
    for (ReduceRule rule : outc.trace) steps.push_back(rule_name(rule));
    rep["report"] = {{"steps", steps},
                     {"final",
                      {{"inputs", outc.encoding.n()},
                       {"variables", outc.encoding.max_var()},
                       {"clauses", outc.encoding.formula().size()},
                       {"regular", regular}}},
                     {"trace_file", trace_path}};
    emit(rep);
  } else {
    std::cout << "applied " << outc.trace.size() << " steps; wrote " << a.out << " ("
              << outc.encoding.formula().size() << " clauses, "
              << outc.encoding.n() << " inputs, regular: " << (regular ? "yes" : "no")
              << ") and " << trace_path << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------ bounds

struct BoundsArgs {
  int from = 3;
  int to = 64;
  bool csv = false;
  bool json_out = false;
};

int run_bounds(const BoundsArgs& a) {
  std::vector<BoundsRow> rows = bounds_table(a.from, a.to);
  if (a.json_out) {
    json rep = envelope("bounds", json{{"from", a.from}, {"to", a.to}});
    json arr = json::array();
    for (const BoundsRow& r : rows) {
      json j{{"n", r.n},
             {"lb_general", r.lb_general},
             {"lb_2cnf", r.lb_2cnf},
             {"size_pairwise", r.size_pairwise},
             {"size_sequential", r.size_sequential},
             {"size_product", r.size_product}};
      j["regular_floor_ceil"] =
          r.regular_floor_ceil ? json(*r.regular_floor_ceil) : json(nullptr);
      arr.push_back(j);
    }
    rep["report"] = arr;
    emit(rep);
    return 0;
  }
  std::cout << "n,lb_general,lb_2cnf,regular_floor_ceil,size_pairwise,size_sequential,"
               "size_product\n";
  for (const BoundsRow& r : rows) {
    std::cout << r.n << ',' << r.lb_general << ',' << r.lb_2cnf << ',';
    if (r.regular_floor_ceil) std::cout << *r.regular_floor_ceil;
    std::cout << ',' << r.size_pairwise << ',' << r.size_sequential << ','
              << r.size_product << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------ search

struct SearchArgs {
  std::string function = "amo";  // amo | eo
  int n = 3;
  std::string require = "enc";  // enc | p | input-pc
  int max_size = 4;
  bool allow_large = false;
  bool json_out = false;
};

int run_search(const SearchArgs& a) {
  SearchSpec spec;
  if (a.function == "amo")
    spec.function = FunctionSpec::amo(a.n);
  else if (a.function == "eo")
    spec.function = FunctionSpec::exactly_one(a.n);
  else {
    std::cerr << "pcenc: unknown function '" << a.function << "'\n";
    return 2;
  }
  if (a.require == "enc")
    spec.requirement = Requirement::encoding;
  else if (a.require == "p")
    spec.requirement = Requirement::p_encoding;
  else if (a.require == "input-pc")
    spec.requirement = Requirement::input_pc;
  else {
    std::cerr << "pcenc: unknown requirement '" << a.require << "'\n";
    return 2;
  }
  spec.max_size = a.max_size;
  spec.allow_large = a.allow_large;
  SearchResult res = find_minimum(spec);

  std::vector<Var> inputs(static_cast<std::size_t>(a.n));
  std::iota(inputs.begin(), inputs.end(), 1);
  std::string dimacs =
      res.found ? serialize_dimacs(Encoding(res.formula, inputs)) : std::string();

  if (a.json_out) {
    json rep = envelope("search", json{{"function", a.function},
                                       {"n", a.n},
                                       {"require", a.require},
                                       {"max_size", a.max_size},
                                       {"allow_large", a.allow_large}});
    rep["report"] = {{"found", res.found},
                     {"size", res.size},
                     {"certificate", res.certificate},
                     {"nodes_explored", res.nodes_explored},
                     {"candidate_clauses", res.candidate_clauses}};
    if (res.found) rep["report"]["dimacs"] = dimacs;
    emit(rep);
  } else if (res.found) {
    std::cout << "minimum size: " << res.size
              << (res.certificate ? " (exhaustive)" : "") << "\n"
              << "nodes explored: " << res.nodes_explored << ", candidate clauses: "
              << res.candidate_clauses << "\n"
              << dimacs;
  } else {
    std::cout << "no formula of size <= " << a.max_size << " meets the requirement ("
              << res.nodes_explored << " nodes explored)\n";
  }
  return res.found ? 0 : 1;
}

// ------------------------------------------------------------------- bench

struct BenchArgs {
  int from = 3;
  int to = 64;
  bool csv = false;
  bool json_out = false;
  bool verify_pc = false;
  std::vector<std::string> kinds = {"pairwise-amo", "sequential-amo", "tree-amo",
                                    "product-amo"};
};

int run_bench(const BenchArgs& a) {
  constexpr int kExhaustiveCap = 9;
  struct Row {
    std::string kind;
    int n;
    std::size_t clauses, aux;
    long lb_general, lb_2cnf;
    bool size_ok;
    double gen_ms;
    std::string pc;
  };
  std::vector<Row> rows;
  bool all_ok = true;
  for (const std::string& kname : a.kinds) {
    auto kind = kind_from_name(kname);
    if (!kind) {
      std::cerr << "pcenc: unknown kind '" << kname << "'\n";
      return 2;
    }
    for (int n = a.from; n <= a.to; ++n) {
      auto t0 = std::chrono::steady_clock::now();
      Encoding e = generate({*kind, n});
      auto t1 = std::chrono::steady_clock::now();
      Row row;
      row.kind = kname;
      row.n = n;
      row.clauses = e.formula().size();
      row.aux = e.auxiliaries().size();
      row.lb_general = lower_bound_general(n);
      row.lb_2cnf = lower_bound_2cnf(n);
      bool two_cnf = true;
      for (const Clause& c : e.formula())
        if (c.size() > 2) two_cnf = false;
      row.size_ok = static_cast<long>(row.clauses) >= row.lb_general &&
                    (!two_cnf || static_cast<long>(row.clauses) >= row.lb_2cnf);
      row.gen_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      if (a.verify_pc) {
        if (n <= kExhaustiveCap) {
          bool amo_kind = classify(e) == Classified::amo;
          FunctionSpec f = amo_kind ? FunctionSpec::amo(n) : FunctionSpec::exactly_one(n);
          bool ok = is_input_pc(e, f).ok;
          row.pc = ok ? "pass" : "fail";
          if (!ok) all_ok = false;
        } else {
          row.pc = "skipped (cap)";
        }
      }
      if (!row.size_ok) all_ok = false;
      rows.push_back(std::move(row));
    }
  }
  if (a.json_out) {
    json rep = envelope("bench", json{{"from", a.from},
                                      {"to", a.to},
                                      {"kinds", a.kinds},
                                      {"verify_pc", a.verify_pc}});
    json arr = json::array();
    for (const Row& r : rows) {
      json j{{"kind", r.kind},         {"n", r.n},
             {"clauses", r.clauses},   {"auxiliaries", r.aux},
             {"lb_general", r.lb_general}, {"lb_2cnf", r.lb_2cnf},
             {"size_ok", r.size_ok},   {"gen_ms", r.gen_ms}};
      if (a.verify_pc) j["input_pc"] = r.pc;
      arr.push_back(j);
    }
    rep["report"] = arr;
    emit(rep);
  } else {
    std::cout << "kind,n,clauses,auxiliaries,lb_general,lb_2cnf,size_ok,gen_ms";
    if (a.verify_pc) std::cout << ",input_pc";
    std::cout << "\n";
    for (const Row& r : rows) {
      std::cout << r.kind << ',' << r.n << ',' << r.clauses << ',' << r.aux << ','
                << r.lb_general << ',' << r.lb_2cnf << ',' << (r.size_ok ? 1 : 0) << ','
                << r.gen_ms;
      if (a.verify_pc) std::cout << ',' << r.pc;
      std::cout << "\n";
    }
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construct, verify, analyze, and minimize CNF encodings of "
               "at-most-one / exactly-one constraints"};
  app.require_subcommand(1);
  long seed = 0;
  app.add_option("--seed", seed,
                 "seed echoed into JSON reports (replay bookkeeping for randomized "
                 "drivers)")
      ->capture_default_str();

  GenerateArgs ga;
  CLI::App* gen = app.add_subcommand("generate", "construct an encoding");
  gen->add_option("--kind", ga.kind,
                  "pairwise-amo | prime-exone | sequential-amo | tree-amo | "
                  "product-amo | exone-wrap | amo-wrap | nonpc-exone | "
                  "partition-fixture")
      ->required();
  gen->add_option("--n,-n", ga.n, "number of inputs")->required();
  gen->add_option("--blocks", ga.blocks, "partition-fixture block sizes a,b,c,d")
      ->delimiter(',')
      ->expected(4);
  gen->add_option("--out,-o", ga.out, "output DIMACS path (stdout if omitted)");
  gen->add_flag("--json", ga.json_out, "JSON report instead of text");

  VerifyArgs va;
  CLI::App* ver = app.add_subcommand("verify", "check a verdict on an encoding");
  ver->add_option("file", va.file, "extended DIMACS input")->required();
  ver->add_option("--function", va.function, "amo | eo | auto (classify)")
      ->capture_default_str();
  ver->add_option("--mode", va.mode, "enc | p | input-pc | full-pc | prime")
      ->capture_default_str();
  ver->add_flag("--trace", va.trace, "include the propagation trace for a witness");
  ver->add_flag("--fast-families", va.fast_families,
                "input-pc: check only the decisive assumption families for AMO/EO");
  ver->add_option("--limit", va.limit, "enumeration cap in variables")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  AnalyzeArgs aa;
  CLI::App* ana = app.add_subcommand("analyze", "structural report");
  ana->add_option("file", aa.file, "extended DIMACS input")->required();
  ana->add_flag("--json", aa.json_out, "JSON report instead of text");
  ana->add_option("--limit", aa.limit, "enumeration cap in variables")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  ReduceArgs ra;
  CLI::App* red = app.add_subcommand("reduce", "normalize toward regular form");
  red->add_option("file", ra.file, "extended DIMACS input")->required();
  red->add_option("--out,-o", ra.out, "output DIMACS path")->required();
  red->add_flag("--json", ra.json_out, "JSON report instead of text");
  red->add_option("--limit", ra.limit, "enumeration cap in variables")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  BoundsArgs ba;
  CLI::App* bnd = app.add_subcommand("bounds", "lower-bound table");
  bnd->add_option("--from", ba.from, "first n")->capture_default_str();
  bnd->add_option("--to", ba.to, "last n")->capture_default_str();
  bnd->add_flag("--csv", ba.csv, "CSV to stdout (the default)");
  bnd->add_flag("--json", ba.json_out, "JSON report instead of CSV");

  SearchArgs sa;
  CLI::App* sea = app.add_subcommand("search", "minimum-size formula search");
  sea->add_option("--function", sa.function, "amo | eo")->capture_default_str();
  sea->add_option("--n,-n", sa.n, "number of inputs (2..4)")->required();
  sea->add_option("--require", sa.require, "enc | p | input-pc")->capture_default_str();
  sea->add_option("--max-size", sa.max_size, "largest formula size to try")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sea->add_flag("--allow-large", sa.allow_large, "permit max sizes beyond 4");
  sea->add_flag("--json", sa.json_out, "JSON report instead of text");

  BenchArgs bea;
  CLI::App* ben = app.add_subcommand("bench", "generation sweep with bound columns");
  ben->add_option("--from", bea.from, "first n")->capture_default_str();
  ben->add_option("--to", bea.to, "last n")->capture_default_str();
  ben->add_option("--kinds", bea.kinds, "comma-separated generator kinds")
      ->delimiter(',');
  ben->add_flag("--csv", bea.csv, "CSV to stdout (the default)");
  ben->add_flag("--json", bea.json_out, "JSON report instead of CSV");
  ben->add_flag("--verify-pc", bea.verify_pc,
                "verify input-PC exhaustively up to n = 9; larger n report "
                "\"skipped (cap)\"");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  g_seed = seed;

  try {
    if (app.got_subcommand(gen)) return run_generate(ga);
    if (app.got_subcommand(ver)) return run_verify(va);
    if (app.got_subcommand(ana)) return run_analyze(aa);
    if (app.got_subcommand(red)) return run_reduce(ra);
    if (app.got_subcommand(bnd)) return run_bounds(ba);
    if (app.got_subcommand(sea)) return run_search(sa);
    if (app.got_subcommand(ben)) return run_bench(bea);
  } catch (const Error& e) {
    std::cerr << "pcenc: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "pcenc: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
