// End-to-end tests for the pcenc command-line tool: exit codes, JSON report
// shapes (validated against schemas/report.schema.json), CSV layouts, written
// files and trace sidecars, and witness details.  The binary path and schema
// path arrive via the PCENC_BIN / PCENC_SCHEMA compile definitions.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "pcenc/bounds.hpp"
#include "pcenc/cnf.hpp"
#include "pcenc/dimacs.hpp"
#include "pcenc/encodings.hpp"

using nlohmann::json;
using namespace pcenc;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(PCENC_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int rc = pclose(pipe);
  REQUIRE(WIFEXITED(rc));
  return {WEXITSTATUS(rc), out};
}

std::string tmp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("pcenc_cli_" + name)).string();
}

std::string shquote(const std::string& path) { return "\"" + path + "\""; }

std::string write_encoding(const std::string& name, const Encoding& e) {
  std::string path = tmp_path(name);
  write_dimacs_file(e, path);
  return path;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

// ------------------------------------------------------------------------
// Minimal JSON-schema checker covering exactly the draft-07 subset the
// report schema uses: const, enum, type (name or list of names), required,
// properties, items (single schema), minimum, oneOf.
// ------------------------------------------------------------------------

bool type_matches(const json& inst, const std::string& t) {
  if (t == "object") return inst.is_object();
  if (t == "array") return inst.is_array();
  if (t == "string") return inst.is_string();
  if (t == "integer") return inst.is_number_integer();
  if (t == "number") return inst.is_number();
  if (t == "boolean") return inst.is_boolean();
  if (t == "null") return inst.is_null();
  return false;
}

void validate(const json& inst, const json& schema, const std::string& where,
              std::vector<std::string>& errors) {
  if (!schema.is_object()) return;
  if (schema.contains("const") && inst != schema["const"]) {
    errors.push_back(where + ": expected const " + schema["const"].dump() + ", got " +
                     inst.dump());
    return;
  }
  if (schema.contains("enum")) {
    bool hit = false;
    for (const json& option : schema["enum"])
      if (inst == option) hit = true;
    if (!hit) {
      errors.push_back(where + ": " + inst.dump() + " not in enum " +
                       schema["enum"].dump());
      return;
    }
  }
  if (schema.contains("type")) {
    const json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(inst, t.get<std::string>());
    } else {
      for (const json& name : t)
        if (type_matches(inst, name.get<std::string>())) ok = true;
    }
    if (!ok) {
      errors.push_back(where + ": type mismatch (wanted " + t.dump() + ")");
      return;
    }
  }
  if (schema.contains("minimum") && inst.is_number() &&
      inst.get<double>() < schema["minimum"].get<double>()) {
    errors.push_back(where + ": " + inst.dump() + " below minimum " +
                     schema["minimum"].dump());
  }
  if (schema.contains("required") && inst.is_object()) {
    for (const json& key : schema["required"])
      if (!inst.contains(key.get<std::string>()))
        errors.push_back(where + ": missing required key '" + key.get<std::string>() +
                         "'");
  }
  if (schema.contains("properties") && inst.is_object()) {
    for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
      if (inst.contains(it.key()))
        validate(inst.at(it.key()), it.value(), where + "." + it.key(), errors);
  }
  if (schema.contains("items") && inst.is_array()) {
    std::size_t i = 0;
    for (const json& element : inst)
      validate(element, schema["items"], where + "[" + std::to_string(i++) + "]",
               errors);
  }
  if (schema.contains("oneOf")) {
    int hits = 0;
    for (const json& branch : schema["oneOf"]) {
      std::vector<std::string> scratch;
      validate(inst, branch, where, scratch);
      if (scratch.empty()) ++hits;
    }
    if (hits != 1)
      errors.push_back(where + ": oneOf matched " + std::to_string(hits) +
                       " branches (expected exactly 1)");
  }
}

const json& schema_doc() {
  static const json schema = [] {
    std::ifstream in(PCENC_SCHEMA);
    json j;
    in >> j;
    return j;
  }();
  return schema;
}

void check_schema(const json& doc) {
  REQUIRE(schema_doc().is_object());
  std::vector<std::string> errors;
  validate(doc, schema_doc(), "$", errors);
  for (const std::string& e : errors) MESSAGE(e);
  CHECK(errors.empty());
}

json parse_report(const RunResult& r) {
  json doc = json::parse(r.out, nullptr, false);
  REQUIRE_FALSE(doc.is_discarded());
  check_schema(doc);
  return doc;
}

void check_envelope(const json& doc, const std::string& command) {
  CHECK(doc.at("tool") == "pcenc");
  CHECK(doc.at("version").is_string());
  CHECK(doc.at("command") == command);
  CHECK(doc.at("config").at("seed").is_number_integer());
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("generate: product kind json report with inline dimacs") {
  RunResult r = run_cli("generate --kind product-amo --n 25 --json");
  CHECK(r.status == 0);
  json doc = parse_report(r);
  check_envelope(doc, "generate");
  CHECK(doc["config"]["seed"] == 0);
  CHECK(doc["config"]["kind"] == "product-amo");
  CHECK(doc["config"]["n"] == 25);
  const json& rep = doc["report"];
  CHECK(rep["clauses"] == 68);
  CHECK(rep["variables"] == 39);
  CHECK(rep["inputs"] == 25);
  CHECK(rep["auxiliaries"] == 14);
  CHECK(rep["expected_clauses"] == 68);
  REQUIRE(rep.contains("dimacs"));
  Encoding via_cli = parse_dimacs(rep["dimacs"].get<std::string>());
  CHECK(via_cli == generate({Kind::product_amo, 25}));
}

TEST_CASE("generate: --out writes the dimacs file and drops the inline payload") {
  std::string path = tmp_path("gen_out.cnf");
  RunResult r = run_cli("generate --kind sequential-amo --n 5 --out " + shquote(path) +
                        " --json");
  CHECK(r.status == 0);
  json doc = parse_report(r);
  CHECK_FALSE(doc["report"].contains("dimacs"));
  CHECK(parse_dimacs_file(path) == sequential_amo(5));

  RunResult text = run_cli("generate --kind sequential-amo --n 5 --out " + shquote(path));
  CHECK(text.status == 0);
  CHECK(text.out.rfind("wrote ", 0) == 0);
}

TEST_CASE("generate: plain dimacs on stdout without --out") {
  RunResult r = run_cli("generate --kind sequential-amo --n 5");
  CHECK(r.status == 0);
  CHECK(r.out == serialize_dimacs(sequential_amo(5)));
}

TEST_CASE("generate: partition fixture accepts comma-separated blocks") {
  RunResult r = run_cli("generate --kind partition-fixture --n 8 --blocks 2,2,2,2 --json");
  CHECK(r.status == 0);
  json doc = parse_report(r);
  CHECK(doc["report"]["clauses"] == 41);
  CHECK(doc["report"]["expected_clauses"] == 41);
  CHECK(doc["report"]["variables"] == 13);
  CHECK(doc["report"]["auxiliaries"] == 5);
}

TEST_CASE("verify: sequential chain passes input-pc with a full tally") {
  std::string path = write_encoding("seq6.cnf", sequential_amo(6));
  RunResult r = run_cli("verify " + shquote(path) + " --function amo --mode input-pc");
  CHECK(r.status == 0);
  json doc = parse_report(r);
  check_envelope(doc, "verify");
  const json& rep = doc["report"];
  CHECK(rep["verdict"] == true);
  CHECK(rep["function"] == "amo");
  CHECK(rep["mode"] == "input-pc");
  CHECK(rep["inputs"] == 6);
  CHECK(rep["checked"] == 728);  // 3^6 - 1 nonempty assumption sets
  CHECK_FALSE(rep.contains("witness"));

  RunResult enc = run_cli("verify " + shquote(path) + " --mode enc");
  CHECK(enc.status == 0);
  json enc_doc = parse_report(enc);
  CHECK(enc_doc["report"]["function"] == "amo");  // auto-classified
  CHECK(enc_doc["report"]["verdict"] == true);
}

TEST_CASE("verify: propagation-incomplete fixture fails with the canonical witness") {
  std::string path = write_encoding("nonpc5.cnf", nonpc_exone(5));
  RunResult r = run_cli("verify " + shquote(path) +
                        " --function eo --mode input-pc --trace");
  CHECK(r.status == 1);
  json doc = parse_report(r);
  const json& rep = doc["report"];
  CHECK(rep["verdict"] == false);
  CHECK(rep["checked"] == 146);
  REQUIRE(rep.contains("witness"));
  CHECK(rep["witness"]["assumptions"] == json::array({-1, -2, -3, -4}));
  CHECK(rep["witness"]["literal"] == 5);
  CHECK(rep["witness"]["reason"].is_string());
  REQUIRE(rep.contains("trace"));
  CHECK(rep["trace"].empty());  // nothing propagates from the witness assumptions
}

TEST_CASE("verify: modes without a target function report it as null") {
  std::string path = write_encoding("seq5.cnf", sequential_amo(5));

  RunResult p = run_cli("verify " + shquote(path) + " --mode p");
  CHECK(p.status == 0);
  json p_doc = parse_report(p);
  CHECK(p_doc["report"]["function"].is_null());
  CHECK(p_doc["report"]["verdict"] == true);
  CHECK(p_doc["report"]["checked"] == 25);  // 5 inputs + 20 ordered pairs

  std::string path4 = write_encoding("seq4.cnf", sequential_amo(4));
  RunResult full = run_cli("verify " + shquote(path4) + " --mode full-pc");
  CHECK(full.status == 0);
  json full_doc = parse_report(full);
  CHECK(full_doc["report"]["function"].is_null());
  CHECK(full_doc["report"]["verdict"] == true);

  RunResult prime = run_cli("verify " + shquote(path) + " --mode prime");
  CHECK(prime.status == 0);
  json prime_doc = parse_report(prime);
  CHECK(prime_doc["report"]["function"].is_null());
  CHECK(prime_doc["report"]["verdict"] == true);
  CHECK_FALSE(prime_doc["report"].contains("checked"));
}

TEST_CASE("verify: a formula that is neither amo nor eo classifies as neither") {
  Encoding or12(Formula({Clause{Lit::pos(1), Lit::pos(2)}}), {1, 2});
  std::string path = write_encoding("or12.cnf", or12);
  RunResult r = run_cli("verify " + shquote(path) + " --mode enc");
  CHECK(r.status == 1);
  json doc = parse_report(r);
  CHECK(doc["report"]["function"] == "neither");
  CHECK(doc["report"]["verdict"] == false);
  REQUIRE(doc["report"].contains("witness"));
  CHECK(doc["report"]["witness"]["literal"].is_null());
}

TEST_CASE("usage and input errors exit 2; help exits 0") {
  std::string seq5 = write_encoding("seq5.cnf", sequential_amo(5));
  std::string garbage = tmp_path("garbage.cnf");
  {
    std::ofstream out(garbage);
    out << "this is not dimacs\n";
  }
  CHECK(run_cli("verify " + shquote(tmp_path("missing.cnf")) + " --mode enc").status == 2);
  CHECK(run_cli("verify " + shquote(seq5) + " --mode bogus").status == 2);
  CHECK(run_cli("verify " + shquote(garbage) + " --mode enc").status == 2);
  CHECK(run_cli("generate --kind no-such-kind --n 5").status == 2);
  CHECK(run_cli("generate --kind sequential-amo --n 2").status == 2);  // domain error
  CHECK(run_cli("").status == 2);            // a subcommand is required
  CHECK(run_cli("bounds --wat").status == 2);  // unknown option

  RunResult help = run_cli("--help");
  CHECK(help.status == 0);
  CHECK(help.out.find("generate") != std::string::npos);
  CHECK(run_cli("generate --help").status == 0);
}

TEST_CASE("analyze: product encoding structural report") {
  std::string path = write_encoding("p25.cnf", generate({Kind::product_amo, 25}));
  RunResult r = run_cli("analyze " + shquote(path) + " --json");
  CHECK(r.status == 0);
  json doc = parse_report(r);
  check_envelope(doc, "analyze");
  const json& rep = doc["report"];
  CHECK(rep["inputs"] == 25);
  CHECK(rep["auxiliaries"] == 14);
  CHECK(rep["variables"] == 39);
  CHECK(rep["clauses"] == 68);
  CHECK(rep["regular"] == true);
  CHECK(rep["type_q_count"] == 50);  // two type-Q clauses per input
  CHECK(rep["prime"].is_null());     // 39 variables exceed the enumeration limit
  REQUIRE(rep.contains("star"));
  CHECK(rep["star"]["entries"].size() == 10);
  CHECK(rep["star"]["chosen_g"] == 26);
  CHECK(rep["star"]["chosen_input"] == 1);
  CHECK(rep["star"]["type_r_count"] == 18);
  REQUIRE(rep.contains("two_cnf"));
  const json& d = rep["two_cnf"];
  CHECK(d["branch"] == "mantel");
  CHECK(d["pb_support"] == 10);
  CHECK(d["aux_total"] == 14);
  CHECK(d["mantel_ok"] == true);
  CHECK(d["mantel_tight"] == true);
  CHECK(d["implied_bound"] == 57);
  CHECK(d["equal_pb"].empty());
  CHECK(d["triangles"].empty());
  CHECK(rep["unit_implicates"].empty());
}

TEST_CASE("analyze: shape problems are reported, not fatal") {
  // One long negative clause: propagation misses pairwise exclusions, so the
  // propagation-condition check fails outright.
  Encoding p2bad(Formula({Clause{Lit::neg(1), Lit::neg(2), Lit::neg(3)}}), {1, 2, 3});
  std::string bad_path = write_encoding("p2bad.cnf", p2bad);
  RunResult bad = run_cli("analyze " + shquote(bad_path) + " --json");
  CHECK(bad.status == 0);
  json bad_doc = parse_report(bad);
  CHECK(bad_doc["report"]["regular"] == false);
  REQUIRE(bad_doc["report"].contains("shape_error"));
  CHECK(bad_doc["report"]["shape_error"].is_string());
  CHECK_FALSE(bad_doc["report"].contains("two_cnf"));

  // Propagation conditions hold but the clause shape is irregular: the report
  // carries the per-input clause-set sizes instead of an error.
  std::string nonpc_path = write_encoding("nonpc5.cnf", nonpc_exone(5));
  RunResult shape = run_cli("analyze " + shquote(nonpc_path) + " --json");
  CHECK(shape.status == 0);
  json shape_doc = parse_report(shape);
  CHECK(shape_doc["report"]["regular"] == false);
  CHECK_FALSE(shape_doc["report"].contains("shape_error"));
  REQUIRE(shape_doc["report"].contains("q_sizes"));
}

TEST_CASE("reduce: sequential chain collapses through impure-pair steps") {
  std::string in_path = write_encoding("seq7.cnf", sequential_amo(7));
  std::string out_path = tmp_path("reduced.cnf");
  RunResult r = run_cli("reduce " + shquote(in_path) + " --out " + shquote(out_path) +
                        " --json");
  CHECK(r.status == 0);
  json doc = parse_report(r);
  check_envelope(doc, "reduce");
  const json& rep = doc["report"];
  CHECK(rep["steps"] ==
        json::array({"impure-pair", "impure-pair", "impure-pair", "impure-pair"}));
  CHECK(rep["final"]["inputs"] == 3);
  CHECK(rep["final"]["clauses"] == 3);
  CHECK(rep["final"]["regular"] == false);
  CHECK(rep["trace_file"] == out_path + ".trace");

  std::ifstream tf(out_path + ".trace");
  REQUIRE(tf.good());
  std::string trace_text((std::istreambuf_iterator<char>(tf)),
                         std::istreambuf_iterator<char>());
  CHECK(trace_text == "impure-pair\nimpure-pair\nimpure-pair\nimpure-pair\n");

  Encoding reduced = parse_dimacs_file(out_path);
  CHECK(reduced.formula() == pairwise_amo(3).formula());
  CHECK(reduced.inputs() == pairwise_amo(3).inputs());
}

TEST_CASE("bounds: csv layout and json agreement with the library") {
  RunResult csv = run_cli("bounds --from 3 --to 10");
  CHECK(csv.status == 0);
  std::vector<std::string> lines = split_lines(csv.out);
  REQUIRE(lines.size() == 9);
  CHECK(lines[0] ==
        "n,lb_general,lb_2cnf,regular_floor_ceil,size_pairwise,size_sequential,"
        "size_product");
  CHECK(lines[1] == "3,3,3,,3,3,3");       // ceiling column empty below 7 inputs
  CHECK(lines[5] == "7,15,15,15,21,15,15");

  RunResult js = run_cli("bounds --from 3 --to 10 --json");
  CHECK(js.status == 0);
  json doc = parse_report(js);
  check_envelope(doc, "bounds");
  const json& rows = doc["report"];
  std::vector<BoundsRow> expect = bounds_table(3, 10);
  REQUIRE(rows.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) {
    CHECK(rows[i]["n"] == expect[i].n);
    CHECK(rows[i]["lb_general"] == expect[i].lb_general);
    CHECK(rows[i]["lb_2cnf"] == expect[i].lb_2cnf);
    CHECK(rows[i]["size_pairwise"] == expect[i].size_pairwise);
    CHECK(rows[i]["size_sequential"] == expect[i].size_sequential);
    CHECK(rows[i]["size_product"] == expect[i].size_product);
    if (expect[i].regular_floor_ceil)
      CHECK(rows[i]["regular_floor_ceil"] == *expect[i].regular_floor_ceil);
    else
      CHECK(rows[i]["regular_floor_ceil"].is_null());
  }
}

TEST_CASE("search: exactly-one minimum found through the cli") {
  RunResult r = run_cli("search --function eo --n 3 --require input-pc --json");
  CHECK(r.status == 0);
  json doc = parse_report(r);
  check_envelope(doc, "search");
  const json& rep = doc["report"];
  CHECK(rep["found"] == true);
  CHECK(rep["size"] == 4);
  CHECK(rep["certificate"] == true);
  REQUIRE(rep.contains("dimacs"));
  Encoding found = parse_dimacs(rep["dimacs"].get<std::string>());
  CHECK(found.formula() == prime_exone(3).formula());

  RunResult miss = run_cli("search --function amo --n 4 --require enc --json");
  CHECK(miss.status == 1);  // no 4-clause auxiliary-free encoding exists
  json miss_doc = parse_report(miss);
  CHECK(miss_doc["report"]["found"] == false);
  CHECK_FALSE(miss_doc["report"].contains("dimacs"));

  CHECK(run_cli("search --function amo --n 3 --require pc").status == 2);
  CHECK(run_cli("search --function amo --n 5 --require enc").status == 2);
}

TEST_CASE("bench: sweep verifies sizes and propagation completeness") {
  RunResult r = run_cli("bench --from 3 --to 9 --verify-pc");
  CHECK(r.status == 0);
  std::vector<std::string> lines = split_lines(r.out);
  REQUIRE(lines.size() == 1 + 4 * 7);  // four default kinds, n = 3..9
  CHECK(lines[0] ==
        "kind,n,clauses,auxiliaries,lb_general,lb_2cnf,size_ok,gen_ms,input_pc");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> f = split_csv(lines[i]);
    REQUIRE(f.size() == 9);
    CHECK(f[6] == "1");
    CHECK(f[8] == "pass");
  }

  RunResult capped = run_cli("bench --from 10 --to 10 --kinds product-amo --verify-pc");
  CHECK(capped.status == 0);
  std::vector<std::string> capped_lines = split_lines(capped.out);
  REQUIRE(capped_lines.size() == 2);
  CHECK(split_csv(capped_lines[1]).back() == "skipped (cap)");

  RunResult js = run_cli("bench --from 3 --to 4 --json");
  CHECK(js.status == 0);
  json doc = parse_report(js);
  check_envelope(doc, "bench");
  REQUIRE(doc["report"].size() == 8);
  for (const json& row : doc["report"]) {
    CHECK(row["size_ok"] == true);
    CHECK_FALSE(row.contains("input_pc"));
  }

  CHECK(run_cli("bench --kinds no-such-kind --from 3 --to 3").status == 2);
}

TEST_CASE("seed is echoed into the json config") {
  RunResult r = run_cli("--seed 42 bounds --from 3 --to 3 --json");
  CHECK(r.status == 0);
  json doc = parse_report(r);
  CHECK(doc["config"]["seed"] == 42);
}

TEST_SUITE_END();
