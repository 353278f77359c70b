#include "pcenc/dimacs.hpp"

#include <fstream>
#include <sstream>

namespace pcenc {

namespace {

Error at_line(errc code, int line, const std::string& what) {
  return Error(code, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

Encoding parse_dimacs(std::istream& in) {
  bool have_header = false;
  long declared_vars = 0, declared_clauses = 0;
  std::vector<Var> inputs;
  std::vector<bool> declared_input;  // dedupe across inputs lines
  std::vector<Clause> clauses;
  std::vector<Lit> current;
  int line_no = 0;
  int clause_line = 0;  // line where the pending clause started

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank line

    if (tok == "c") {
      std::string kind;
      if (ls >> kind && kind == "inputs") {
        long v;
        while (ls >> v) {
          if (v < 1) throw at_line(errc::parse_error, line_no, "input ids must be positive");
          if (have_header && v > declared_vars)
            throw at_line(errc::undeclared_variable, line_no,
                          "input " + std::to_string(v) + " exceeds declared variable count");
          if (static_cast<std::size_t>(v) >= declared_input.size())
            declared_input.resize(v + 1, false);
          if (!declared_input[v]) {
            declared_input[v] = true;
            inputs.push_back(static_cast<Var>(v));
          }
        }
        if (!ls.eof())
          throw at_line(errc::parse_error, line_no, "malformed inputs line");
      }
      continue;  // ordinary comment
    }

    if (tok == "p") {
      if (have_header) throw at_line(errc::invalid_header, line_no, "duplicate header");
      std::string fmt;
      if (!(ls >> fmt >> declared_vars >> declared_clauses) || fmt != "cnf")
        throw at_line(errc::invalid_header, line_no, "expected 'p cnf <vars> <clauses>'");
      if (declared_vars < 1 || declared_clauses < 0)
        throw at_line(errc::invalid_header, line_no, "bad counts in header");
      for (Var v : inputs)
        if (v > declared_vars)
          throw at_line(errc::undeclared_variable, line_no,
                        "input " + std::to_string(v) + " exceeds declared variable count");
      have_header = true;
      continue;
    }

    if (!have_header)
      throw at_line(errc::invalid_header, line_no, "clause before 'p cnf' header");

    // Clause data; clauses are zero-terminated and may span lines.
    ls.clear();
    ls.seekg(0);
    long v;
    while (ls >> v) {
      if (v == 0) {
        if (current.empty()) clause_line = line_no;
        try {
          clauses.push_back(Clause(std::move(current)));
        } catch (const Error& e) {
          throw at_line(errc::parse_error, clause_line ? clause_line : line_no, e.what());
        }
        current.clear();
        clause_line = 0;
        continue;
      }
      if (current.empty()) clause_line = line_no;
      long av = v < 0 ? -v : v;
      if (av > declared_vars)
        throw at_line(errc::undeclared_variable, line_no,
                      "literal " + std::to_string(v) + " exceeds declared variable count");
      current.push_back(Lit::from_dimacs(static_cast<int>(v)));
    }
    if (!ls.eof()) throw at_line(errc::parse_error, line_no, "unexpected token");
  }

  if (!have_header) throw Error(errc::invalid_header, "missing 'p cnf' header");
  if (!current.empty())
    throw at_line(errc::parse_error, clause_line, "unterminated clause at end of input");
  if (static_cast<long>(clauses.size()) != declared_clauses)
    throw Error(errc::parse_error,
                "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                    std::to_string(clauses.size()));

  if (inputs.empty())
    for (Var v = 1; v <= declared_vars; ++v) inputs.push_back(v);
  std::vector<Var> aux;
  {
    std::vector<bool> in(declared_vars + 1, false);
    for (Var v : inputs) in[v] = true;
    for (Var v = 1; v <= declared_vars; ++v)
      if (!in[v]) aux.push_back(v);
  }
  return Encoding(Formula(std::move(clauses)), std::move(inputs), std::move(aux));
}

Encoding parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

Encoding parse_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::parse_error, "cannot open " + path);
  return parse_dimacs(in);
}

std::string serialize_dimacs(const Encoding& e) {
  std::ostringstream out;
  out << "c inputs";
  for (Var v : e.inputs()) out << ' ' << v;
  out << '\n';
  out << "p cnf " << e.max_var() << ' ' << e.formula().size() << '\n';
  for (const auto& c : e.formula()) {
    for (Lit l : c) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
  return out.str();
}

void write_dimacs_file(const Encoding& e, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(errc::parse_error, "cannot open " + path + " for writing");
  out << serialize_dimacs(e);
}

}  // namespace pcenc
