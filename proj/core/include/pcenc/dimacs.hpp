// DIMACS CNF reader/writer with an input-variable extension: comment lines of
// the form "c inputs v1 v2 ... vk" declare the ordered input sequence (several
// such lines accumulate).  Without one, every declared variable is an input.
#pragma once

#include <iosfwd>
#include <string>

#include "pcenc/cnf.hpp"

namespace pcenc {

Encoding parse_dimacs(std::istream& in);
Encoding parse_dimacs(const std::string& text);
Encoding parse_dimacs_file(const std::string& path);

// Emits the inputs line first, then the header, then the clauses in canonical
// order.  parse(serialize(e)) is structurally identical to e.
std::string serialize_dimacs(const Encoding& e);
void write_dimacs_file(const Encoding& e, const std::string& path);

}  // namespace pcenc
