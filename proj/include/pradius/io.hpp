#pragma once

#include <iosfwd>
#include <string>

#include "pradius/classic_partition.hpp"
#include "pradius/codes.hpp"
#include "pradius/poset.hpp"

namespace pradius {

// Text formats. Lines whose first non-blank character is '#' are comments;
// blank lines are skipped. All parse failures raise ParseError with a line
// reference.
//
//   poset (relations):  line 1: n            poset (matrix):  line 1: "matrix n"
//                       lines:  "a b" (a <= b)                 n rows of n 0/1
//   code:               line 1: "q n k"; then k generator rows of n residues
//   list:               whitespace-separated positive integers

struct PosetFile {
    Poset poset;
    bool matrix_format = false;  // which variant the input used
};

PosetFile read_poset(std::istream& in);
LinearCode read_code(std::istream& in);
IntList read_int_list(std::istream& in);

void write_poset_matrix(std::ostream& out, const Poset& p);
void write_poset_relations(std::ostream& out, const Poset& p);

// "001" style digit strings (q <= 10 only) or comma-separated residues.
FieldVector parse_vector_literal(const std::string& text, int q);
std::string format_vector(const FieldVector& v);

}  // namespace pradius
