#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "onecob/cobordism.hpp"
#include "onecob/exact_matrix.hpp"
#include "onecob/generator_word.hpp"
#include "onecob/report.hpp"

namespace onecob::io {

// Cobordism document:
//   {"source":"+-","target":"","arcs":[["in0","in1"]],"circles":0}
// Sign strings accept '+', '-', and U+2212; output is ASCII. Arcs are
// emitted in canonical order, so serialize(parse(s)) is bit-stable.
Cobordism parse_cobordism(std::string_view text);
std::string serialize_cobordism(const Cobordism& k);

// Layered word document:
//   {"circles":0,"layers":[{"source":"+-","permutation":[1,0]},
//                          {"atoms":["cap+-","id+"]}]}
GeneratorWord parse_word(std::string_view text);
std::string serialize_word(const GeneratorWord& word);

// Matrix document: {"rows":2,"cols":2,"entries":[["1","0"],["0","1"]]}.
// Entries may be strings ("2/3") or plain JSON integers.
ExactMatrix parse_matrix_json(std::string_view text);
std::string serialize_matrix_json(const ExactMatrix& m);

// CSV: one row per line, comma-separated exact rationals ("3", "-2/5").
ExactMatrix parse_matrix_csv(std::string_view text);
std::string serialize_matrix_csv(const ExactMatrix& m);

// {"checked":n,"passed":n,"failed":n,"counterexamples":[{"K":...,"L":...,
//  "lhs":...,"rhs":...}]} with null for absent morphisms.
std::string serialize_report(const VerifyReport& report);

}  // namespace onecob::io
