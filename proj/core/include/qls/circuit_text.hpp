// Lossless human-readable circuit text format. Grammar (whitespace-free
// between tokens is fine; fields appear in the order shown, cond optional):
//
//   circuit := "CIRCUIT" "{" "n" "=" int "," "m" "=" int ","
//              "stages" "=" block "}"
//   block   := "[" (stage ("," stage)*)? "]"
//   stage   := "SWITCH" "{" "level" "=" int "," "kind" "=" kind "}"
//            | "BRANCH" "{" "level" "=" int "," "on" "=" block ","
//                           "off" "=" block "}"
//            | "WRITE"  "{" "target" "=" target "," "pattern" "=" int
//                           ("," "cond" "=" cond)? "}"
//            | "PHASE"  "{" "pairs" "=" "[" (pair ("," pair)*)? "]"
//                           ("," "cond" "=" cond)? "}"
//            | "HIDX"   "{" "qubit" "=" int "}"
//   pair    := "(" int "," int ")"
//   kind    := "split" | "merge_minus" | "merge_minus_dag"
//   target  := "index" | "value"
//   cond    := ("on" | "off") "@" int
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qls/circuit.hpp"

namespace qls {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

std::string serialize(const PathCircuit& circuit);

// Inverse of serialize. Throws ParseError on malformed text; the returned
// circuit has been range-checked against its own layout.
PathCircuit parse_circuit(std::string_view text);

}  // namespace qls
