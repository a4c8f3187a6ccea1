#pragma once

#include <stdexcept>
#include <string>

#include "ogan/stl/ast.hpp"

namespace ogan::stl {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line, int column)
      : std::runtime_error(message + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Concrete syntax:
//
//   formula   := or-chain, 'implies' (right associative, lowest precedence)
//   keywords  := always eventually until not and or implies abs true
//   intervals := [lo,hi] in time units, 0 <= lo <= hi
//   predicate := expr (< | <= | > | >=) expr
//   expr      := numbers, signal names, abs(e), e + e, e - e, c * e, -e
FormulaPtr parse_stl(const std::string& text);

}  // namespace ogan::stl
