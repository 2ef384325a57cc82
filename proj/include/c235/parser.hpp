#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "c235/polynomial.hpp"

namespace c235 {

struct ParseError : std::runtime_error {
    ParseError(int line, int column, const std::string& what)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + what),
          line(line),
          column(column) {}
    int line;
    int column;
};

// Grammar:
//   expr     := '-'? term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' uint)?
//   base     := rational | ident | '(' expr ')'
//   rational := int ('/' uint)?
// Whitespace insignificant; implicit multiplication rejected.
Polynomial parse_expr(const std::string& text, const std::vector<std::string>& variables);

}  // namespace c235
