#pragma once

#include "faultforge/mini_ir/ast.hpp"

#include <string_view>

namespace faultforge::mini_ir {

// Parses MiniC source text into a checked Program. `for` loops are desugared
// to `while` on the way in; the loop condition keeps the `for` line number.
// Throws ParseError on malformed input and SemanticError when names or types
// do not resolve.
Program parse_program(std::string_view text);

} // namespace faultforge::mini_ir
