#pragma once

#include "faultforge/mini_ir/ast.hpp"

namespace faultforge::mini_ir {

// Well-formedness: all names resolve before use, no redeclaration, operands
// are type-correct, conditions are bool, load() takes an int. Throws
// SemanticError. parse_program runs this automatically.
void check_program(const Program& p);

// Type of an expression under the given function's scope, assuming
// check_program passed. Used by the oracle front end.
Type expr_type(const FunctionDef& fn, const Expr& e);

} // namespace faultforge::mini_ir
