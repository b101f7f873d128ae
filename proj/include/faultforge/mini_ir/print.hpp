#pragma once

#include "faultforge/mini_ir/ast.hpp"

#include <string>

namespace faultforge::mini_ir {

// Canonical source rendering: 4-space indent, one statement per line, blocks
// always braced. parse(pretty_print(p)) is semantically identical to p and
// pretty_print is a fixpoint on its own output. Statements with synthetic
// line ids are printed like any other; line numbering is regenerated, so a
// re-parse of hardened output renumbers injection points.
std::string pretty_print(const Program& p);

std::string print_expr(const Expr& e);

} // namespace faultforge::mini_ir
