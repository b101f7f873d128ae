#pragma once

#include "faultforge/explorer/interpreter.hpp"
#include "faultforge/explorer/value.hpp"
#include "faultforge/mini_ir/ast.hpp"

#include <memory>
#include <string>

namespace faultforge::explorer {

// Success condition evaluated over the entry function's return value (as
// `result`) and the final parameter values. Typically the negation of the
// security property, e.g. "result == 170".
class Oracle {
  public:
    Oracle() = default;

    // Parses and type-checks `text` against the entry signature. load() and
    // detect() are not allowed inside oracle expressions.
    static Oracle parse(const std::string& text, const mini_ir::FunctionDef& entry);

    bool evaluate(const Trace& t) const;

    const std::string& text() const { return text_; }

  private:
    std::string text_;
    std::shared_ptr<const mini_ir::Expr> expr_;
};

} // namespace faultforge::explorer
