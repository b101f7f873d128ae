#include "faultforge/explorer/oracle.hpp"

#include "faultforge/error.hpp"
#include "faultforge/mini_ir/check.hpp"
#include "faultforge/mini_ir/parse.hpp"

namespace faultforge::explorer {

namespace {

bool contains_load(const mini_ir::Expr& e) {
    if (e.kind == mini_ir::Expr::Kind::Load)
        return true;
    if (e.lhs && contains_load(*e.lhs))
        return true;
    if (e.rhs && contains_load(*e.rhs))
        return true;
    return false;
}

// Plain evaluator over a flat store; no faults, no statements.
Value eval_expr(const mini_ir::Expr& e, const std::map<std::string, Value>& store) {
    using mini_ir::BinOp;
    using EK = mini_ir::Expr::Kind;
    switch (e.kind) {
    case EK::IntLit:
        return e.int_value;
    case EK::BoolLit:
        return e.bool_value;
    case EK::Var: {
        auto it = store.find(e.name);
        if (it == store.end())
            throw InvalidArgument("oracle refers to unknown name '" + e.name + "'");
        return it->second;
    }
    case EK::Index: {
        auto it = store.find(e.name);
        if (it == store.end())
            throw InvalidArgument("oracle refers to unknown name '" + e.name + "'");
        const auto& arr = std::get<std::vector<Int>>(it->second);
        Int idx = std::get<Int>(eval_expr(*e.lhs, store));
        if (idx < 0 || static_cast<std::size_t>(idx) >= arr.size())
            throw InvalidArgument("oracle index out of bounds");
        return arr[static_cast<std::size_t>(idx)];
    }
    case EK::Load:
        throw InvalidArgument("load() is not allowed in oracle expressions");
    case EK::Not:
        return !std::get<bool>(eval_expr(*e.lhs, store));
    case EK::Binary: {
        if (e.op == BinOp::And)
            return std::get<bool>(eval_expr(*e.lhs, store)) &&
                   std::get<bool>(eval_expr(*e.rhs, store));
        if (e.op == BinOp::Or)
            return std::get<bool>(eval_expr(*e.lhs, store)) ||
                   std::get<bool>(eval_expr(*e.rhs, store));
        Int l = std::get<Int>(eval_expr(*e.lhs, store));
        Int r = std::get<Int>(eval_expr(*e.rhs, store));
        switch (e.op) {
        case BinOp::Add: return l + r;
        case BinOp::Sub: return l - r;
        case BinOp::Mul: return l * r;
        case BinOp::Eq: return l == r;
        case BinOp::Ne: return l != r;
        case BinOp::Lt: return l < r;
        case BinOp::Le: return l <= r;
        default: break;
        }
        break;
    }
    }
    throw InvalidArgument("bad oracle expression");
}

} // namespace

Oracle Oracle::parse(const std::string& text, const mini_ir::FunctionDef& entry) {
    // Reuse the program parser by wrapping the expression in a function whose
    // scope mirrors the oracle environment: parameters plus `result`.
    std::string wrapped = "fn __oracle(";
    bool first = true;
    for (const auto& prm : entry.params) {
        if (!first)
            wrapped += ", ";
        first = false;
        wrapped += prm.name + ": " + mini_ir::type_name(prm.type);
    }
    if (!first)
        wrapped += ", ";
    wrapped += "result: " + mini_ir::type_name(entry.return_type);
    wrapped += ") -> bool {\n    return " + text + ";\n}\n";

    mini_ir::Program p;
    try {
        p = mini_ir::parse_program(wrapped);
    } catch (const Error& e) {
        throw InvalidArgument("bad oracle '" + text + "': " + e.what());
    }
    const mini_ir::Stmt& ret = *p.functions.at(0).body.at(0);
    if (contains_load(*ret.value))
        throw InvalidArgument("load() is not allowed in oracle expressions");

    Oracle o;
    o.text_ = text;
    o.expr_ = std::shared_ptr<const mini_ir::Expr>(ret.value->clone().release());
    return o;
}

bool Oracle::evaluate(const Trace& t) const {
    if (!expr_)
        throw InvalidArgument("oracle was not initialized");
    if (t.status != TraceStatus::NominalExit || !t.result)
        throw InvalidArgument("oracle is only defined on traces that exit nominally");
    std::map<std::string, Value> store = t.final_store;
    store["result"] = *t.result;
    return std::get<bool>(eval_expr(*expr_, store));
}

} // namespace faultforge::explorer
