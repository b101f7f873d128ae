#include "faultforge/mini_ir/check.hpp"

#include "faultforge/error.hpp"

#include <map>
#include <set>
#include <vector>

namespace faultforge::mini_ir {

namespace {

struct Scope {
    std::vector<std::map<std::string, Type>> frames;

    void push() { frames.emplace_back(); }
    void pop() { frames.pop_back(); }

    const Type* lookup(const std::string& name) const {
        for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
            auto found = it->find(name);
            if (found != it->end())
                return &found->second;
        }
        return nullptr;
    }

    void declare(const std::string& name, Type t, const LineId& loc) {
        if (lookup(name))
            throw SemanticError("redeclaration of '" + name + "' at line " + loc.render());
        frames.back()[name] = t;
    }
};

struct Checker {
    const std::string* fn_name = nullptr;
    Type return_type = Type::Int;
    Scope scope;

    [[noreturn]] void fail(const std::string& msg, const LineId& loc) {
        throw SemanticError(msg + " at line " + loc.render() + " in function '" + *fn_name + "'");
    }

    Type check_expr(const Expr& e) {
        switch (e.kind) {
        case Expr::Kind::IntLit:
            return Type::Int;
        case Expr::Kind::BoolLit:
            return Type::Bool;
        case Expr::Kind::Var: {
            const Type* t = scope.lookup(e.name);
            if (!t)
                fail("unresolved identifier '" + e.name + "'", e.loc);
            return *t;
        }
        case Expr::Kind::Index: {
            const Type* t = scope.lookup(e.name);
            if (!t)
                fail("unresolved identifier '" + e.name + "'", e.loc);
            if (*t != Type::Bytes)
                fail("'" + e.name + "' is not a byte array", e.loc);
            if (check_expr(*e.lhs) != Type::Int)
                fail("array index must be int", e.loc);
            return Type::Int;
        }
        case Expr::Kind::Load:
            if (check_expr(*e.lhs) != Type::Int)
                fail("load() takes an int expression", e.loc);
            return Type::Int;
        case Expr::Kind::Not:
            if (check_expr(*e.lhs) != Type::Bool)
                fail("'!' takes a bool", e.loc);
            return Type::Bool;
        case Expr::Kind::Binary: {
            Type l = check_expr(*e.lhs);
            Type r = check_expr(*e.rhs);
            switch (e.op) {
            case BinOp::Add:
            case BinOp::Sub:
            case BinOp::Mul:
                if (l != Type::Int || r != Type::Int)
                    fail("arithmetic needs int operands", e.loc);
                return Type::Int;
            case BinOp::Eq:
            case BinOp::Ne:
            case BinOp::Lt:
            case BinOp::Le:
                if (l != Type::Int || r != Type::Int)
                    fail("comparison needs int operands", e.loc);
                return Type::Bool;
            case BinOp::And:
            case BinOp::Or:
                if (l != Type::Bool || r != Type::Bool)
                    fail("logical operator needs bool operands", e.loc);
                return Type::Bool;
            }
            fail("bad operator", e.loc);
        }
        }
        fail("bad expression", e.loc);
    }

    void check_block(const Block& b) {
        scope.push();
        for (const auto& s : b)
            check_stmt(*s);
        scope.pop();
    }

    void check_stmt(const Stmt& s) {
        switch (s.kind) {
        case Stmt::Kind::Let:
            scope.declare(s.name, check_expr(*s.value), s.loc);
            return;
        case Stmt::Kind::Assign: {
            const Type* t = scope.lookup(s.name);
            if (!t)
                fail("assignment to unknown variable '" + s.name + "'", s.loc);
            Type v = check_expr(*s.value);
            if (s.index) {
                if (*t != Type::Bytes)
                    fail("'" + s.name + "' is not a byte array", s.loc);
                if (check_expr(*s.index) != Type::Int)
                    fail("array index must be int", s.loc);
                if (v != Type::Int)
                    fail("array element must be int", s.loc);
            } else if (v != *t) {
                fail("type mismatch assigning to '" + s.name + "'", s.loc);
            }
            return;
        }
        case Stmt::Kind::If:
            if (check_expr(*s.value) != Type::Bool)
                fail("if condition must be bool", s.loc);
            check_block(s.body);
            check_block(s.else_body);
            return;
        case Stmt::Kind::While:
            if (check_expr(*s.value) != Type::Bool)
                fail("while condition must be bool", s.loc);
            check_block(s.body);
            return;
        case Stmt::Kind::Return:
            if (check_expr(*s.value) != return_type)
                fail("return type mismatch", s.loc);
            return;
        case Stmt::Kind::Detect:
            return;
        }
    }
};

} // namespace

void check_program(const Program& p) {
    std::set<std::string> names;
    for (const auto& f : p.functions) {
        if (!names.insert(f.name).second)
            throw SemanticError("duplicate function '" + f.name + "'");
        Checker c;
        c.fn_name = &f.name;
        c.return_type = f.return_type;
        c.scope.push();
        for (const auto& prm : f.params)
            c.scope.declare(prm.name, prm.type, LineId{0, 0});
        c.check_block(f.body);
        c.scope.pop();
    }
}

Type expr_type(const FunctionDef& fn, const Expr& e) {
    Checker c;
    c.fn_name = &fn.name;
    c.return_type = fn.return_type;
    c.scope.push();
    for (const auto& prm : fn.params)
        c.scope.frames.back()[prm.name] = prm.type;
    // The oracle refers to parameters plus the return value.
    c.scope.frames.back()["result"] = fn.return_type;
    return c.check_expr(e);
}

} // namespace faultforge::mini_ir
