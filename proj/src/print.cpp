#include "faultforge/mini_ir/print.hpp"

#include <sstream>

namespace faultforge::mini_ir {

namespace {

int precedence(const Expr& e) {
    if (e.kind != Expr::Kind::Binary)
        return 7;
    switch (e.op) {
    case BinOp::Or: return 1;
    case BinOp::And: return 2;
    case BinOp::Eq:
    case BinOp::Ne: return 3;
    case BinOp::Lt:
    case BinOp::Le: return 4;
    case BinOp::Add:
    case BinOp::Sub: return 5;
    case BinOp::Mul: return 6;
    }
    return 7;
}

const char* op_text(BinOp op) {
    switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Eq: return "==";
    case BinOp::Ne: return "!=";
    case BinOp::Lt: return "<";
    case BinOp::Le: return "<=";
    case BinOp::And: return "&&";
    case BinOp::Or: return "||";
    }
    return "?";
}

void emit_expr(std::ostream& os, const Expr& e, int parent_prec) {
    int prec = precedence(e);
    switch (e.kind) {
    case Expr::Kind::IntLit:
        os << e.int_value;
        return;
    case Expr::Kind::BoolLit:
        os << (e.bool_value ? "true" : "false");
        return;
    case Expr::Kind::Var:
        os << e.name;
        return;
    case Expr::Kind::Index:
        os << e.name << "[";
        emit_expr(os, *e.lhs, 0);
        os << "]";
        return;
    case Expr::Kind::Load:
        os << "load(";
        emit_expr(os, *e.lhs, 0);
        os << ")";
        return;
    case Expr::Kind::Not:
        os << "!";
        emit_expr(os, *e.lhs, 7);
        return;
    case Expr::Kind::Binary: {
        bool parens = prec < parent_prec;
        if (parens)
            os << "(";
        emit_expr(os, *e.lhs, prec);
        os << " " << op_text(e.op) << " ";
        // Left-associative: the right child needs parens at equal precedence.
        emit_expr(os, *e.rhs, prec + 1);
        if (parens)
            os << ")";
        return;
    }
    }
}

void emit_block(std::ostream& os, const Block& b, int depth);

void emit_stmt(std::ostream& os, const Stmt& s, int depth) {
    std::string pad(static_cast<std::size_t>(depth) * 4, ' ');
    switch (s.kind) {
    case Stmt::Kind::Let:
        os << pad << "let " << s.name << " = ";
        emit_expr(os, *s.value, 0);
        os << ";\n";
        return;
    case Stmt::Kind::Assign:
        os << pad << s.name;
        if (s.index) {
            os << "[";
            emit_expr(os, *s.index, 0);
            os << "]";
        }
        os << " = ";
        emit_expr(os, *s.value, 0);
        os << ";\n";
        return;
    case Stmt::Kind::If:
        os << pad << "if (";
        emit_expr(os, *s.value, 0);
        os << ") {\n";
        emit_block(os, s.body, depth + 1);
        if (s.has_else) {
            os << pad << "} else {\n";
            emit_block(os, s.else_body, depth + 1);
        }
        os << pad << "}\n";
        return;
    case Stmt::Kind::While:
        os << pad << "while (";
        emit_expr(os, *s.value, 0);
        os << ") {\n";
        emit_block(os, s.body, depth + 1);
        os << pad << "}\n";
        return;
    case Stmt::Kind::Return:
        os << pad << "return ";
        emit_expr(os, *s.value, 0);
        os << ";\n";
        return;
    case Stmt::Kind::Detect:
        os << pad << "detect();\n";
        return;
    }
}

void emit_block(std::ostream& os, const Block& b, int depth) {
    for (const auto& s : b)
        emit_stmt(os, *s, depth);
}

} // namespace

std::string print_expr(const Expr& e) {
    std::ostringstream os;
    emit_expr(os, e, 0);
    return os.str();
}

std::string pretty_print(const Program& p) {
    std::ostringstream os;
    bool first = true;
    for (const auto& f : p.functions) {
        if (!first)
            os << "\n";
        first = false;
        os << "fn " << f.name << "(";
        for (std::size_t i = 0; i < f.params.size(); ++i) {
            if (i)
                os << ", ";
            os << f.params[i].name << ": " << type_name(f.params[i].type);
        }
        os << ") -> " << type_name(f.return_type) << " {\n";
        emit_block(os, f.body, 1);
        os << "}\n";
    }
    return os.str();
}

} // namespace faultforge::mini_ir
