#include "faultforge/mini_ir/ast.hpp"

#include <algorithm>
#include <map>

namespace faultforge::mini_ir {

std::string type_name(Type t) {
    switch (t) {
    case Type::Int: return "int";
    case Type::Bool: return "bool";
    case Type::Bytes: return "byte[]";
    }
    return "?";
}

ExprPtr Expr::clone() const {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->loc = loc;
    e->int_value = int_value;
    e->bool_value = bool_value;
    e->name = name;
    e->op = op;
    e->load_site = load_site;
    if (lhs)
        e->lhs = lhs->clone();
    if (rhs)
        e->rhs = rhs->clone();
    return e;
}

ExprPtr make_int(Int v, LineId loc) {
    auto e = std::make_unique<Expr>();
    e->kind = Expr::Kind::IntLit;
    e->int_value = v;
    e->loc = loc;
    return e;
}

ExprPtr make_bool(bool v, LineId loc) {
    auto e = std::make_unique<Expr>();
    e->kind = Expr::Kind::BoolLit;
    e->bool_value = v;
    e->loc = loc;
    return e;
}

ExprPtr make_var(std::string name, LineId loc) {
    auto e = std::make_unique<Expr>();
    e->kind = Expr::Kind::Var;
    e->name = std::move(name);
    e->loc = loc;
    return e;
}

ExprPtr make_index(std::string name, ExprPtr sub, LineId loc) {
    auto e = std::make_unique<Expr>();
    e->kind = Expr::Kind::Index;
    e->name = std::move(name);
    e->lhs = std::move(sub);
    e->loc = loc;
    return e;
}

ExprPtr make_load(ExprPtr inner, LineId loc) {
    auto e = std::make_unique<Expr>();
    e->kind = Expr::Kind::Load;
    e->lhs = std::move(inner);
    e->loc = loc;
    return e;
}

ExprPtr make_not(ExprPtr inner, LineId loc) {
    auto e = std::make_unique<Expr>();
    e->kind = Expr::Kind::Not;
    e->lhs = std::move(inner);
    e->loc = loc;
    return e;
}

ExprPtr make_binary(BinOp op, ExprPtr l, ExprPtr r, LineId loc) {
    auto e = std::make_unique<Expr>();
    e->kind = Expr::Kind::Binary;
    e->op = op;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    e->loc = loc;
    return e;
}

Block clone_block(const Block& b) {
    Block out;
    out.reserve(b.size());
    for (const auto& s : b)
        out.push_back(s->clone());
    return out;
}

StmtPtr Stmt::clone() const {
    auto s = std::make_unique<Stmt>();
    s->kind = kind;
    s->loc = loc;
    s->name = name;
    if (index)
        s->index = index->clone();
    if (value)
        s->value = value->clone();
    s->body = clone_block(body);
    s->else_body = clone_block(else_body);
    s->has_else = has_else;
    s->cond_site = cond_site;
    s->join_site = join_site;
    return s;
}

StmtPtr make_let(std::string name, ExprPtr value, LineId loc) {
    auto s = std::make_unique<Stmt>();
    s->kind = Stmt::Kind::Let;
    s->name = std::move(name);
    s->value = std::move(value);
    s->loc = loc;
    return s;
}

StmtPtr make_assign(std::string name, ExprPtr index, ExprPtr value, LineId loc) {
    auto s = std::make_unique<Stmt>();
    s->kind = Stmt::Kind::Assign;
    s->name = std::move(name);
    s->index = std::move(index);
    s->value = std::move(value);
    s->loc = loc;
    return s;
}

StmtPtr make_if(ExprPtr cond, Block then_b, Block else_b, bool has_else, LineId loc) {
    auto s = std::make_unique<Stmt>();
    s->kind = Stmt::Kind::If;
    s->value = std::move(cond);
    s->body = std::move(then_b);
    s->else_body = std::move(else_b);
    s->has_else = has_else;
    s->loc = loc;
    return s;
}

StmtPtr make_while(ExprPtr cond, Block body, LineId loc) {
    auto s = std::make_unique<Stmt>();
    s->kind = Stmt::Kind::While;
    s->value = std::move(cond);
    s->body = std::move(body);
    s->loc = loc;
    return s;
}

StmtPtr make_return(ExprPtr value, LineId loc) {
    auto s = std::make_unique<Stmt>();
    s->kind = Stmt::Kind::Return;
    s->value = std::move(value);
    s->loc = loc;
    return s;
}

StmtPtr make_detect(LineId loc) {
    auto s = std::make_unique<Stmt>();
    s->kind = Stmt::Kind::Detect;
    s->loc = loc;
    return s;
}

FunctionDef FunctionDef::clone() const {
    FunctionDef f;
    f.name = name;
    f.params = params;
    f.return_type = return_type;
    f.body = clone_block(body);
    return f;
}

Program Program::clone() const {
    Program p;
    p.functions.reserve(functions.size());
    for (const auto& f : functions)
        p.functions.push_back(f.clone());
    return p;
}

const FunctionDef* Program::find(const std::string& name) const {
    for (const auto& f : functions)
        if (f.name == name)
            return &f;
    return nullptr;
}

namespace {

// Site ids are "IP<line>" for the first fault site on a line; further sites
// on the same line get a letter suffix in source order ("IP5b", "IP5c", ...).
struct SiteNamer {
    std::map<LineId, int> per_line;

    std::string next(LineId loc) {
        int n = per_line[loc]++;
        std::string id = "IP" + loc.render();
        if (n > 0)
            id += static_cast<char>('a' + n);
        return id;
    }
};

void visit_expr(Expr& e, SiteNamer& namer) {
    if (e.lhs)
        visit_expr(*e.lhs, namer);
    if (e.rhs)
        visit_expr(*e.rhs, namer);
    if (e.kind == Expr::Kind::Load)
        e.load_site = namer.next(e.loc);
}

void visit_block(Block& b, SiteNamer& namer);

void visit_stmt(Stmt& s, SiteNamer& namer) {
    switch (s.kind) {
    case Stmt::Kind::Let:
    case Stmt::Kind::Assign:
    case Stmt::Kind::Return:
        if (s.index)
            visit_expr(*s.index, namer);
        if (s.value)
            visit_expr(*s.value, namer);
        break;
    case Stmt::Kind::If:
        visit_expr(*s.value, namer);
        s.cond_site = namer.next(s.loc);
        if (s.has_else && !s.else_body.empty())
            s.join_site = namer.next(s.loc);
        else
            s.join_site.clear();
        visit_block(s.body, namer);
        visit_block(s.else_body, namer);
        break;
    case Stmt::Kind::While:
        visit_expr(*s.value, namer);
        s.cond_site = namer.next(s.loc);
        visit_block(s.body, namer);
        break;
    case Stmt::Kind::Detect:
        break;
    }
}

void visit_block(Block& b, SiteNamer& namer) {
    for (auto& s : b)
        visit_stmt(*s, namer);
}

} // namespace

void assign_site_ids(Program& p) {
    SiteNamer namer;
    for (auto& f : p.functions)
        visit_block(f.body, namer);
}

} // namespace faultforge::mini_ir
