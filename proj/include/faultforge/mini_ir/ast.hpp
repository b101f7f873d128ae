#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace faultforge::mini_ir {

using Int = std::int64_t;

// Source line of a statement or expression. Statements inserted by a rewrite
// get a synthetic id "<line>.<sub>" so they never collide with original lines
// and reports stay readable.
struct LineId {
    int line = 0;
    int sub = 0; // 0 for lines present in the source text

    friend bool operator==(const LineId&, const LineId&) = default;
    friend auto operator<=>(const LineId&, const LineId&) = default;

    std::string render() const {
        if (sub == 0)
            return std::to_string(line);
        return std::to_string(line) + "." + std::to_string(sub);
    }
};

enum class Type { Int, Bool, Bytes };

std::string type_name(Type t);

enum class BinOp { Add, Sub, Mul, Eq, Ne, Lt, Le, And, Or };

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
    enum class Kind { IntLit, BoolLit, Var, Index, Load, Not, Binary };

    Kind kind;
    LineId loc;

    Int int_value = 0;      // IntLit
    bool bool_value = false; // BoolLit
    std::string name;        // Var, Index (array name)

    ExprPtr lhs; // Binary left, Index subscript, Load operand, Not operand
    ExprPtr rhs; // Binary right
    BinOp op = BinOp::Add;

    // Filled by assign_site_ids for Load nodes; empty otherwise.
    std::string load_site;

    ExprPtr clone() const;
};

ExprPtr make_int(Int v, LineId loc);
ExprPtr make_bool(bool v, LineId loc);
ExprPtr make_var(std::string name, LineId loc);
ExprPtr make_index(std::string name, ExprPtr sub, LineId loc);
ExprPtr make_load(ExprPtr inner, LineId loc);
ExprPtr make_not(ExprPtr inner, LineId loc);
ExprPtr make_binary(BinOp op, ExprPtr l, ExprPtr r, LineId loc);

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;
using Block = std::vector<StmtPtr>;

Block clone_block(const Block& b);

struct Stmt {
    enum class Kind { Let, Assign, If, While, Return, Detect };

    Kind kind;
    LineId loc;

    std::string name; // Let / Assign target
    ExprPtr index;    // Assign to array element, null otherwise
    ExprPtr value;    // Let / Assign / Return value; If / While condition

    Block body;      // If then-block, While body
    Block else_body; // If only
    bool has_else = false;

    // Site ids assigned by assign_site_ids. cond_site on If/While tests,
    // join_site on if-statements with a non-empty else block.
    std::string cond_site;
    std::string join_site;

    StmtPtr clone() const;
};

StmtPtr make_let(std::string name, ExprPtr value, LineId loc);
StmtPtr make_assign(std::string name, ExprPtr index, ExprPtr value, LineId loc);
StmtPtr make_if(ExprPtr cond, Block then_b, Block else_b, bool has_else, LineId loc);
StmtPtr make_while(ExprPtr cond, Block body, LineId loc);
StmtPtr make_return(ExprPtr value, LineId loc);
StmtPtr make_detect(LineId loc);

struct Param {
    std::string name;
    Type type;
};

struct FunctionDef {
    std::string name;
    std::vector<Param> params;
    Type return_type = Type::Int;
    Block body;

    FunctionDef clone() const;
};

struct Program {
    std::vector<FunctionDef> functions;

    Program clone() const;
    const FunctionDef* find(const std::string& name) const;
};

// Recomputes the fault-site ids stored in the AST nodes. Deterministic: ids
// depend only on statement line ids and source order, so they are stable
// across re-parses of identical text and are preserved for original sites
// when a rewrite inserts new statements (which carry fresh synthetic lines).
void assign_site_ids(Program& p);

} // namespace faultforge::mini_ir
