#include "faultforge/mini_ir/parse.hpp"

#include "faultforge/error.hpp"
#include "faultforge/mini_ir/check.hpp"

#include <cctype>
#include <optional>

namespace faultforge::mini_ir {

namespace {

enum class Tok {
    End, Ident, Int, True, False,
    KwFn, KwLet, KwIf, KwElse, KwWhile, KwFor, KwReturn, KwDetect, KwLoad,
    KwInt, KwBool, KwBytes,
    LParen, RParen, LBrace, RBrace, LBracket, RBracket,
    Comma, Semi, Colon, Arrow,
    Assign, Plus, Minus, Star, Eq, Ne, Lt, Le, AndAnd, OrOr, Not,
};

struct Token {
    Tok kind;
    std::string text;
    Int value = 0;
    int line = 1;
    int col = 1;
    std::size_t offset = 0;
};

const char* tok_name(Tok t) {
    switch (t) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::True: return "'true'";
    case Tok::False: return "'false'";
    case Tok::KwFn: return "'fn'";
    case Tok::KwLet: return "'let'";
    case Tok::KwIf: return "'if'";
    case Tok::KwElse: return "'else'";
    case Tok::KwWhile: return "'while'";
    case Tok::KwFor: return "'for'";
    case Tok::KwReturn: return "'return'";
    case Tok::KwDetect: return "'detect'";
    case Tok::KwLoad: return "'load'";
    case Tok::KwInt: return "'int'";
    case Tok::KwBool: return "'bool'";
    case Tok::KwBytes: return "'byte[]'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Colon: return "':'";
    case Tok::Arrow: return "'->'";
    case Tok::Assign: return "'='";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Eq: return "'=='";
    case Tok::Ne: return "'!='";
    case Tok::Lt: return "'<'";
    case Tok::Le: return "'<='";
    case Tok::AndAnd: return "'&&'";
    case Tok::OrOr: return "'||'";
    case Tok::Not: return "'!'";
    }
    return "?";
}

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

  private:
    void advance() {
        skip_trivia();
        current_ = Token{};
        current_.line = line_;
        current_.col = col_;
        current_.offset = pos_;
        if (pos_ >= text_.size()) {
            current_.kind = Tok::End;
            return;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                bump();
            current_.text = std::string(text_.substr(start, pos_ - start));
            current_.kind = keyword(current_.text);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                bump();
            current_.text = std::string(text_.substr(start, pos_ - start));
            current_.kind = Tok::Int;
            current_.value = std::stoll(current_.text);
            return;
        }
        auto two = [&](char a, char b) {
            return c == a && pos_ + 1 < text_.size() && text_[pos_ + 1] == b;
        };
        if (two('-', '>')) { bump(); bump(); current_.kind = Tok::Arrow; return; }
        if (two('=', '=')) { bump(); bump(); current_.kind = Tok::Eq; return; }
        if (two('!', '=')) { bump(); bump(); current_.kind = Tok::Ne; return; }
        if (two('<', '=')) { bump(); bump(); current_.kind = Tok::Le; return; }
        if (two('&', '&')) { bump(); bump(); current_.kind = Tok::AndAnd; return; }
        if (two('|', '|')) { bump(); bump(); current_.kind = Tok::OrOr; return; }
        switch (c) {
        case '(': bump(); current_.kind = Tok::LParen; return;
        case ')': bump(); current_.kind = Tok::RParen; return;
        case '{': bump(); current_.kind = Tok::LBrace; return;
        case '}': bump(); current_.kind = Tok::RBrace; return;
        case '[': bump(); current_.kind = Tok::LBracket; return;
        case ']': bump(); current_.kind = Tok::RBracket; return;
        case ',': bump(); current_.kind = Tok::Comma; return;
        case ';': bump(); current_.kind = Tok::Semi; return;
        case ':': bump(); current_.kind = Tok::Colon; return;
        case '=': bump(); current_.kind = Tok::Assign; return;
        case '+': bump(); current_.kind = Tok::Plus; return;
        case '-': bump(); current_.kind = Tok::Minus; return;
        case '*': bump(); current_.kind = Tok::Star; return;
        case '<': bump(); current_.kind = Tok::Lt; return;
        case '!': bump(); current_.kind = Tok::Not; return;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", line_, col_, pos_);
        }
    }

    static Tok keyword(const std::string& s) {
        if (s == "fn") return Tok::KwFn;
        if (s == "let") return Tok::KwLet;
        if (s == "if") return Tok::KwIf;
        if (s == "else") return Tok::KwElse;
        if (s == "while") return Tok::KwWhile;
        if (s == "for") return Tok::KwFor;
        if (s == "return") return Tok::KwReturn;
        if (s == "detect") return Tok::KwDetect;
        if (s == "load") return Tok::KwLoad;
        if (s == "int") return Tok::KwInt;
        if (s == "bool") return Tok::KwBool;
        if (s == "byte") return Tok::KwBytes; // always followed by []
        if (s == "true") return Tok::True;
        if (s == "false") return Tok::False;
        return Tok::Ident;
    }

    void skip_trivia() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                bump();
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token current_;
};

class Parser {
  public:
    explicit Parser(std::string_view text) : lex_(text) {}

    Program parse() {
        Program p;
        while (lex_.peek().kind != Tok::End)
            p.functions.push_back(parse_fn());
        return p;
    }

  private:
    [[noreturn]] void fail(const Token& t, const std::string& expected) {
        std::string got = t.kind == Tok::Ident || t.kind == Tok::Int
                              ? "'" + t.text + "'"
                              : tok_name(t.kind);
        throw ParseError("expected " + expected + ", found " + got, t.line, t.col, t.offset);
    }

    Token expect(Tok kind) {
        if (lex_.peek().kind != kind)
            fail(lex_.peek(), tok_name(kind));
        return lex_.take();
    }

    bool accept(Tok kind) {
        if (lex_.peek().kind == kind) {
            lex_.take();
            return true;
        }
        return false;
    }

    LineId here() const { return LineId{lex_.peek().line, 0}; }

    FunctionDef parse_fn() {
        expect(Tok::KwFn);
        FunctionDef f;
        f.name = expect(Tok::Ident).text;
        expect(Tok::LParen);
        if (lex_.peek().kind != Tok::RParen) {
            do {
                Param prm;
                prm.name = expect(Tok::Ident).text;
                expect(Tok::Colon);
                prm.type = parse_type();
                f.params.push_back(std::move(prm));
            } while (accept(Tok::Comma));
        }
        expect(Tok::RParen);
        expect(Tok::Arrow);
        f.return_type = parse_type();
        f.body = parse_block();
        return f;
    }

    Type parse_type() {
        const Token& t = lex_.peek();
        switch (t.kind) {
        case Tok::KwInt: lex_.take(); return Type::Int;
        case Tok::KwBool: lex_.take(); return Type::Bool;
        case Tok::KwBytes:
            lex_.take();
            expect(Tok::LBracket);
            expect(Tok::RBracket);
            return Type::Bytes;
        default:
            fail(t, "a type");
        }
    }

    Block parse_block() {
        expect(Tok::LBrace);
        Block b;
        while (lex_.peek().kind != Tok::RBrace)
            parse_stmt_into(b);
        expect(Tok::RBrace);
        return b;
    }

    // Appends one statement; `for` expands to several.
    void parse_stmt_into(Block& out) {
        const Token& t = lex_.peek();
        LineId loc{t.line, 0};
        switch (t.kind) {
        case Tok::KwLet: {
            lex_.take();
            std::string name = expect(Tok::Ident).text;
            expect(Tok::Assign);
            ExprPtr v = parse_expr();
            expect(Tok::Semi);
            out.push_back(make_let(std::move(name), std::move(v), loc));
            return;
        }
        case Tok::KwReturn: {
            lex_.take();
            ExprPtr v = parse_expr();
            expect(Tok::Semi);
            out.push_back(make_return(std::move(v), loc));
            return;
        }
        case Tok::KwDetect: {
            lex_.take();
            expect(Tok::LParen);
            expect(Tok::RParen);
            expect(Tok::Semi);
            out.push_back(make_detect(loc));
            return;
        }
        case Tok::KwIf: {
            lex_.take();
            expect(Tok::LParen);
            ExprPtr cond = parse_expr();
            expect(Tok::RParen);
            Block then_b = parse_block();
            Block else_b;
            bool has_else = false;
            if (accept(Tok::KwElse)) {
                has_else = true;
                else_b = parse_block();
            }
            out.push_back(make_if(std::move(cond), std::move(then_b), std::move(else_b),
                                  has_else, loc));
            return;
        }
        case Tok::KwWhile: {
            lex_.take();
            expect(Tok::LParen);
            ExprPtr cond = parse_expr();
            expect(Tok::RParen);
            Block body = parse_block();
            out.push_back(make_while(std::move(cond), std::move(body), loc));
            return;
        }
        case Tok::KwFor: {
            // for (init cond ; step) body  =>  init; while (cond) { body; step }
            // The while condition keeps the `for` line so injection points on
            // loop tests are named after the loop header.
            lex_.take();
            expect(Tok::LParen);
            Block init;
            parse_simple_stmt_into(init);
            ExprPtr cond = parse_expr();
            expect(Tok::Semi);
            Block step;
            parse_simple_stmt_into(step, /*semi_optional=*/true);
            expect(Tok::RParen);
            Block body = parse_block();
            for (auto& s : step)
                body.push_back(std::move(s));
            for (auto& s : init)
                out.push_back(std::move(s));
            out.push_back(make_while(std::move(cond), std::move(body), loc));
            return;
        }
        case Tok::Ident: {
            parse_simple_stmt_into(out);
            return;
        }
        default:
            fail(t, "a statement");
        }
    }

    // let / assignment only; used for plain statements and for-loop headers.
    void parse_simple_stmt_into(Block& out, bool semi_optional = false) {
        const Token& t = lex_.peek();
        LineId loc{t.line, 0};
        if (t.kind == Tok::KwLet) {
            lex_.take();
            std::string name = expect(Tok::Ident).text;
            expect(Tok::Assign);
            ExprPtr v = parse_expr();
            if (!semi_optional || lex_.peek().kind == Tok::Semi)
                expect(Tok::Semi);
            out.push_back(make_let(std::move(name), std::move(v), loc));
            return;
        }
        if (t.kind != Tok::Ident)
            fail(t, "a statement");
        std::string name = lex_.take().text;
        ExprPtr index;
        if (accept(Tok::LBracket)) {
            index = parse_expr();
            expect(Tok::RBracket);
        }
        expect(Tok::Assign);
        ExprPtr v = parse_expr();
        if (!semi_optional || lex_.peek().kind == Tok::Semi)
            expect(Tok::Semi);
        out.push_back(make_assign(std::move(name), std::move(index), std::move(v), loc));
    }

    // Precedence climbing: || < && < == != < < <= < + - < * < unary.
    ExprPtr parse_expr() { return parse_or(); }

    ExprPtr parse_or() {
        ExprPtr l = parse_and();
        while (lex_.peek().kind == Tok::OrOr) {
            LineId loc = here();
            lex_.take();
            l = make_binary(BinOp::Or, std::move(l), parse_and(), loc);
        }
        return l;
    }

    ExprPtr parse_and() {
        ExprPtr l = parse_equality();
        while (lex_.peek().kind == Tok::AndAnd) {
            LineId loc = here();
            lex_.take();
            l = make_binary(BinOp::And, std::move(l), parse_equality(), loc);
        }
        return l;
    }

    ExprPtr parse_equality() {
        ExprPtr l = parse_relational();
        while (true) {
            Tok k = lex_.peek().kind;
            if (k != Tok::Eq && k != Tok::Ne)
                return l;
            LineId loc = here();
            lex_.take();
            l = make_binary(k == Tok::Eq ? BinOp::Eq : BinOp::Ne, std::move(l),
                            parse_relational(), loc);
        }
    }

    ExprPtr parse_relational() {
        ExprPtr l = parse_additive();
        while (true) {
            Tok k = lex_.peek().kind;
            if (k != Tok::Lt && k != Tok::Le)
                return l;
            LineId loc = here();
            lex_.take();
            l = make_binary(k == Tok::Lt ? BinOp::Lt : BinOp::Le, std::move(l),
                            parse_additive(), loc);
        }
    }

    ExprPtr parse_additive() {
        ExprPtr l = parse_multiplicative();
        while (true) {
            Tok k = lex_.peek().kind;
            if (k != Tok::Plus && k != Tok::Minus)
                return l;
            LineId loc = here();
            lex_.take();
            l = make_binary(k == Tok::Plus ? BinOp::Add : BinOp::Sub, std::move(l),
                            parse_multiplicative(), loc);
        }
    }

    ExprPtr parse_multiplicative() {
        ExprPtr l = parse_unary();
        while (lex_.peek().kind == Tok::Star) {
            LineId loc = here();
            lex_.take();
            l = make_binary(BinOp::Mul, std::move(l), parse_unary(), loc);
        }
        return l;
    }

    ExprPtr parse_unary() {
        if (lex_.peek().kind == Tok::Not) {
            LineId loc = here();
            lex_.take();
            return make_not(parse_unary(), loc);
        }
        return parse_primary();
    }

    ExprPtr parse_primary() {
        const Token& t = lex_.peek();
        LineId loc{t.line, 0};
        switch (t.kind) {
        case Tok::Int: {
            Token tok = lex_.take();
            return make_int(tok.value, loc);
        }
        case Tok::True: lex_.take(); return make_bool(true, loc);
        case Tok::False: lex_.take(); return make_bool(false, loc);
        case Tok::KwLoad: {
            lex_.take();
            expect(Tok::LParen);
            ExprPtr inner = parse_expr();
            expect(Tok::RParen);
            return make_load(std::move(inner), loc);
        }
        case Tok::LParen: {
            lex_.take();
            ExprPtr e = parse_expr();
            expect(Tok::RParen);
            return e;
        }
        case Tok::Ident: {
            Token name = lex_.take();
            if (accept(Tok::LBracket)) {
                ExprPtr sub = parse_expr();
                expect(Tok::RBracket);
                return make_index(name.text, std::move(sub), loc);
            }
            return make_var(name.text, loc);
        }
        default:
            fail(t, "an expression");
        }
    }

    Lexer lex_;
};

} // namespace

Program parse_program(std::string_view text) {
    Parser parser(text);
    Program p = parser.parse();
    check_program(p);
    assign_site_ids(p);
    return p;
}

} // namespace faultforge::mini_ir
