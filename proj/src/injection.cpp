#include "faultforge/mini_ir/injection.hpp"

namespace faultforge::mini_ir {

std::string ip_kind_name(IpKind k) {
    switch (k) {
    case IpKind::ConditionalTest: return "conditional-test";
    case IpKind::MarkedLoad: return "marked-load";
    case IpKind::ThenElseJoin: return "then-else-join";
    }
    return "?";
}

namespace {

struct Collector {
    const faults::ModelSet* models;
    std::vector<InjectionPoint>* out;

    void expr(const Expr& e) {
        if (e.lhs)
            expr(*e.lhs);
        if (e.rhs)
            expr(*e.rhs);
        if (e.kind == Expr::Kind::Load && models->dlm)
            out->push_back({e.load_site, IpKind::MarkedLoad, e.loc, false});
    }

    void block(const Block& b) {
        for (const auto& s : b)
            stmt(*s);
    }

    void stmt(const Stmt& s) {
        switch (s.kind) {
        case Stmt::Kind::Let:
        case Stmt::Kind::Assign:
        case Stmt::Kind::Return:
            if (s.index)
                expr(*s.index);
            if (s.value)
                expr(*s.value);
            return;
        case Stmt::Kind::If:
            expr(*s.value);
            if (models->ti)
                out->push_back({s.cond_site, IpKind::ConditionalTest, s.loc, false});
            if (models->eft && !s.join_site.empty())
                out->push_back({s.join_site, IpKind::ThenElseJoin, s.loc, false});
            block(s.body);
            block(s.else_body);
            return;
        case Stmt::Kind::While:
            expr(*s.value);
            if (models->ti)
                out->push_back({s.cond_site, IpKind::ConditionalTest, s.loc, true});
            block(s.body);
            return;
        case Stmt::Kind::Detect:
            return;
        }
    }
};

} // namespace

std::vector<InjectionPoint> enumerate_injection_points(const Program& p,
                                                       const faults::ModelSet& models) {
    std::vector<InjectionPoint> out;
    Collector c{&models, &out};
    for (const auto& f : p.functions)
        c.block(f.body);
    return out;
}

} // namespace faultforge::mini_ir
