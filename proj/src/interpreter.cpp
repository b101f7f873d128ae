#include "faultforge/explorer/interpreter.hpp"

#include "faultforge/error.hpp"

#include <algorithm>

namespace faultforge::explorer {

using faults::FaultDecision;
using faults::FaultModelTag;
using mini_ir::Block;
using mini_ir::Expr;
using mini_ir::Stmt;

bool value_equal(const Value& a, const Value& b) { return a == b; }

std::string value_to_string(const Value& v) {
    if (std::holds_alternative<Int>(v))
        return std::to_string(std::get<Int>(v));
    if (std::holds_alternative<bool>(v))
        return std::get<bool>(v) ? "true" : "false";
    const auto& arr = std::get<std::vector<Int>>(v);
    std::string s = "[";
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(arr[i]);
    }
    return s + "]";
}

mini_ir::Type value_type(const Value& v) {
    if (std::holds_alternative<Int>(v))
        return mini_ir::Type::Int;
    if (std::holds_alternative<bool>(v))
        return mini_ir::Type::Bool;
    return mini_ir::Type::Bytes;
}

void InputSet::validate() const {
    if (states.empty())
        throw InvalidArgument("input set must not be empty");
    for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t j = i + 1; j < states.size(); ++j)
            if (states[i] == states[j])
                throw InvalidArgument("duplicate initial state in input set");
}

std::string status_name(TraceStatus s) {
    switch (s) {
    case TraceStatus::NominalExit: return "nominal-exit";
    case TraceStatus::Detected: return "detected";
    case TraceStatus::StepLimit: return "step-limit";
    case TraceStatus::Trap: return "trap";
    }
    return "?";
}

namespace {

// Signals thrown to abort a run; caught at the execute() boundary.
struct DetectSignal {};
struct StepLimitSignal {};
struct TrapSignal {
    std::string reason;
};

// Wrap-around arithmetic keeps large intermediate values defined.
Int wrap_add(Int a, Int b) {
    return static_cast<Int>(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b));
}
Int wrap_sub(Int a, Int b) {
    return static_cast<Int>(static_cast<std::uint64_t>(a) - static_cast<std::uint64_t>(b));
}
Int wrap_mul(Int a, Int b) {
    return static_cast<Int>(static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b));
}

class Machine {
  public:
    Machine(const mini_ir::Program& p, const ExecOptions& opts, const DecisionFn& decide)
        : program_(p), opts_(opts), decide_(decide) {}

    Trace run(const std::string& entry, const InitialState& init) {
        const mini_ir::FunctionDef* fn = program_.find(entry);
        if (!fn)
            throw InvalidArgument("unknown entry function '" + entry + "'");
        if (fn->params.size() != init.params.size())
            throw InvalidArgument("entry '" + entry + "' expects " +
                                  std::to_string(fn->params.size()) + " parameters");
        scopes_.clear();
        scopes_.emplace_back();
        for (const auto& prm : fn->params) {
            auto it = init.params.find(prm.name);
            if (it == init.params.end())
                throw InvalidArgument("missing value for parameter '" + prm.name + "'");
            if (value_type(it->second) != prm.type)
                throw InvalidArgument("parameter '" + prm.name + "' has the wrong type");
            scopes_.back()[prm.name] = it->second;
        }

        Trace t;
        t.init = init;
        try {
            auto flow = exec_block(fn->body);
            if (flow == Flow::Returned) {
                t.status = TraceStatus::NominalExit;
                t.result = return_value_;
            } else {
                t.status = TraceStatus::Trap;
                t.trap_reason = "function '" + entry + "' fell off the end without return";
            }
        } catch (const DetectSignal&) {
            t.status = TraceStatus::Detected;
        } catch (const StepLimitSignal&) {
            t.status = TraceStatus::StepLimit;
        } catch (const TrapSignal& trap) {
            t.status = TraceStatus::Trap;
            t.trap_reason = trap.reason;
        }
        t.plan = std::move(active_);
        t.steps = steps_;
        // Entry frame snapshot: parameters plus top-level lets.
        t.final_store = scopes_.empty() ? std::map<std::string, Value>{} : scopes_.front();
        return t;
    }

  private:
    enum class Flow { Normal, Returned };

    bool site_enabled(const std::string& id) const {
        if (!opts_.site_filter)
            return true;
        const auto& f = *opts_.site_filter;
        return std::find(f.begin(), f.end(), id) != f.end();
    }

    FaultDecision decide_at(const std::string& id, FaultModelTag model, Int nominal,
                            const std::vector<Int>* payloads) {
        int dyn = encounters_[id]++;
        SiteEvent ev;
        ev.ip = &id;
        ev.model = model;
        ev.dyn_index = dyn;
        ev.nominal = nominal;
        ev.payloads = payloads;
        FaultDecision d = decide_(ev);
        if (d.active) {
            faults::FaultOccurrence occ;
            occ.ip = id;
            occ.model = model;
            occ.dyn_index = dyn;
            occ.payload = d.payload;
            active_.push_back(std::move(occ));
        }
        return d;
    }

    Value* find_var(const std::string& name) {
        for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
            auto found = it->find(name);
            if (found != it->end())
                return &found->second;
        }
        return nullptr;
    }

    Int eval_int(const Expr& e) {
        Value v = eval(e);
        return std::get<Int>(v);
    }

    bool eval_bool(const Expr& e) {
        Value v = eval(e);
        return std::get<bool>(v);
    }

    Value eval(const Expr& e) {
        switch (e.kind) {
        case Expr::Kind::IntLit:
            return e.int_value;
        case Expr::Kind::BoolLit:
            return e.bool_value;
        case Expr::Kind::Var: {
            Value* v = find_var(e.name);
            if (!v)
                throw TrapSignal{"unbound variable '" + e.name + "'"};
            return *v;
        }
        case Expr::Kind::Index: {
            Value* v = find_var(e.name);
            if (!v || !std::holds_alternative<std::vector<Int>>(*v))
                throw TrapSignal{"'" + e.name + "' is not an array"};
            const auto& arr = std::get<std::vector<Int>>(*v);
            Int idx = eval_int(*e.lhs);
            if (idx < 0 || static_cast<std::size_t>(idx) >= arr.size())
                throw TrapSignal{"index " + std::to_string(idx) + " out of bounds for '" +
                                 e.name + "' (size " + std::to_string(arr.size()) + ")"};
            return arr[static_cast<std::size_t>(idx)];
        }
        case Expr::Kind::Load: {
            Int nominal = eval_int(*e.lhs);
            if (opts_.models.dlm && site_enabled(e.load_site)) {
                std::vector<Int> payloads = opts_.models.dlm_domain.payloads_for(nominal);
                FaultDecision d =
                    decide_at(e.load_site, FaultModelTag::Dlm, nominal, &payloads);
                return faults::apply_dlm(nominal, d);
            }
            return nominal;
        }
        case Expr::Kind::Not:
            return !eval_bool(*e.lhs);
        case Expr::Kind::Binary: {
            // Short-circuit for the logical operators.
            if (e.op == mini_ir::BinOp::And)
                return eval_bool(*e.lhs) && eval_bool(*e.rhs);
            if (e.op == mini_ir::BinOp::Or)
                return eval_bool(*e.lhs) || eval_bool(*e.rhs);
            Int l = eval_int(*e.lhs);
            Int r = eval_int(*e.rhs);
            switch (e.op) {
            case mini_ir::BinOp::Add: return wrap_add(l, r);
            case mini_ir::BinOp::Sub: return wrap_sub(l, r);
            case mini_ir::BinOp::Mul: return wrap_mul(l, r);
            case mini_ir::BinOp::Eq: return l == r;
            case mini_ir::BinOp::Ne: return l != r;
            case mini_ir::BinOp::Lt: return l < r;
            case mini_ir::BinOp::Le: return l <= r;
            default: break;
            }
            throw TrapSignal{"bad operator"};
        }
        }
        throw TrapSignal{"bad expression"};
    }

    void count_step() {
        if (++steps_ > opts_.step_limit)
            throw StepLimitSignal{};
    }

    // Evaluates a conditional test, applying a test-inversion decision.
    bool eval_condition(const Stmt& s) {
        bool nominal = eval_bool(*s.value);
        if (opts_.models.ti && site_enabled(s.cond_site)) {
            FaultDecision d =
                decide_at(s.cond_site, FaultModelTag::Ti, nominal ? 1 : 0, nullptr);
            return faults::apply_ti(nominal, d);
        }
        return nominal;
    }

    Flow exec_block(const Block& b) {
        scopes_.emplace_back();
        Flow flow = Flow::Normal;
        for (const auto& s : b) {
            flow = exec_stmt(*s);
            if (flow == Flow::Returned)
                break;
        }
        // Merge nothing back: block scope ends here. The entry frame is the
        // first scope and survives for the final snapshot.
        if (scopes_.size() > 1)
            scopes_.pop_back();
        return flow;
    }

    Flow exec_stmt(const Stmt& s) {
        count_step();
        switch (s.kind) {
        case Stmt::Kind::Let:
            scopes_.back()[s.name] = eval(*s.value);
            return Flow::Normal;
        case Stmt::Kind::Assign: {
            Value* slot = find_var(s.name);
            if (!slot)
                throw TrapSignal{"assignment to unbound '" + s.name + "'"};
            if (s.index) {
                Int idx = eval_int(*s.index);
                Value v = eval(*s.value);
                auto& arr = std::get<std::vector<Int>>(*slot);
                if (idx < 0 || static_cast<std::size_t>(idx) >= arr.size())
                    throw TrapSignal{"index " + std::to_string(idx) + " out of bounds for '" +
                                     s.name + "'"};
                arr[static_cast<std::size_t>(idx)] = std::get<Int>(v);
            } else {
                *slot = eval(*s.value);
            }
            return Flow::Normal;
        }
        case Stmt::Kind::If: {
            bool taken = eval_condition(s);
            if (taken) {
                Flow flow = exec_block(s.body);
                if (flow == Flow::Returned)
                    return flow;
                // End of a taken then block: an else-following-then fault
                // falls through into the else block.
                if (!s.join_site.empty() && opts_.models.eft && site_enabled(s.join_site)) {
                    FaultDecision d = decide_at(s.join_site, FaultModelTag::Eft, 1, nullptr);
                    if (faults::eft_successor(d) == faults::EftEffect::FallIntoElse)
                        return exec_block(s.else_body);
                }
                return Flow::Normal;
            }
            if (s.has_else)
                return exec_block(s.else_body);
            return Flow::Normal;
        }
        case Stmt::Kind::While:
            while (eval_condition(s)) {
                Flow flow = exec_block(s.body);
                if (flow == Flow::Returned)
                    return flow;
                count_step();
            }
            return Flow::Normal;
        case Stmt::Kind::Return:
            return_value_ = eval(*s.value);
            return Flow::Returned;
        case Stmt::Kind::Detect:
            throw DetectSignal{};
        }
        return Flow::Normal;
    }

    const mini_ir::Program& program_;
    const ExecOptions& opts_;
    const DecisionFn& decide_;

    std::vector<std::map<std::string, Value>> scopes_;
    std::map<std::string, int> encounters_;
    std::vector<faults::FaultOccurrence> active_;
    Value return_value_;
    long long steps_ = 0;
};

} // namespace

Trace execute(const mini_ir::Program& p, const std::string& entry, const InitialState& init,
              const ExecOptions& opts, const DecisionFn& decide) {
    Machine m(p, opts, decide);
    return m.run(entry, init);
}

Trace run_trace(const mini_ir::Program& p, const std::string& entry, const InitialState& init,
                const faults::FaultPlan& plan, const RunOptions& opts) {
    if (opts.step_limit <= 0)
        throw InvalidArgument("step limit must be positive");

    // Key plan entries by (ip, dyn_index); reject duplicates up front.
    std::map<std::pair<std::string, int>, const faults::FaultOccurrence*> pending;
    for (const auto& occ : plan.schedule) {
        if (!opts.models.has(occ.model))
            throw InvalidArgument("plan uses fault model '" + faults::model_name(occ.model) +
                                  "' which is not enabled");
        auto key = std::make_pair(occ.ip, occ.dyn_index);
        if (!pending.emplace(key, &occ).second)
            throw InvalidArgument("plan names encounter " + occ.render() + " twice");
    }

    ExecOptions eo;
    eo.models = opts.models;
    eo.step_limit = opts.step_limit;

    std::size_t consumed = 0;
    DecisionFn decide = [&](const SiteEvent& ev) -> FaultDecision {
        auto it = pending.find(std::make_pair(*ev.ip, ev.dyn_index));
        if (it == pending.end())
            return FaultDecision{};
        const faults::FaultOccurrence* occ = it->second;
        if (occ->model != ev.model)
            throw InvalidArgument("plan entry " + occ->render() + " does not match site kind");
        FaultDecision d;
        d.active = true;
        if (ev.model == FaultModelTag::Dlm) {
            if (!occ->payload)
                throw InvalidArgument("load fault " + occ->render() + " needs a payload");
            const auto& legal = *ev.payloads;
            if (std::find(legal.begin(), legal.end(), *occ->payload) == legal.end())
                throw InvalidArgument("payload " + std::to_string(*occ->payload) +
                                      " of " + occ->render() + " is outside the domain");
            d.payload = occ->payload;
        }
        ++consumed;
        return d;
    };

    Trace t = execute(p, entry, init, eo, decide);
    if (consumed != plan.schedule.size()) {
        bool aborted = t.status == TraceStatus::Detected || t.status == TraceStatus::Trap ||
                       t.status == TraceStatus::StepLimit;
        if (!(opts.allow_unconsumed_after_abort && aborted))
            throw InvalidArgument("unreachable fault: " +
                                  std::to_string(plan.schedule.size() - consumed) +
                                  " plan entries were never encountered");
    }
    return t;
}

} // namespace faultforge::explorer
