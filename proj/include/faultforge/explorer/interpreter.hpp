#pragma once

#include "faultforge/explorer/value.hpp"
#include "faultforge/faults/faults.hpp"
#include "faultforge/mini_ir/ast.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>

namespace faultforge::explorer {

inline constexpr long long kDefaultStepLimit = 100000;

enum class TraceStatus {
    NominalExit, // returned a value
    Detected,    // detect() reached
    StepLimit,   // dynamic statement budget exhausted
    Trap,        // runtime error (out-of-bounds index, missing return)
};

std::string status_name(TraceStatus s);

// Execution record of one run: which faults were active (in trace time),
// how it ended, and the final variable snapshot of the entry frame.
struct Trace {
    InitialState init;
    std::vector<faults::FaultOccurrence> plan;
    TraceStatus status = TraceStatus::NominalExit;
    std::optional<Value> result;
    std::string trap_reason;
    std::map<std::string, Value> final_store;
    long long steps = 0;

    int fault_count() const { return static_cast<int>(plan.size()); }
};

// Dynamic fault site, presented to the decision callback. `payloads` holds
// the legal injected values for load sites and is empty otherwise.
struct SiteEvent {
    const std::string* ip = nullptr;
    faults::FaultModelTag model = faults::FaultModelTag::Ti;
    int dyn_index = 0;
    Int nominal = 0; // loaded value for Dlm sites, condition for Ti
    const std::vector<Int>* payloads = nullptr;
};

// Returns the decision to apply at a site. Exploration and plan replay are
// both implemented as callbacks over the same interpreter.
using DecisionFn = std::function<faults::FaultDecision(const SiteEvent&)>;

struct ExecOptions {
    faults::ModelSet models;
    long long step_limit = kDefaultStepLimit;
    // When set, only these site ids take decisions; all other sites run
    // nominally and are not reported to the callback.
    std::optional<std::vector<std::string>> site_filter;
};

// Runs `entry` of `p` on `init`, consulting `decide` at every dynamic fault
// site of an enabled model. The returned trace records the active decisions.
Trace execute(const mini_ir::Program& p, const std::string& entry, const InitialState& init,
              const ExecOptions& opts, const DecisionFn& decide);

struct RunOptions {
    faults::ModelSet models;
    long long step_limit = kDefaultStepLimit;
    // Replay mode: an aborted trace (detect, trap) may leave plan entries
    // unconsumed without raising an error.
    bool allow_unconsumed_after_abort = false;
};

// Deterministic single-trace run: each plan entry fires exactly when its
// (ip, dyn_index) is encountered. Throws InvalidArgument if an entry is never
// reached (unless the run aborted and replay mode is on), if two entries name
// the same encounter, or if a Dlm payload is outside the domain.
Trace run_trace(const mini_ir::Program& p, const std::string& entry, const InitialState& init,
                const faults::FaultPlan& plan, const RunOptions& opts);

} // namespace faultforge::explorer
