#pragma once

#include "faultforge/explorer/interpreter.hpp"
#include "faultforge/explorer/oracle.hpp"
#include "faultforge/explorer/value.hpp"
#include "faultforge/faults/faults.hpp"
#include "faultforge/mini_ir/ast.hpp"

#include <optional>
#include <string>
#include <vector>

namespace faultforge::explorer {

// An attack is the ordered sequence of fault occurrences of a successful,
// undetected trace.
using Attack = std::vector<faults::FaultOccurrence>;

struct ExploreOptions {
    faults::ModelSet models;
    int max_order = 0; // fault budget per trace
    long long step_limit = kDefaultStepLimit;
    std::optional<std::vector<std::string>> site_filter;
    int jobs = 1; // inputs explored in parallel when > 1
};

// Per-input classification counters and the recorded attacks, in canonical
// order (by fault count, then lexicographically by occurrence list).
struct InputAnalysis {
    InitialState init;
    Trace nominal_trace;
    std::vector<Attack> attacks;
    long long count_detected = 0;
    long long count_failed = 0; // includes trapped traces
    long long count_trapped = 0;
    long long count_step_limit = 0;
    long long explored_paths = 0;

    // Attacks per order 0..max_order.
    std::vector<long long> vuln;
};

// Result of exhausting the fault space of a program up to the given order.
struct AttackAnalysis {
    std::string entry;
    faults::ModelSet models;
    int max_order = 0;
    Oracle oracle;
    std::vector<InputAnalysis> inputs;
    bool complete = true; // false iff some trace hit the step limit

    long long explored_paths = 0;
    long long total_attacks = 0;

    const InputAnalysis* find_input(const InitialState& init) const;
};

// Depth-first exhaustive exploration: at every dynamic fault site each legal
// decision is branched on (inactive first, then active, load payloads in
// domain order) while the remaining fault budget allows. Every terminating
// trace is classified as nominal, detected, successful or failed; step-limit
// traces clear `complete` and are excluded from the classes.
AttackAnalysis explore(const mini_ir::Program& p, const std::string& entry, const InputSet& inputs,
                       const Oracle& oracle, const ExploreOptions& opts);

} // namespace faultforge::explorer
