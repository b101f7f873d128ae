#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace faultforge::faults {

using Int = std::int64_t;

// The three supported fault models: inverting a conditional test, replacing
// a marked load's value, and falling from the end of a then block into the
// else block (the skipped then-exit jump).
enum class FaultModelTag { Ti, Dlm, Eft };

std::string model_name(FaultModelTag m);
std::optional<FaultModelTag> model_from_name(const std::string& name);

// Values a data-load fault may inject. With an empty `fixed` list the domain
// is derived per load from the nominal value v: {0, v+1, v with lowest bit
// flipped}, deduplicated. Injecting the nominal value itself is a legal,
// harmless fault when the domain contains it.
struct DlmDomain {
    std::vector<Int> fixed;

    std::vector<Int> payloads_for(Int nominal) const;
};

// Which models an analysis considers, plus the load payload domain.
struct ModelSet {
    bool ti = false;
    bool dlm = false;
    bool eft = false;
    DlmDomain dlm_domain;

    bool has(FaultModelTag m) const {
        switch (m) {
        case FaultModelTag::Ti: return ti;
        case FaultModelTag::Dlm: return dlm;
        case FaultModelTag::Eft: return eft;
        }
        return false;
    }
    std::vector<FaultModelTag> list() const;
};

// One decision taken at a dynamic fault site.
struct FaultDecision {
    bool active = false;
    std::optional<Int> payload; // present iff active and model is Dlm
};

// One injected fault: a static injection point, the model, the 0-based count
// of earlier dynamic encounters of that point within the trace, and the
// injected value for load faults.
struct FaultOccurrence {
    std::string ip;
    FaultModelTag model = FaultModelTag::Ti;
    int dyn_index = 0;
    std::optional<Int> payload;

    friend bool operator==(const FaultOccurrence&, const FaultOccurrence&) = default;
    friend std::strong_ordering operator<=>(const FaultOccurrence& a, const FaultOccurrence& b);

    std::string render() const;
};

// An ordered injection schedule; entries must follow trace time.
struct FaultPlan {
    std::vector<FaultOccurrence> schedule;
};

// Test inversion: identity when inactive, negation when active.
bool apply_ti(bool cond_value, const FaultDecision& d);

// Data-load modification: identity when inactive, payload when active.
Int apply_dlm(Int value, const FaultDecision& d);

// Control effect at the end of a taken then-block.
enum class EftEffect { ExitIf, FallIntoElse };

// Else-following-then: only queried at the end of a then block; the else
// branch is never affected.
EftEffect eft_successor(const FaultDecision& d);

} // namespace faultforge::faults
