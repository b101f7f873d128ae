#include "faultforge/faults/faults.hpp"

#include <algorithm>

namespace faultforge::faults {

std::string model_name(FaultModelTag m) {
    switch (m) {
    case FaultModelTag::Ti: return "ti";
    case FaultModelTag::Dlm: return "dlm";
    case FaultModelTag::Eft: return "eft";
    }
    return "?";
}

std::optional<FaultModelTag> model_from_name(const std::string& name) {
    if (name == "ti")
        return FaultModelTag::Ti;
    if (name == "dlm")
        return FaultModelTag::Dlm;
    if (name == "eft")
        return FaultModelTag::Eft;
    return std::nullopt;
}

std::vector<Int> DlmDomain::payloads_for(Int nominal) const {
    std::vector<Int> out;
    if (fixed.empty()) {
        out = {0, nominal + 1, nominal ^ 1};
    } else {
        out = fixed;
    }
    // Duplicate payload values would branch to identical traces.
    std::vector<Int> dedup;
    for (Int v : out)
        if (std::find(dedup.begin(), dedup.end(), v) == dedup.end())
            dedup.push_back(v);
    return dedup;
}

std::vector<FaultModelTag> ModelSet::list() const {
    std::vector<FaultModelTag> out;
    if (ti)
        out.push_back(FaultModelTag::Ti);
    if (dlm)
        out.push_back(FaultModelTag::Dlm);
    if (eft)
        out.push_back(FaultModelTag::Eft);
    return out;
}

std::strong_ordering operator<=>(const FaultOccurrence& a, const FaultOccurrence& b) {
    if (auto c = a.ip <=> b.ip; c != 0)
        return c;
    if (auto c = a.dyn_index <=> b.dyn_index; c != 0)
        return c;
    if (auto c = static_cast<int>(a.model) <=> static_cast<int>(b.model); c != 0)
        return c;
    Int pa = a.payload.value_or(0);
    Int pb = b.payload.value_or(0);
    if (auto c = a.payload.has_value() <=> b.payload.has_value(); c != 0)
        return c;
    return pa <=> pb;
}

std::string FaultOccurrence::render() const {
    const char* m = model == FaultModelTag::Ti    ? "TI"
                    : model == FaultModelTag::Dlm ? "DLM"
                                                  : "EfT";
    std::string s = ip + "(" + m + ")@" + std::to_string(dyn_index);
    if (payload)
        s += "=" + std::to_string(*payload);
    return s;
}

bool apply_ti(bool cond_value, const FaultDecision& d) {
    return d.active ? !cond_value : cond_value;
}

Int apply_dlm(Int value, const FaultDecision& d) {
    return d.active ? *d.payload : value;
}

EftEffect eft_successor(const FaultDecision& d) {
    return d.active ? EftEffect::FallIntoElse : EftEffect::ExitIf;
}

} // namespace faultforge::faults
