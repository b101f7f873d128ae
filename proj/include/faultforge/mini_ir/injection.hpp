#pragma once

#include "faultforge/faults/faults.hpp"
#include "faultforge/mini_ir/ast.hpp"

#include <string>
#include <vector>

namespace faultforge::mini_ir {

enum class IpKind { ConditionalTest, MarkedLoad, ThenElseJoin };

std::string ip_kind_name(IpKind k);

// A static location where a fault model can apply. Ids come straight from
// assign_site_ids, so they are independent of which models are queried and
// survive countermeasure rewrites unchanged.
struct InjectionPoint {
    std::string id;
    IpKind kind = IpKind::ConditionalTest;
    LineId location;
    bool loop_test = false; // ConditionalTest on a while condition

    faults::FaultModelTag model() const {
        switch (kind) {
        case IpKind::ConditionalTest: return faults::FaultModelTag::Ti;
        case IpKind::MarkedLoad: return faults::FaultModelTag::Dlm;
        case IpKind::ThenElseJoin: return faults::FaultModelTag::Eft;
        }
        return faults::FaultModelTag::Ti;
    }
};

// All fault sites applicable to at least one model in `models`, each exactly
// once, ordered by source position.
std::vector<InjectionPoint> enumerate_injection_points(const Program& p,
                                                       const faults::ModelSet& models);

} // namespace faultforge::mini_ir
