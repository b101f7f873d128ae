#include <doctest.h>

#include "faultforge/faults/faults.hpp"

using namespace faultforge::faults;

namespace {

FaultDecision inactive() { return FaultDecision{}; }

FaultDecision active_ti() { return FaultDecision{true, std::nullopt}; }

FaultDecision active_dlm(Int payload) { return FaultDecision{true, payload}; }

} // namespace

TEST_SUITE("faults") {

TEST_CASE("test inversion: identity when inactive, negation when active") {
    CHECK(apply_ti(true, inactive()) == true);
    CHECK(apply_ti(false, inactive()) == false);
    CHECK(apply_ti(true, active_ti()) == false);
    CHECK(apply_ti(false, active_ti()) == true);
}

TEST_CASE("test inversion is an involution under active decisions") {
    for (bool v : {true, false})
        CHECK(apply_ti(apply_ti(v, active_ti()), active_ti()) == v);
}

TEST_CASE("load modification substitutes the payload") {
    CHECK(apply_dlm(7, inactive()) == 7);
    CHECK(apply_dlm(7, active_dlm(0)) == 0);
    // Injecting the nominal value is a legal, harmless fault.
    CHECK(apply_dlm(7, active_dlm(7)) == 7);
}

TEST_CASE("else-following-then affects only the taken then block") {
    CHECK(eft_successor(inactive()) == EftEffect::ExitIf);
    CHECK(eft_successor(active_ti()) == EftEffect::FallIntoElse);
}

TEST_CASE("derived load payload domain") {
    DlmDomain d;
    CHECK(d.payloads_for(7) == std::vector<Int>{0, 8, 6});
    // 0+1 and 0^1 coincide; duplicates collapse.
    CHECK(d.payloads_for(0) == std::vector<Int>{0, 1});
    d.fixed = {42, 42, 1};
    CHECK(d.payloads_for(7) == std::vector<Int>{42, 1});
}

TEST_CASE("occurrence ordering is by point, then encounter, then payload") {
    FaultOccurrence a{"IP4", FaultModelTag::Ti, 0, std::nullopt};
    FaultOccurrence b{"IP4", FaultModelTag::Ti, 1, std::nullopt};
    FaultOccurrence c{"IP5", FaultModelTag::Ti, 0, std::nullopt};
    CHECK(a < b);
    CHECK(b < c);
    CHECK(a.render() == "IP4(TI)@0");
    FaultOccurrence d{"IP7", FaultModelTag::Dlm, 2, 9};
    CHECK(d.render() == "IP7(DLM)@2=9");
}

} // TEST_SUITE
