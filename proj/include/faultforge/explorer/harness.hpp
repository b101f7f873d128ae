#pragma once

#include "faultforge/explorer/explore.hpp"
#include "faultforge/explorer/value.hpp"
#include "faultforge/faults/faults.hpp"
#include "faultforge/mini_ir/ast.hpp"

#include <optional>
#include <string>

namespace faultforge::explorer {

// Analysis configuration: program, entry point, concrete inputs, fault
// models, order budget and success condition. Loaded from a JSON file:
//
//   {
//     "program": "bac_v1.mc",
//     "entry": "byteArrayCompare",
//     "inputs": [ { "a1": [0,1,2,3], "a2": [4,5,6,7], "size": 4 } ],
//     "models": ["ti"],
//     "dlm_payloads": [0, 255],        // optional; default derives per load
//     "max_order": 8,
//     "oracle": "result == 170",
//     "step_limit": 100000             // optional
//   }
struct Harness {
    std::string program_path;
    std::string program_text;
    std::string entry;
    InputSet inputs;
    faults::ModelSet models;
    int max_order = 0;
    std::string oracle_text;
    long long step_limit = kDefaultStepLimit;

    // Fingerprint of everything that determines analysis output. Reports
    // embed it so `compare` can refuse mismatched provenance.
    std::string fingerprint() const;
};

// Reads the harness file and the program it references (relative paths are
// resolved against the harness file's directory). FAULTFORGE_STEP_LIMIT
// overrides the step limit when set.
Harness load_harness(const std::string& path);

// Runs the harness end to end.
AttackAnalysis run_harness(const Harness& h, int jobs = 1);

// Helpers shared with the CLI.
mini_ir::Program parse_harness_program(const Harness& h);
Oracle harness_oracle(const Harness& h, const mini_ir::Program& p);

} // namespace faultforge::explorer
