#pragma once

#include <string>
#include <vector>

namespace faultforge::benchmarks {

struct BundledFile {
    std::string name;
    std::string content;
};

// MiniC benchmark sources, their harnesses, and the scheme programs used by
// the countermeasure catalog.
const std::vector<BundledFile>& corpus();

// Content of one bundled file; throws Error if absent.
const std::string& file(const std::string& name);

// Writes the whole corpus into `dir`, creating it if needed.
void bundle_benchmarks(const std::string& dir);

} // namespace faultforge::benchmarks
