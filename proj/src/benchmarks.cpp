#include "faultforge/benchmarks.hpp"

#include "faultforge/error.hpp"

#include <filesystem>
#include <fstream>

namespace faultforge::benchmarks {

namespace {

// Fragile byte-array compare: result starts at the robust true encoding
// (0xAA = 170) and any mismatch downgrades it to 0x55 = 85. Conditional
// sites land on lines 4 and 5.
const char* kBacV1 = R"mc(fn byteArrayCompare(a1: byte[], a2: byte[], size: int) -> int {
    let i = 0;
    let result = 170;
    for (i = 0; i < size; i = i + 1) {
        if (a1[i] != a2[i]) { result = 85; }
    }
    return result;
}
)mc";

// Hardened variant: each branch of the comparison re-checks its condition
// and the loop exit is verified afterwards. Conditional sites land on lines
// 4, 5, 6, 8 and 9.
const char* kBacV2 = R"mc(fn byteArrayCompare(a1: byte[], a2: byte[], size: int) -> int {
    let i = 0;
    let result = 170;
    for (i = 0; i < size; i = i + 1) {
        if (a1[i] != a2[i]) {
            if (a1[i] == a2[i]) { detect(); }
            result = 85;
        } else { if (a1[i] != a2[i]) { detect(); } } }
    if (i != size) { detect(); }
    return result;
}
)mc";

// PIN verification with hardened boolean encodings, a fixed-time comparison
// loop, parameter sanity checks and authentication-flag integrity checks.
// Eight conditional sites.
const char* kVp4 = R"mc(fn verifyPIN(user: byte[], card: byte[], size: int, trials: int) -> int {
    let auth = 85;
    let diff = 85;
    if (size != 5) { detect(); }
    if (trials <= 0) { detect(); }
    let i = 0;
    while (i < size) {
        if (user[i] != card[i]) {
            diff = 170;
        }
        i = i + 1;
    }
    if (auth != 85) { detect(); }
    if (auth == 170) { detect(); }
    let cmp = 85;
    if (diff == 85) {
        cmp = 170;
    }
    if (cmp == 170) {
        auth = 170;
    }
    return auth;
}
)mc";

// Toy firmware updater: checksum and version gates with duplicated checks,
// plus two explicitly marked loads (stored checksum, current version).
const char* kFuToy = R"mc(fn fwUpdate(img: byte[], len: int, newVersion: int, curVersion: int, expectedSum: int) -> int {
    let applied = 0;
    let sum = 0;
    let i = 0;
    while (i < len) {
        sum = sum + img[i];
        i = i + 1;
    }
    if (i != len) { detect(); }
    let want = load(expectedSum);
    if (sum != want) {
        return 0;
    }
    if (want != sum) { detect(); }
    let cur = load(curVersion);
    if (newVersion <= cur) {
        return 0;
    }
    if (newVersion <= cur) { detect(); }
    applied = 1;
    return applied;
}
)mc";

const char* kBacV1Harness = R"json({
    "program": "bac_v1.mc",
    "entry": "byteArrayCompare",
    "inputs": [ { "a1": [0, 1, 2, 3], "a2": [4, 5, 6, 7], "size": 4 } ],
    "models": ["ti"],
    "max_order": 8,
    "oracle": "result == 170"
}
)json";

const char* kBacV2Harness = R"json({
    "program": "bac_v2.mc",
    "entry": "byteArrayCompare",
    "inputs": [ { "a1": [0, 1, 2, 3], "a2": [4, 5, 6, 7], "size": 4 } ],
    "models": ["ti"],
    "max_order": 8,
    "oracle": "result == 170"
}
)json";

const char* kVp4Harness = R"json({
    "program": "vp4.mc",
    "entry": "verifyPIN",
    "inputs": [ { "user": [1, 2, 3, 4, 5], "card": [6, 7, 8, 9, 0], "size": 5, "trials": 3 } ],
    "models": ["ti"],
    "max_order": 4,
    "oracle": "result == 170"
}
)json";

const char* kFuToyHarness = R"json({
    "program": "fu_toy.mc",
    "entry": "fwUpdate",
    "inputs": [ { "img": [3, 7], "len": 2, "newVersion": 2, "curVersion": 5, "expectedSum": 10 } ],
    "models": ["ti", "dlm"],
    "max_order": 4,
    "oracle": "result == 1"
}
)json";

} // namespace

const std::vector<BundledFile>& corpus() {
    static const std::vector<BundledFile> files = {
        {"bac_v1.mc", kBacV1},
        {"bac_v2.mc", kBacV2},
        {"vp4.mc", kVp4},
        {"fu_toy.mc", kFuToy},
        {"bac_v1.json", kBacV1Harness},
        {"bac_v2.json", kBacV2Harness},
        {"vp4.json", kVp4Harness},
        {"fu_toy.json", kFuToyHarness},
    };
    return files;
}

const std::string& file(const std::string& name) {
    for (const auto& f : corpus())
        if (f.name == name)
            return f.content;
    throw Error("no bundled file named '" + name + "'");
}

void bundle_benchmarks(const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& f : corpus()) {
        std::ofstream out(std::filesystem::path(dir) / f.name, std::ios::binary);
        if (!out)
            throw Error("cannot write '" + f.name + "' into '" + dir + "'");
        out << f.content;
    }
}

} // namespace faultforge::benchmarks
