#include "faultforge/explorer/harness.hpp"

#include "faultforge/error.hpp"
#include "faultforge/mini_ir/parse.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace faultforge::explorer {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// FNV-1a, rendered as hex. Stable across platforms and runs.
std::string fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Value value_from_json(const json& j) {
    if (j.is_boolean())
        return j.get<bool>();
    if (j.is_number_integer())
        return j.get<Int>();
    if (j.is_array()) {
        std::vector<Int> arr;
        for (const auto& el : j) {
            if (!el.is_number_integer())
                throw Error("byte array elements must be integers");
            arr.push_back(el.get<Int>());
        }
        return arr;
    }
    throw Error("unsupported input value: " + j.dump());
}

} // namespace

std::string Harness::fingerprint() const {
    std::ostringstream ss;
    ss << program_text << '\x1f' << entry << '\x1f' << oracle_text << '\x1f' << max_order
       << '\x1f' << step_limit << '\x1f';
    for (auto m : models.list())
        ss << faults::model_name(m) << ',';
    ss << '\x1f';
    for (Int v : models.dlm_domain.fixed)
        ss << v << ',';
    ss << '\x1f';
    for (const auto& st : inputs.states) {
        for (const auto& [name, value] : st.params)
            ss << name << '=' << value_to_string(value) << ';';
        ss << '|';
    }
    return fnv1a(ss.str());
}

Harness load_harness(const std::string& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw Error("malformed harness '" + path + "': " + e.what());
    }

    Harness h;
    try {
        h.program_path = j.at("program").get<std::string>();
        h.entry = j.at("entry").get<std::string>();
        h.max_order = j.at("max_order").get<int>();
        h.oracle_text = j.at("oracle").get<std::string>();

        for (const auto& name : j.at("models")) {
            auto m = faults::model_from_name(name.get<std::string>());
            if (!m)
                throw Error("unknown fault model '" + name.get<std::string>() + "'");
            switch (*m) {
            case faults::FaultModelTag::Ti: h.models.ti = true; break;
            case faults::FaultModelTag::Dlm: h.models.dlm = true; break;
            case faults::FaultModelTag::Eft: h.models.eft = true; break;
            }
        }
        if (j.contains("dlm_payloads"))
            for (const auto& v : j.at("dlm_payloads"))
                h.models.dlm_domain.fixed.push_back(v.get<Int>());
        if (j.contains("step_limit"))
            h.step_limit = j.at("step_limit").get<long long>();

        for (const auto& input : j.at("inputs")) {
            InitialState st;
            for (auto it = input.begin(); it != input.end(); ++it)
                st.params[it.key()] = value_from_json(it.value());
            h.inputs.states.push_back(std::move(st));
        }
    } catch (const json::exception& e) {
        throw Error("malformed harness '" + path + "': " + e.what());
    }

    if (const char* env = std::getenv("FAULTFORGE_STEP_LIMIT")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            h.step_limit = v;
        else
            throw Error("FAULTFORGE_STEP_LIMIT must be a positive integer");
    }

    std::filesystem::path prog(h.program_path);
    if (prog.is_relative())
        prog = std::filesystem::path(path).parent_path() / prog;
    h.program_text = read_file(prog.string());

    h.inputs.validate();
    if (!h.models.ti && !h.models.dlm && !h.models.eft)
        throw Error("harness '" + path + "' enables no fault model");
    return h;
}

mini_ir::Program parse_harness_program(const Harness& h) {
    mini_ir::Program p = mini_ir::parse_program(h.program_text);
    if (!p.find(h.entry))
        throw Error("entry function '" + h.entry + "' not found in " + h.program_path);
    return p;
}

Oracle harness_oracle(const Harness& h, const mini_ir::Program& p) {
    return Oracle::parse(h.oracle_text, *p.find(h.entry));
}

AttackAnalysis run_harness(const Harness& h, int jobs) {
    mini_ir::Program p = parse_harness_program(h);
    Oracle oracle = harness_oracle(h, p);
    ExploreOptions opts;
    opts.models = h.models;
    opts.max_order = h.max_order;
    opts.step_limit = h.step_limit;
    opts.jobs = jobs;
    return explore(p, h.entry, h.inputs, oracle, opts);
}

} // namespace faultforge::explorer
