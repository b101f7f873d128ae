#pragma once

#include "faultforge/mini_ir/ast.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace faultforge::explorer {

using Int = std::int64_t;

// Runtime value: int, bool, or byte array (elements held as ints).
using Value = std::variant<Int, bool, std::vector<Int>>;

bool value_equal(const Value& a, const Value& b);
std::string value_to_string(const Value& v);
mini_ir::Type value_type(const Value& v);

// Concrete binding of entry-function parameters.
struct InitialState {
    std::map<std::string, Value> params;

    friend bool operator==(const InitialState&, const InitialState&) = default;
};

// Ordered, duplicate-free, non-empty list of initial states.
struct InputSet {
    std::vector<InitialState> states;

    // Throws InvalidArgument on duplicates or emptiness.
    void validate() const;
};

} // namespace faultforge::explorer
