#include <doctest.h>

#include "faultforge/benchmarks.hpp"
#include "faultforge/error.hpp"
#include "faultforge/mini_ir/injection.hpp"
#include "faultforge/mini_ir/parse.hpp"
#include "faultforge/mini_ir/print.hpp"

using namespace faultforge;
using mini_ir::InjectionPoint;
using mini_ir::IpKind;

namespace {

faults::ModelSet models(bool ti, bool dlm = false, bool eft = false) {
    faults::ModelSet m;
    m.ti = ti;
    m.dlm = dlm;
    m.eft = eft;
    return m;
}

std::vector<std::string> ids(const std::vector<InjectionPoint>& ips) {
    std::vector<std::string> out;
    for (const auto& ip : ips)
        out.push_back(ip.id);
    return out;
}

} // namespace

TEST_SUITE("mini_ir") {

TEST_CASE("empty input parses to a program with zero functions") {
    auto p = mini_ir::parse_program("");
    CHECK(p.functions.empty());
}

TEST_CASE("fragile compare yields conditional points named after its lines") {
    auto p = mini_ir::parse_program(benchmarks::file("bac_v1.mc"));
    auto ips = enumerate_injection_points(p, models(true));
    CHECK(ids(ips) == std::vector<std::string>{"IP4", "IP5"});
    CHECK(ips[0].kind == IpKind::ConditionalTest);
    CHECK(ips[0].loop_test);
    CHECK_FALSE(ips[1].loop_test);
}

TEST_CASE("malformed input reports the offending position") {
    try {
        mini_ir::parse_program("fn f( {");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 6); // the '{'
        CHECK(e.line == 1);
        CHECK(e.col == 7);
    }
}

TEST_CASE("semantic errors: unresolved names and type mismatches") {
    CHECK_THROWS_AS(mini_ir::parse_program("fn f() -> int { return x; }"), SemanticError);
    CHECK_THROWS_AS(mini_ir::parse_program("fn f(b: bool) -> int { return b + 1; }"),
                    SemanticError);
    CHECK_THROWS_AS(mini_ir::parse_program("fn f(x: int) -> int { if (x) { } return 0; }"),
                    SemanticError);
    CHECK_THROWS_AS(
        mini_ir::parse_program("fn f(x: int) -> int { let x = 1; return x; }"),
        SemanticError);
}

TEST_CASE("hardened compare exposes five conditional points") {
    auto p = mini_ir::parse_program(benchmarks::file("bac_v2.mc"));
    auto ips = enumerate_injection_points(p, models(true));
    CHECK(ids(ips) == std::vector<std::string>{"IP4", "IP5", "IP6", "IP8", "IP9"});
}

TEST_CASE("hardened compare has one then-else join") {
    auto p = mini_ir::parse_program(benchmarks::file("bac_v2.mc"));
    auto ips = enumerate_injection_points(p, models(false, false, true));
    REQUIRE(ips.size() == 1);
    CHECK(ips[0].kind == IpKind::ThenElseJoin);
    CHECK(ips[0].location.line == 5);
}

TEST_CASE("a single marked load is a single load point") {
    auto p = mini_ir::parse_program(
        "fn f(x: int) -> int {\n    let y = load(x);\n    return y;\n}\n");
    auto ips = enumerate_injection_points(p, models(false, true));
    REQUIRE(ips.size() == 1);
    CHECK(ips[0].kind == IpKind::MarkedLoad);
    CHECK(ips[0].id == "IP2");
}

TEST_CASE("sites sharing a line get letter suffixes, in source order") {
    auto p = mini_ir::parse_program(
        "fn f(a: int, b: int) -> int {\n"
        "    if (a < b) { let t = load(a); if (t < 0) { return 0; } } else { return b; }\n"
        "    return a;\n}\n");
    auto ips = enumerate_injection_points(p, models(true, true, true));
    // Outer test, its join, the marked load and the inner test all sit on
    // line 2; ids disambiguate by source order.
    REQUIRE(ips.size() == 4);
    CHECK(ips[0].id == "IP2");
    CHECK(ips[0].kind == IpKind::ConditionalTest);
    CHECK(ips[1].id == "IP2b");
    CHECK(ips[1].kind == IpKind::ThenElseJoin);
    CHECK(ips[2].id == "IP2c");
    CHECK(ips[2].kind == IpKind::MarkedLoad);
    CHECK(ips[3].id == "IP2d");
    CHECK(ips[3].kind == IpKind::ConditionalTest);
}

TEST_CASE("ids are stable across re-parses of identical text") {
    const std::string& src = benchmarks::file("vp4.mc");
    auto a = enumerate_injection_points(mini_ir::parse_program(src), models(true, true, true));
    auto b = enumerate_injection_points(mini_ir::parse_program(src), models(true, true, true));
    CHECK(ids(a) == ids(b));
}

TEST_CASE("pretty-print then parse is a fixpoint") {
    for (const char* name : {"bac_v1.mc", "bac_v2.mc", "vp4.mc", "fu_toy.mc"}) {
        auto p = mini_ir::parse_program(benchmarks::file(name));
        std::string canon = mini_ir::pretty_print(p);
        auto reparsed = mini_ir::parse_program(canon);
        CHECK(mini_ir::pretty_print(reparsed) == canon);
    }
}

TEST_CASE("printer keeps operator precedence intact") {
    auto p = mini_ir::parse_program(
        "fn f(a: int, b: int, c: int) -> bool {\n"
        "    return (a + b) * c <= a && !(b < c) || a == c;\n}\n");
    std::string canon = mini_ir::pretty_print(p);
    auto reparsed = mini_ir::parse_program(canon);
    CHECK(mini_ir::pretty_print(reparsed) == canon);
}

} // TEST_SUITE
