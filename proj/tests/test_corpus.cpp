#include "doctest.h"

#include "support.hpp"

#include <filesystem>
#include <fstream>

using namespace hamcheck;
using namespace hamcheck::testing;

namespace {

std::string minimal(const std::string& v, const std::string& g = R"([["1","0"],["0","1"]])")
{
    return R"({"format": "hamcheck-problem/1", "name": "t", "dimension": 2,
               "V": )" + v + R"(, "W": ["0", "0"], "g": )" + g + R"(, "b": "from-metric",
               "omega": [["0","0"],["0","0"]], "expected": {"thmcomp": true}})";
}

std::filesystem::path scratch_file(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / "hamcheck-tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("built-in problems")
{
    auto names = builtin_names();
    CHECK(names == std::vector<std::string>{"kdv1", "kdv2", "twowave", "sinhgordon", "threewave", "twowave-corrected"});
    for (const auto& n : names) {
        ProblemInstance p = builtin(n);
        CHECK(p.name == n);
        CHECK_NOTHROW(p.system.validate());
        CHECK_NOTHROW(p.op.validate());
        for (const auto& [set, want] : p.expected) {
            CHECK(want);
        }
    }
    ProblemInstance k1 = builtin("kdv1");
    CHECK(k1.b_from_metric);
    CHECK(k1.expected.count("cor2") == 1);
    CHECK(k1.expected.count("ferapontov-mokhov") == 1);
    CHECK(k1.system.W(2) == expr("6*u1*u2"));
    CHECK(builtin("kdv2").expected.count("thmcomp") == 1);
    CHECK(builtin("threewave").parameters == std::vector<std::string>{"c1", "c2", "c3"});
    CHECK_THROWS_AS(builtin("kdv3"), Error);
}

TEST_CASE("golden suite")
{
    for (const auto& n : builtin_names()) {
        SuiteResult r = run_suite(builtin(n), ConditionForm::Corrected);
        CHECK_MESSAGE(r.all_match() == (n != "twowave"), n);
    }
}

TEST_CASE("serialization round-trip")
{
    for (const auto& n : builtin_names()) {
        ProblemInstance p = builtin(n);
        std::string text = serialize_problem(p);
        CHECK(parse_problem(text) == p);
        CHECK(serialize_problem(parse_problem(text)) == text);
    }
    auto path = scratch_file("threewave.json");
    save(builtin("threewave"), path);
    CHECK(load(path) == builtin("threewave"));
    CHECK(resolve(path.string()) == builtin("threewave"));
    CHECK(resolve("kdv2") == builtin("kdv2"));
}

TEST_CASE("problem files: errors")
{
    CHECK_NOTHROW(parse_problem(minimal(R"([["0","0"],["0","0"]])")));
    // 3x3 system against a 2x2 operator
    CHECK_THROWS_AS(parse_problem(minimal(R"([["0","0","0"],["0","0","0"],["0","0","0"]])")), DimensionMismatch);

    try {
        parse_problem(minimal(R"([["0","0"],["2u1","0"]])"));
        FAIL("expected a load error");
    } catch (const LoadError& e) {
        CHECK(std::string(e.what()) == "V[1][0]: parse error at position 1: implicit multiplication is not allowed; use '*'");
    }
    CHECK_THROWS_AS(parse_problem(minimal(R"([["0","0"],["u3","0"]])")), LoadError);
    CHECK_THROWS_AS(parse_problem("{"), LoadError);
    CHECK_THROWS_AS(parse_problem("[]"), LoadError);
    CHECK_THROWS_AS(parse_problem(R"({"format": "other"})"), LoadError);
    // curved metric cannot supply b
    CHECK_THROWS_AS(parse_problem(minimal(R"([["0","0"],["0","0"]])", R"([["u2^2","0"],["0","u2^2"]])")), LoadError);
    CHECK_THROWS_AS(load(scratch_file("missing.json")), LoadError);
    CHECK_THROWS_AS(resolve("no-such-problem"), Error);
}
