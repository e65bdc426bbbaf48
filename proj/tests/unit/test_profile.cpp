#include <doctest.h>

#include <algorithm>

#include "qxpress/error.hpp"
#include "qxpress/lexer.hpp"
#include "qxpress/profile.hpp"
#include "test_support.hpp"

using namespace qxpress;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::io;
}

}  // namespace

TEST_CASE("builtin registry holds exactly the six profiles") {
    const auto reg = builtin_profiles();
    CHECK(reg.size() == 6);
    CHECK(reg.ids() == std::vector<std::string>{"cirq", "qiskit", "qmod", "qrisp", "qsharp", "quapl"});
}

TEST_CASE("construct sets") {
    const auto reg = builtin_profiles();
    const std::set<std::string> python{"if",   "elif", "for",  "while", "except", "with",   "assert",
                                       "list", "set",  "dict", "and",   "or",     "on_each"};
    CHECK(reg.lookup("qiskit").cc_constructs == python);
    CHECK(reg.lookup("cirq").cc_constructs == python);
    CHECK(reg.lookup("qrisp").cc_constructs == reg.lookup("qiskit").cc_constructs);
    CHECK(reg.lookup("qmod").cc_constructs ==
          std::set<std::string>{"if", "else", "repeat", "within", "apply", "lambda", "and", "or", "on_each"});
    CHECK(reg.lookup("qsharp").cc_constructs ==
          std::set<std::string>{"if", "elif", "for", "ApplyToEachA", "MeasureEachZ", "try", "catch",
                                "repeat", "until"});
    CHECK(reg.lookup("qsharp").cc_constructs.count("until") == 1);

    const auto& apl = reg.lookup("quapl");
    CHECK(apl.cc_constructs == std::set<std::string>{":If", ":ElseIf", ":For", ":While", ":Repeat",
                                                     ":Select", ":Trap", "¨", ":"});
    CHECK(std::find(apl.notes.begin(), apl.notes.end(), "quAPL constructs: local default") != apl.notes.end());
}

TEST_CASE("unknown id is an error, never a default") {
    const auto reg = builtin_profiles();
    CHECK(code_of([&] { reg.lookup("fortran"); }) == ErrorCode::unknown_profile);
    CHECK_FALSE(reg.contains("fortran"));
}

TEST_CASE("resolve_profile") {
    const auto reg = builtin_profiles();
    CHECK(resolve_profile(reg, "qmod", "x.qmod").id == "qmod");
    CHECK(resolve_profile(reg, "qmod", "x.py").id == "qmod");
    CHECK(resolve_profile(reg, "auto", "grover.qs").id == "qsharp");
    CHECK(resolve_profile(reg, "auto", "dir/Grover.QS").id == "qsharp");
    CHECK(resolve_profile(reg, "auto", "grover.aplf").id == "quapl");
    CHECK(code_of([&] { resolve_profile(reg, "auto", "main.rs"); }) == ErrorCode::no_matching_language);
    CHECK(code_of([&] { resolve_profile(reg, "nope", "x.qs"); }) == ErrorCode::unknown_profile);

    try {
        resolve_profile(reg, "auto", "grover.py");
        FAIL("expected ambiguity");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ambiguous_language);
        const std::string msg = e.what();
        CHECK(msg.find("{cirq, qiskit, qrisp}") != std::string::npos);
    }
}

TEST_CASE("registration is idempotent and rejects conflicting ids") {
    auto reg = builtin_profiles();
    const LanguageProfile qmod = reg.lookup("qmod");
    reg.add(qmod);
    CHECK(reg.size() == 6);

    LanguageProfile changed = qmod;
    changed.cc_constructs.erase("lambda");
    CHECK(code_of([&] { reg.add(changed); }) == ErrorCode::invalid_profile);
    reg.replace(changed);
    CHECK(reg.lookup("qmod").cc_constructs.count("lambda") == 0);
}

TEST_CASE("every builtin construct lexes as a single token in code position") {
    const auto reg = builtin_profiles();
    for (const auto& id : reg.ids()) {
        const auto& p = reg.lookup(id);
        for (const auto& c : p.cc_constructs) {
            CAPTURE(id);
            CAPTURE(c);
            // list/set/dict stand for comprehensions; their words still lex alone
            const auto stream = tokenize_text(c, p);
            REQUIRE(stream.tokens.size() == 1);
            CHECK(stream.tokens.front().lexeme == c);
        }
    }
}

TEST_CASE("a construct the lexer cannot emit is rejected") {
    auto reg = builtin_profiles();
    LanguageProfile p = reg.lookup("qmod");
    p.cc_constructs.insert("if else");
    CHECK(code_of([&] { reg.replace(p); }) == ErrorCode::invalid_profile);
}

TEST_CASE("profile overrides") {
    auto reg = builtin_profiles();
    apply_profile_overrides(reg, R"({"quapl": {"cc_constructs": [":If", ":For"],
                                               "comment_markers": ["⍝", ["{{", "}}"]]}})");
    const auto& apl = reg.lookup("quapl");
    CHECK(apl.cc_constructs == std::set<std::string>{":If", ":For"});
    CHECK(apl.comment_markers.line == std::vector<std::string>{"⍝"});
    REQUIRE(apl.comment_markers.block.size() == 1);
    CHECK(apl.comment_markers.block.front().open == "{{");

    SUBCASE("unknown key") {
        CHECK(code_of([&] { apply_profile_overrides(reg, R"({"qmod": {"colour": 1}})"); }) ==
              ErrorCode::invalid_profile);
    }
    SUBCASE("unknown profile") {
        CHECK(code_of([&] { apply_profile_overrides(reg, R"({"cobol": {}})"); }) ==
              ErrorCode::unknown_profile);
    }
    SUBCASE("malformed document") {
        CHECK(code_of([&] { apply_profile_overrides(reg, "{"); }) == ErrorCode::invalid_profile);
        CHECK(code_of([&] { apply_profile_overrides(reg, R"({"qmod": {"cc_constructs": "if"}})"); }) ==
              ErrorCode::invalid_profile);
    }
    SUBCASE("failed override leaves the registry untouched") {
        const auto before = reg.lookup("qmod");
        CHECK_THROWS_AS(apply_profile_overrides(
                            reg, R"({"qmod": {"cc_constructs": ["if"]}, "qsharp": {"bad": 1}})"),
                        Error);
        CHECK(reg.lookup("qmod") == before);
    }
}

TEST_CASE("override file") {
    test::TempDir dir;
    test::write_file(dir / "o.json", R"({"qsharp": {"operator_lexemes": ["+", ";"]}})");
    auto reg = builtin_profiles();
    apply_profile_overrides_file(reg, dir / "o.json");
    CHECK(reg.lookup("qsharp").operator_lexemes == std::set<std::string>{"+", ";"});
    CHECK(code_of([&] { apply_profile_overrides_file(reg, dir / "missing.json"); }) == ErrorCode::io);
}

TEST_CASE("describe_profile exposes the rule set") {
    const auto reg = builtin_profiles();
    const std::string text = describe_profile(reg.lookup("qmod"));
    CHECK(text.find("\"within\"") != std::string::npos);
    CHECK(text.find("\"apply\"") != std::string::npos);
    CHECK(text.find("\"/*\"") != std::string::npos);
}
