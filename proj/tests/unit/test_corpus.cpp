#include <doctest.h>

#include <algorithm>
#include <random>

#include "qxpress/corpus.hpp"
#include "qxpress/error.hpp"
#include "test_support.hpp"

using namespace qxpress;

namespace {

const ProfileRegistry& registry() {
    static const ProfileRegistry reg = builtin_profiles();
    return reg;
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::io;
}

std::string message_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

CorpusManifest bundled() { return load_manifest(test::corpus_dir() / "corpus.json", registry()); }

}  // namespace

TEST_CASE("algorithm ids") {
    CHECK(canonical_algorithms() ==
          std::vector<std::string>{"deutsch-jozsa", "bernstein-vazirani", "simon", "grover"});
    CHECK(canonical_algorithm_id("DeutschJozsa") == "deutsch-jozsa");
    CHECK(canonical_algorithm_id("deutsch_jozsa") == "deutsch-jozsa");
    CHECK(canonical_algorithm_id("BV") == "bernstein-vazirani");
    CHECK(canonical_algorithm_id("Grovers") == "grover");
    CHECK(canonical_algorithm_id("qft") == std::nullopt);
    CHECK(algorithm_rank("simon") == 2);
    CHECK(algorithm_rank("qft") == 4);
}

TEST_CASE("bundled manifest: 24 units, six languages by four algorithms") {
    const auto m = bundled();
    CHECK(m.units.size() == 24);
    std::set<std::pair<std::string, std::string>> cells;
    for (const auto& u : m.units) cells.emplace(u.language_id, u.algorithm_id);
    CHECK(cells.size() == 24);
    for (const auto& lang : registry().ids()) {
        for (const auto& alg : canonical_algorithms()) CHECK(cells.count({lang, alg}) == 1);
    }
}

TEST_CASE("bundled units declare the benchmark parameters and a provenance") {
    const auto m = bundled();
    for (const auto& u : m.units) {
        CAPTURE(u.unit_name);
        CHECK(u.parameters == standard_parameters(u.algorithm_id));
        CHECK((u.provenance == provenance_paper_repo || u.provenance == provenance_reauthored));
        for (const auto& f : u.files) {
            const auto p = m.corpus_root / f;
            CHECK(std::filesystem::is_regular_file(p));
            const auto perms = std::filesystem::status(p).permissions();
            CHECK((perms & std::filesystem::perms::owner_exec) == std::filesystem::perms::none);
        }
    }
    CHECK(standard_parameters("bernstein-vazirani").at("hidden_bitstring") == "1101");
    CHECK(standard_parameters("simon").at("hidden_bitstring") == "101");
    CHECK(standard_parameters("grover").at("iterations") == "2");
    CHECK(standard_parameters("grover").at("marked_state") == "101");
    CHECK(standard_parameters("deutsch-jozsa").at("data_qubits") == "3");
    CHECK(standard_parameters("deutsch-jozsa").at("ancilla_qubits") == "1");

    const auto qmod_grover = std::find_if(m.units.begin(), m.units.end(), [](const ManifestUnit& u) {
        return u.language_id == "qmod" && u.algorithm_id == "grover";
    });
    REQUIRE(qmod_grover != m.units.end());
    CHECK_FALSE(qmod_grover->provenance.empty());
}

TEST_CASE("bundled corpus analyses without errors, independent of unit order") {
    auto m = bundled();
    const auto first = analyze_corpus(m, registry(), 1);
    CHECK(first.failures.empty());
    CHECK(first.reports.size() == 24);

    std::mt19937 rng(7);
    std::shuffle(m.units.begin(), m.units.end(), rng);
    const auto second = analyze_corpus(m, registry(), 3);
    CHECK(second.failures.empty());
    for (const auto& r : first.reports) {
        const auto it = std::find_if(second.reports.begin(), second.reports.end(),
                                     [&](const MetricsReport& o) { return o.unit_name == r.unit_name; });
        REQUIRE(it != second.reports.end());
        CHECK(*it == r);
    }
    // reports follow manifest order
    for (std::size_t i = 0; i < m.units.size(); ++i) CHECK(second.reports[i].unit_name == m.units[i].unit_name);
}

TEST_CASE("paper-repo units reproduce the reference cells") {
    const auto m = bundled();
    const auto analysis = analyze_corpus(m, registry(), 2);
    std::size_t checked = 0;
    for (std::size_t i = 0; i < m.units.size(); ++i) {
        if (m.units[i].provenance != provenance_paper_repo) continue;
        const auto& r = analysis.reports[i];
        const auto& u = m.units[i];
        if (u.language_id == "qiskit" && u.algorithm_id == "deutsch-jozsa") CHECK(r.loc == 23);
        if (u.language_id == "qrisp" && u.algorithm_id == "bernstein-vazirani") CHECK(r.loc == 15);
        if (u.language_id == "qiskit" && u.algorithm_id == "grover") {
            CHECK(r.loc == 44);
            CHECK(r.cc == 8);
        }
        if (u.language_id == "qmod" && u.algorithm_id == "grover") CHECK(r.cc == 2);
        ++checked;
    }
    MESSAGE(checked << " paper-repo units checked");
}

TEST_CASE("manifest validation") {
    test::TempDir dir;
    test::write_file(dir / "a.qs", "let a = 1;\n");
    test::write_file(dir / "b.qs", "let b = 2;\n");
    const auto unit = [](std::string name, std::string lang, std::string alg, std::string file) {
        return R"({"unit_name": ")" + name + R"(", "language_id": ")" + lang + R"(", "algorithm_id": ")" +
               alg + R"(", "files": [")" + file + R"("]})";
    };

    SUBCASE("valid") {
        const auto m = parse_manifest(R"({"units": [)" + unit("a", "qsharp", "grover", "a.qs") + "]}",
                                      dir.path(), registry());
        CHECK(m.units.size() == 1);
        CHECK(m.corpus_root == dir.path().lexically_normal());
    }
    SUBCASE("missing file names the path") {
        const auto msg = message_of([&] {
            parse_manifest(R"({"units": [)" + unit("a", "qsharp", "grover", "nope.qs") + "]}", dir.path(),
                           registry());
        });
        CHECK(msg.find("nope.qs") != std::string::npos);
        CHECK(msg.find("/units/0/files/0") != std::string::npos);
        CHECK(code_of([&] {
                  parse_manifest(R"({"units": [)" + unit("a", "qsharp", "grover", "nope.qs") + "]}",
                                 dir.path(), registry());
              }) == ErrorCode::manifest_missing_file);
    }
    SUBCASE("duplicate cell") {
        const std::string doc = R"({"units": [)" + unit("qiskit/grover", "qsharp", "grover", "a.qs") + ", " +
                                unit("qiskit/grover2", "qsharp", "grover", "b.qs") + "]}";
        CHECK(code_of([&] { parse_manifest(doc, dir.path(), registry()); }) == ErrorCode::manifest_duplicate);
    }
    SUBCASE("duplicate unit name") {
        const std::string doc = R"({"units": [)" + unit("x", "qsharp", "grover", "a.qs") + ", " +
                                unit("x", "qsharp", "simon", "b.qs") + "]}";
        CHECK(code_of([&] { parse_manifest(doc, dir.path(), registry()); }) == ErrorCode::manifest_duplicate);
    }
    SUBCASE("unknown language") {
        CHECK(code_of([&] {
                  parse_manifest(R"({"units": [)" + unit("a", "fortran", "grover", "a.qs") + "]}",
                                 dir.path(), registry());
              }) == ErrorCode::unknown_profile);
    }
    SUBCASE("malformed") {
        CHECK(code_of([&] { parse_manifest("{", dir.path(), registry()); }) == ErrorCode::manifest_malformed);
        CHECK(code_of([&] { parse_manifest("[]", dir.path(), registry()); }) == ErrorCode::manifest_malformed);
        CHECK(code_of([&] { parse_manifest(R"({"units": [], "extra": 1})", dir.path(), registry()); }) ==
              ErrorCode::manifest_malformed);
        const auto msg = message_of([&] {
            parse_manifest(R"({"units": [{"unit_name": "a", "language_id": "qsharp", "files": ["a.qs"]}]})",
                           dir.path(), registry());
        });
        CHECK(msg.find("/units/0") != std::string::npos);
        CHECK(msg.find("algorithm_id") != std::string::npos);
    }
    SUBCASE("load_manifest reports a missing manifest") {
        CHECK(code_of([&] { load_manifest(dir / "none.json", registry()); }) ==
              ErrorCode::manifest_missing_file);
    }
}

TEST_CASE("manifest round trip") {
    const auto m = bundled();
    test::TempDir dir;
    const auto out = dir / "copy" / "corpus.json";
    test::write_file(out, write_manifest(m, out.parent_path()));
    const auto back = load_manifest(out, registry());
    CHECK(back == m);
}

TEST_CASE("glob matching") {
    CHECK(glob_match("*.qs", "a.qs"));
    CHECK_FALSE(glob_match("*.qs", "d/a.qs"));
    CHECK(glob_match("**/*.qs", "a.qs"));
    CHECK(glob_match("**/*.qs", "d/e/a.qs"));
    CHECK(glob_match("*/grover/**", "x/grover/a/b.py"));
    CHECK_FALSE(glob_match("*/grover/**", "x/simon/a.py"));
    CHECK(glob_match("g?over.py", "grover.py"));
    CHECK_FALSE(glob_match("g?over.py", "g/over.py"));
}

TEST_CASE("ingest: one .qs file per algorithm") {
    test::TempDir dir;
    for (const char* name : {"Grover.qs", "Simon.qs", "DeutschJozsa.qs", "BernsteinVazirani.qs", "README.md"}) {
        test::write_file(dir / name, "let x = 1;\n");
    }
    const auto m = ingest_directory(dir.path(), {}, registry());
    REQUIRE(m.units.size() == 4);
    std::vector<std::string> algs;
    for (const auto& u : m.units) {
        CHECK(u.language_id == "qsharp");
        CHECK(u.files.size() == 1);
        algs.push_back(u.algorithm_id);
    }
    CHECK(algs == canonical_algorithms());
    CHECK(m.units[3].unit_name == "qsharp/grover");
}

TEST_CASE("ingest: .py files without a rule are ambiguous") {
    test::TempDir dir;
    test::write_file(dir / "grover.py", "x = 1\n");
    CHECK(code_of([&] { ingest_directory(dir.path(), {}, registry()); }) == ErrorCode::ambiguous_language);
    const auto m = ingest_directory(dir.path(), {{"*.py", "cirq", UnitGrouping::per_file, ""}}, registry());
    REQUIRE(m.units.size() == 1);
    CHECK(m.units[0].language_id == "cirq");
}

TEST_CASE("ingest: nested grover directories grouped into one unit") {
    test::TempDir dir;
    test::write_file(dir / "impl" / "grover" / "oracle.py", "def oracle(q):\n    pass\n");
    test::write_file(dir / "impl" / "grover" / "main.py", "oracle(q)\n");
    test::write_file(dir / "impl" / "grover" / "util" / "diffuser.py", "def d(q):\n    pass\n");
    test::write_file(dir / "impl" / "simon" / "simon.py", "x = 1\n");
    const std::vector<IngestRule> rules{{"*/grover/**", "qiskit", UnitGrouping::per_match, ""},
                                        {"**/*.py", "qiskit", UnitGrouping::per_file, ""}};
    const auto m = ingest_directory(dir.path(), rules, registry());
    REQUIRE(m.units.size() == 2);
    CHECK(m.units[0].algorithm_id == "simon");
    CHECK(m.units[1].algorithm_id == "grover");
    CHECK(m.units[1].files == std::vector<std::string>{"impl/grover/main.py", "impl/grover/oracle.py",
                                                       "impl/grover/util/diffuser.py"});
    // the emitted manifest is loadable as is
    test::write_file(dir / "corpus.json", write_manifest(m, dir.path()));
    CHECK(load_manifest(dir / "corpus.json", registry()) == m);
}

TEST_CASE("analyze_corpus reports failing units and keeps going") {
    test::TempDir dir;
    test::write_file(dir / "ok.qs", "let a = 1;\n");
    test::write_file(dir / "bad.qs", "let s = \"open;\n");
    CorpusManifest m;
    m.corpus_root = dir.path();
    m.units.push_back({"bad", "qsharp", "simon", {"bad.qs"}, "", "", {}});
    m.units.push_back({"ok", "qsharp", "grover", {"ok.qs"}, "", "", {}});
    const auto a = analyze_corpus(m, registry(), 2);
    REQUIRE(a.failures.size() == 1);
    CHECK(a.failures[0].unit_name == "bad");
    CHECK(a.failures[0].message.find("bad.qs:1:9") != std::string::npos);
    REQUIRE(a.reports.size() == 1);
    CHECK(a.reports[0].unit_name == "ok");
}
