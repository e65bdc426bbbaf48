#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "qxpress/cli.hpp"
#include "test_support.hpp"

using namespace qxpress;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string handcount(const char* name) { return (test::fixtures_dir() / "handcount" / name).string(); }

}  // namespace

TEST_CASE("profiles list and show") {
    const auto list = run({"profiles", "list"});
    CHECK(list.code == 0);
    std::size_t lines = 0;
    for (const char c : list.out) lines += c == '\n';
    CHECK(lines == 6);

    const auto show = run({"profiles", "show", "qmod"});
    CHECK(show.code == 0);
    CHECK(show.out.find("within") != std::string::npos);
    CHECK(show.out.find("apply") != std::string::npos);

    const auto nope = run({"profiles", "show", "nope"});
    CHECK(nope.code == 2);
    CHECK(nope.out.empty());
    CHECK(nope.err.find("nope") != std::string::npos);
}

TEST_CASE("analyze") {
    SUBCASE("json report for a Q# file") {
        test::TempDir dir;
        test::write_file(dir / "grover.qs", "operation G() : Unit { if true { H(q); } }\n");
        const auto r = run({"analyze", (dir / "grover.qs").string(), "--lang", "qsharp"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j.contains("cc"));
        CHECK(j.contains("loc"));
        CHECK(j.at("halstead").contains("effort"));
        CHECK(j.at("algorithm") == "grover");
        CHECK(j.at("cc") == 2);
    }
    SUBCASE("hand-counted qmod fixture") {
        const auto r = run({"analyze", handcount("handcount.qmod"), "--lang", "qmod"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j.at("loc") == 11);
        CHECK(j.at("cc") == 7);
        CHECK(j.at("halstead").at("n1") == 25);
        CHECK(j.at("halstead").at("n2") == 10);
        CHECK(j.at("halstead").at("N1") == 55);
        CHECK(j.at("halstead").at("N2") == 25);
    }
    SUBCASE("ambiguous extension exits 2") {
        test::TempDir dir;
        test::write_file(dir / "a.py", "x = 1\n");
        const auto r = run({"analyze", (dir / "a.py").string()});
        CHECK(r.code == 2);
        CHECK(r.err.find("cirq, qiskit, qrisp") != std::string::npos);
    }
    SUBCASE("usage errors exit 2") {
        CHECK(run({"analyze", "/no/such/file.qs"}).code == 2);
        CHECK(run({"analyze", handcount("handcount.qs"), "--lang", "fortran"}).code == 2);
        CHECK(run({"analyze", handcount("handcount.qs"), "--format", "xml"}).code == 2);
        CHECK(run({"analyze"}).code == 2);
        CHECK(run({}).code == 2);
        CHECK(run({"frobnicate"}).code == 2);
    }
    SUBCASE("analysis errors exit 1") {
        test::TempDir dir;
        test::write_file(dir / "bad.qs", "let s = \"open;\n");
        test::write_file(dir / "enc.qs", "let s = 1; \xC3\x28\n");
        const auto lexical = run({"analyze", (dir / "bad.qs").string()});
        CHECK(lexical.code == 1);
        CHECK(lexical.err.find("bad.qs:1:9") != std::string::npos);
        const auto encoding = run({"analyze", (dir / "enc.qs").string()});
        CHECK(encoding.code == 1);
        CHECK(encoding.err.find("enc.qs") != std::string::npos);
    }
    SUBCASE("csv and markdown") {
        CHECK(run({"analyze", handcount("handcount.qs"), "--format", "csv"}).out.starts_with("unit_name,"));
        CHECK(run({"analyze", handcount("handcount.qs"), "--format", "md"}).out.starts_with("| Field |"));
    }
    SUBCASE("--out respects --force") {
        test::TempDir dir;
        const auto target = (dir / "r.json").string();
        CHECK(run({"analyze", handcount("handcount.qs"), "--out", target}).code == 0);
        CHECK(run({"analyze", handcount("handcount.qs"), "--out", target}).code == 2);
        CHECK(run({"analyze", handcount("handcount.qs"), "--out", target, "--force"}).code == 0);
    }
    SUBCASE("help exits 0") {
        const auto r = run({"--help"});
        CHECK(r.code == 0);
        CHECK(r.out.find("analyze") != std::string::npos);
    }
}

TEST_CASE("profile overrides from a flag or the environment") {
    test::TempDir dir;
    test::write_file(dir / "o.json", R"({"qmod": {"cc_constructs": ["if"]}})");
    test::write_file(dir / "bad.json", R"({"qmod": {"nonsense": []}})");
    const auto fixture = handcount("handcount.qmod");

    const auto base = nlohmann::json::parse(run({"analyze", fixture, "--lang", "qmod"}).out);
    const auto over = run({"--profiles", (dir / "o.json").string(), "analyze", fixture, "--lang", "qmod"});
    REQUIRE(over.code == 0);
    CHECK(nlohmann::json::parse(over.out).at("cc").get<int>() < base.at("cc").get<int>());

    CHECK(run({"--profiles", (dir / "bad.json").string(), "profiles", "list"}).code == 2);
    CHECK(run({"--profiles", (dir / "missing.json").string(), "profiles", "list"}).code == 2);

    ::setenv("QXPRESS_PROFILE_OVERRIDES", (dir / "o.json").string().c_str(), 1);
    const auto env = run({"analyze", fixture, "--lang", "qmod"});
    ::unsetenv("QXPRESS_PROFILE_OVERRIDES");
    REQUIRE(env.code == 0);
    CHECK(nlohmann::json::parse(env.out).at("cc") == nlohmann::json::parse(over.out).at("cc"));
}

TEST_CASE("corpus run on the bundled manifest") {
    test::TempDir dir;
    const auto out = (dir / "out").string();
    const auto r = run({"corpus", "run", "--out", out, "--emit", "tables", "--jobs", "4"});
    REQUIRE(r.code == 0);
    std::size_t tables = 0;
    for (const auto& e : std::filesystem::directory_iterator(out)) tables += e.path().extension() == ".csv";
    CHECK(tables == 11);
    CHECK(std::filesystem::exists(dir / "out" / "loc.md"));
    CHECK(std::filesystem::exists(dir / "out" / "effort.json"));
    CHECK_FALSE(std::filesystem::exists(dir / "out" / "charts"));

    const auto summary = test::read_file(dir / "out" / "summary.txt");
    CHECK(summary.find("units analysed: 24") != std::string::npos);
    CHECK(summary.find("excluded units:") != std::string::npos);

    // refuses to overwrite without --force
    CHECK(run({"corpus", "run", "--out", out, "--emit", "tables"}).code == 2);
    CHECK(run({"corpus", "run", "--out", out, "--emit", "tables", "--force"}).code == 0);
}

TEST_CASE("corpus run: charts and json") {
    test::TempDir dir;
    const auto r = run({"corpus", "run", "--out", (dir / "o").string(), "--emit", "charts,json"});
    REQUIRE(r.code == 0);
    CHECK(std::filesystem::exists(dir / "o" / "reports.json"));
    CHECK(std::filesystem::exists(dir / "o" / "charts" / "radar.svg"));
    CHECK(std::filesystem::exists(dir / "o" / "charts" / "scatter_loc_cc.svg"));
    CHECK(test::xml_problem(test::read_file(dir / "o" / "charts" / "loc_by_algorithm.svg")) == "");
    CHECK(nlohmann::json::parse(test::read_file(dir / "o" / "reports.json")).size() == 24);
}

TEST_CASE("corpus run: failures") {
    test::TempDir dir;
    SUBCASE("corrupt manifest exits 1 before any analysis") {
        test::write_file(dir / "corpus.json", "{ not json");
        const auto r = run({"corpus", "run", "--manifest", (dir / "corpus.json").string(), "--out",
                            (dir / "o").string()});
        CHECK(r.code == 1);
        CHECK_FALSE(std::filesystem::exists(dir / "o"));
    }
    SUBCASE("a failing unit exits 1 after the rest are written") {
        test::write_file(dir / "ok.qs", "let a = 1;\n");
        test::write_file(dir / "bad.qs", "let s = \"open;\n");
        test::write_file(dir / "corpus.json", R"({"units": [
            {"unit_name": "bad", "language_id": "qsharp", "algorithm_id": "simon", "files": ["bad.qs"]},
            {"unit_name": "ok", "language_id": "qsharp", "algorithm_id": "grover", "files": ["ok.qs"]}]})");
        const auto r = run({"corpus", "run", "--manifest", (dir / "corpus.json").string(), "--out",
                            (dir / "o").string()});
        CHECK(r.code == 1);
        CHECK(r.err.find("bad") != std::string::npos);
        CHECK(test::read_file(dir / "o" / "loc.csv") == "language,grover\nqsharp,1\n");
        CHECK(test::read_file(dir / "o" / "summary.txt").find("units failed: 1") != std::string::npos);
    }
    SUBCASE("bad arguments exit 2") {
        CHECK(run({"corpus", "run"}).code == 2);
        CHECK(run({"corpus", "run", "--out", (dir / "o").string(), "--emit", "pdf"}).code == 2);
        CHECK(run({"corpus", "run", "--out", (dir / "o").string(), "--jobs", "0"}).code == 2);
        CHECK(run({"corpus"}).code == 2);
    }
}

TEST_CASE("corpus ingest") {
    test::TempDir dir;
    test::write_file(dir / "src" / "grover.py", "x = 1\n");
    test::write_file(dir / "src" / "simon.py", "y = 2\n");
    const auto src = (dir / "src").string();

    const auto ambiguous = run({"corpus", "ingest", src});
    CHECK(ambiguous.code == 2);
    CHECK(ambiguous.err.find("cirq") != std::string::npos);

    const auto manifest = (dir / "m" / "corpus.json").string();
    const auto ok = run({"corpus", "ingest", src, "--rule", "*.py=cirq:file", "--out", manifest});
    REQUIRE(ok.code == 0);
    const auto run_result = run({"corpus", "run", "--manifest", manifest, "--out", (dir / "o").string()});
    CHECK(run_result.code == 0);
    CHECK(test::read_file(dir / "o" / "loc.csv") == "language,simon,grover\ncirq,1,1\n");

    CHECK(run({"corpus", "ingest", src, "--rule", "nonsense"}).code == 2);
    CHECK(run({"corpus", "ingest", src, "--rule", "*.py=cirq:bogus"}).code == 2);
    CHECK(run({"corpus", "ingest", (dir / "none").string()}).code == 2);
}
