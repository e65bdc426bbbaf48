#include "qxpress/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "qxpress/corpus.hpp"
#include "qxpress/error.hpp"
#include "qxpress/metrics.hpp"
#include "qxpress/profile.hpp"
#include "qxpress/report.hpp"

namespace qxpress::cli {

namespace fs = std::filesystem;

namespace {

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::unknown_profile:
        case ErrorCode::ambiguous_language:
        case ErrorCode::no_matching_language:
        case ErrorCode::invalid_profile:
            return usage_error;
        default:
            return analysis_failure;
    }
}

void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::io, "cannot write " + path.string());
    f << content;
    if (!f) throw Error(ErrorCode::io, "write failed for " + path.string());
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

struct Global {
    std::string profiles;
    bool verbose = false;
};

struct AnalyzeArgs {
    std::vector<std::string> paths;
    std::string lang = "auto";
    std::string unit;
    std::string algorithm;
    std::string format = "json";
    std::string out;
    bool force = false;
};

struct RunArgs {
    std::string manifest;
    std::string out;
    std::string emit = "tables,charts,json";
    unsigned jobs = 1;
    bool force = false;
};

struct IngestArgs {
    std::string root;
    std::vector<std::string> rules;
    std::string out;
    bool force = false;
};

int cmd_analyze(const AnalyzeArgs& a, const ProfileRegistry& registry, std::ostream& out,
                std::ostream& err) {
    for (const auto& p : a.paths) {
        if (!fs::is_regular_file(p)) {
            err << "qxpress: no such file: " << p << "\n";
            return usage_error;
        }
    }
    if (!a.out.empty() && fs::exists(a.out) && !a.force) {
        err << "qxpress: " << a.out << " exists; pass --force to overwrite\n";
        return usage_error;
    }

    const LanguageProfile* profile = nullptr;
    for (const auto& p : a.paths) {
        const LanguageProfile& candidate = resolve_profile(registry, a.lang, p);
        if (profile != nullptr && profile->id != candidate.id) {
            throw Error(ErrorCode::ambiguous_language,
                        "files resolve to different languages (" + profile->id + ", " +
                            candidate.id + "); pass --lang");
        }
        profile = &candidate;
    }

    const std::string stem = fs::path(a.paths.front()).stem().string();
    std::string algorithm = a.algorithm;
    if (algorithm.empty()) algorithm = canonical_algorithm_id(stem).value_or(stem);
    const std::string unit_name = a.unit.empty() ? stem : a.unit;

    std::vector<fs::path> paths(a.paths.begin(), a.paths.end());
    const auto unit = load_source_unit(unit_name, profile->id, paths);
    const auto report = analyze_unit(unit, *profile, algorithm);
    const std::string text = render_report(report, *parse_table_format(a.format));
    if (a.out.empty()) {
        out << text;
    } else {
        write_file(a.out, text);
    }
    return ok;
}

std::string summary_text(const CorpusManifest& manifest, const CorpusAnalysis& analysis,
                         const std::vector<ComparisonTable>& tables) {
    std::map<std::string, std::string> provenance;
    for (const auto& u : manifest.units) provenance[u.unit_name] = u.provenance;
    const auto cmp = compare_with_reference(analysis.reports, provenance);

    std::ostringstream s;
    s << "units in manifest: " << manifest.units.size() << "\n";
    s << "units analysed: " << analysis.reports.size() << "\n";
    s << "units failed: " << analysis.failures.size() << "\n";
    for (const auto& f : analysis.failures) s << "  " << f.unit_name << ": " << f.message << "\n";

    s << "\nreference comparison (loc, cc; paper-repo units only)\n";
    s << "  cells compared: " << cmp.cells.size() << "\n";
    std::size_t mismatches = 0;
    for (const auto& c : cmp.cells) {
        if (c.match) continue;
        ++mismatches;
        s << "  mismatch " << c.metric_id << " " << c.language << "/" << c.algorithm
          << ": expected " << c.expected << ", got " << c.actual << "\n";
    }
    s << "  mismatches: " << mismatches << "\n";
    s << "  excluded units: " << cmp.excluded.size() << "\n";
    for (const auto& name : cmp.excluded) {
        const auto it = provenance.find(name);
        s << "    " << name << " (provenance: "
          << (it == provenance.end() ? std::string("unknown") : it->second) << ")\n";
    }

    s << "\nlanguages by mean (descending)\n";
    for (const auto& t : tables) {
        if (t.metric_id != "loc" && t.metric_id != "cc" && t.metric_id != "volume" &&
            t.metric_id != "effort") {
            continue;
        }
        s << "  " << t.metric_id << ":";
        for (const auto& lang : order_by_mean(t)) s << " " << lang << "=" << format_real(*t.mean(lang));
        s << "\n";
    }
    return s.str();
}

int cmd_corpus_run(const RunArgs& a, const Global& g, const ProfileRegistry& registry,
                   std::ostream& out, std::ostream& err) {
    std::set<std::string> emit;
    for (const auto& item : split(a.emit, ',')) {
        if (item != "tables" && item != "charts" && item != "json") {
            err << "qxpress: unknown --emit item '" << item << "' (expected tables, charts, json)\n";
            return usage_error;
        }
        emit.insert(item);
    }

    const fs::path manifest_path =
        a.manifest.empty() ? bundled_corpus_dir() / "corpus.json" : fs::path(a.manifest);
    CorpusManifest manifest;
    try {
        manifest = load_manifest(manifest_path, registry);
    } catch (const Error& e) {
        err << "qxpress: " << e.what() << "\n";
        return analysis_failure;
    }

    const fs::path root(a.out);
    const auto charts = standard_charts();
    std::vector<fs::path> planned;
    if (emit.count("tables")) {
        for (const auto& id : metric_ids()) {
            for (const auto f : {TableFormat::csv, TableFormat::json, TableFormat::markdown}) {
                planned.push_back(root / (id + file_extension(f)));
            }
        }
    }
    if (emit.count("charts")) {
        for (const auto& c : charts) planned.push_back(root / "charts" / (c.name + ".svg"));
    }
    if (emit.count("json")) planned.push_back(root / "reports.json");
    planned.push_back(root / "summary.txt");
    if (!a.force) {
        for (const auto& p : planned) {
            if (fs::exists(p)) {
                err << "qxpress: " << p.string() << " exists; pass --force to overwrite\n";
                return usage_error;
            }
        }
    }

    if (g.verbose) {
        err << "analysing " << manifest.units.size() << " units with " << a.jobs << " job(s)\n";
    }
    const auto analysis = analyze_corpus(manifest, registry, a.jobs);
    for (const auto& f : analysis.failures) {
        err << "qxpress: unit '" << f.unit_name << "' failed: " << f.message << "\n";
    }

    const auto tables = aggregate(analysis.reports);
    if (emit.count("tables")) {
        for (const auto& t : tables) {
            for (const auto f : {TableFormat::csv, TableFormat::json, TableFormat::markdown}) {
                write_file(root / (t.metric_id + file_extension(f)), render_table(t, f));
            }
        }
    }
    if (emit.count("charts")) {
        for (const auto& c : charts) {
            write_file(root / "charts" / (c.name + ".svg"), render_chart(c, tables));
        }
    }
    if (emit.count("json")) write_file(root / "reports.json", reports_to_json(analysis.reports));
    const std::string summary = summary_text(manifest, analysis, tables);
    write_file(root / "summary.txt", summary);
    if (g.verbose) out << summary;

    return analysis.failures.empty() ? ok : analysis_failure;
}

IngestRule parse_rule(const std::string& text) {
    const auto eq = text.rfind('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == text.size()) {
        throw CLI::ValidationError("--rule", "expected GLOB=LANGUAGE[:file|unit], got '" + text + "'");
    }
    IngestRule rule;
    rule.pattern = text.substr(0, eq);
    const auto parts = split(std::string_view(text).substr(eq + 1), ':');
    rule.language = parts[0];
    if (parts.size() > 2) {
        throw CLI::ValidationError("--rule", "too many ':' in '" + text + "'");
    }
    if (parts.size() == 2) {
        if (parts[1] == "file") {
            rule.grouping = UnitGrouping::per_file;
        } else if (parts[1] == "unit") {
            rule.grouping = UnitGrouping::per_match;
        } else {
            throw CLI::ValidationError("--rule", "grouping must be 'file' or 'unit' in '" + text + "'");
        }
    }
    return rule;
}

int cmd_corpus_ingest(const IngestArgs& a, const ProfileRegistry& registry, std::ostream& out,
                      std::ostream& err) {
    if (!fs::is_directory(a.root)) {
        err << "qxpress: not a directory: " << a.root << "\n";
        return usage_error;
    }
    std::vector<IngestRule> rules;
    for (const auto& r : a.rules) rules.push_back(parse_rule(r));
    if (!a.out.empty() && fs::exists(a.out) && !a.force) {
        err << "qxpress: " << a.out << " exists; pass --force to overwrite\n";
        return usage_error;
    }

    CorpusManifest manifest;
    try {
        manifest = ingest_directory(a.root, rules, registry);
    } catch (const Error& e) {
        err << "qxpress: " << e.what() << "\n";
        return usage_error;
    }
    if (a.out.empty()) {
        out << write_manifest(manifest, fs::current_path());
    } else {
        const fs::path base = fs::absolute(a.out).parent_path();
        write_file(a.out, write_manifest(manifest, base));
    }
    return ok;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Code metrics (LOC, cyclomatic complexity, Halstead) for quantum programs",
                 "qxpress"};
    app.require_subcommand(1);
    Global g;
    app.add_option("--profiles", g.profiles, "JSON file with language profile overrides")
        ->envname("QXPRESS_PROFILE_OVERRIDES")
        ->check(CLI::ExistingFile);
    app.add_flag("-v,--verbose", g.verbose, "Progress on standard error");

    AnalyzeArgs analyze_args;
    auto* analyze = app.add_subcommand("analyze", "Analyse the given files as one unit");
    analyze->add_option("paths", analyze_args.paths, "Source files of the unit")->required();
    analyze->add_option("--lang", analyze_args.lang, "Language profile id or 'auto'")
        ->capture_default_str();
    analyze->add_option("--unit", analyze_args.unit, "Unit name (default: first file's stem)");
    analyze->add_option("--algorithm", analyze_args.algorithm,
                        "Algorithm id (default: derived from the file name)");
    analyze->add_option("--format", analyze_args.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "md", "markdown"}))
        ->capture_default_str();
    analyze->add_option("--out", analyze_args.out, "Write to this file instead of stdout");
    analyze->add_flag("--force", analyze_args.force, "Overwrite an existing --out file");

    auto* corpus = app.add_subcommand("corpus", "Corpus-wide runs and manifest tools");
    corpus->require_subcommand(1);

    RunArgs run_args;
    auto* run = corpus->add_subcommand("run", "Analyse every unit of a manifest and write tables and charts");
    run->add_option("--manifest", run_args.manifest, "Manifest path (default: bundled corpus)");
    run->add_option("--out", run_args.out, "Output directory")->required();
    run->add_option("--emit", run_args.emit, "Comma-separated subset of tables,charts,json")
        ->capture_default_str();
    run->add_option("--jobs,-j", run_args.jobs, "Units analysed concurrently")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    run->add_flag("--force", run_args.force, "Overwrite existing output files");

    IngestArgs ingest_args;
    auto* ingest = corpus->add_subcommand("ingest", "Build a manifest from a directory tree");
    ingest->add_option("root", ingest_args.root, "Directory to walk")->required();
    ingest->add_option("--rule", ingest_args.rules,
                       "GLOB=LANGUAGE[:file|unit]; first matching rule wins");
    ingest->add_option("--out", ingest_args.out, "Manifest file (default: stdout)");
    ingest->add_flag("--force", ingest_args.force, "Overwrite an existing --out file");

    auto* profiles = app.add_subcommand("profiles", "Inspect language profiles");
    profiles->require_subcommand(1);
    auto* list = profiles->add_subcommand("list", "List profile ids");
    std::string show_id;
    auto* show = profiles->add_subcommand("show", "Print one profile's rule set as JSON");
    show->add_option("id", show_id, "Profile id")->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        ProfileRegistry registry = builtin_profiles();
        try {
            if (!g.profiles.empty()) apply_profile_overrides_file(registry, g.profiles);
        } catch (const Error& e) {
            err << "qxpress: " << e.what() << "\n";
            return usage_error;
        }

        if (analyze->parsed()) return cmd_analyze(analyze_args, registry, out, err);
        if (run->parsed()) return cmd_corpus_run(run_args, g, registry, out, err);
        if (ingest->parsed()) return cmd_corpus_ingest(ingest_args, registry, out, err);
        if (list->parsed()) {
            for (const auto& id : registry.ids()) {
                out << id << "\t" << registry.lookup(id).display_name << "\n";
            }
            return ok;
        }
        if (show->parsed()) {
            out << describe_profile(registry.lookup(show_id));
            return ok;
        }
    } catch (const CLI::ValidationError& e) {
        err << "qxpress: " << e.what() << "\n";
        return usage_error;
    } catch (const Error& e) {
        err << "qxpress: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "qxpress: " << e.what() << "\n";
        return analysis_failure;
    }
    return usage_error;
}

}  // namespace qxpress::cli
