#include "qxpress/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qxpress/error.hpp"

#ifndef QXPRESS_CORPUS_DIR
#define QXPRESS_CORPUS_DIR "corpus"
#endif

namespace qxpress {

namespace fs = std::filesystem;
using nlohmann::json;

const std::vector<std::string>& canonical_algorithms() {
    static const std::vector<std::string> ids{
        std::string(algorithm::deutsch_jozsa), std::string(algorithm::bernstein_vazirani),
        std::string(algorithm::simon), std::string(algorithm::grover)};
    return ids;
}

std::size_t algorithm_rank(std::string_view algorithm_id) {
    const auto& ids = canonical_algorithms();
    const auto it = std::find(ids.begin(), ids.end(), algorithm_id);
    return static_cast<std::size_t>(it - ids.begin());
}

std::optional<std::string> canonical_algorithm_id(std::string_view name) {
    std::string key;
    for (const char c : name) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
    }
    static const std::vector<std::pair<std::string_view, std::string_view>> aliases{
        {"deutschjozsa", algorithm::deutsch_jozsa}, {"dj", algorithm::deutsch_jozsa},
        {"deutsch", algorithm::deutsch_jozsa},
        {"bernsteinvazirani", algorithm::bernstein_vazirani},
        {"bv", algorithm::bernstein_vazirani},
        {"simon", algorithm::simon}, {"simons", algorithm::simon},
        {"grover", algorithm::grover}, {"grovers", algorithm::grover},
        {"groversearch", algorithm::grover},
    };
    for (const auto& [alias, id] : aliases) {
        if (key == alias) return std::string(id);
    }
    return std::nullopt;
}

AlgorithmParameters standard_parameters(std::string_view algorithm_id) {
    if (algorithm_id == algorithm::deutsch_jozsa) {
        return {{"data_qubits", "3"}, {"ancilla_qubits", "1"}, {"oracles", "constant,balanced"}};
    }
    if (algorithm_id == algorithm::bernstein_vazirani) {
        return {{"data_qubits", "4"}, {"ancilla_qubits", "1"}, {"hidden_bitstring", "1101"}};
    }
    if (algorithm_id == algorithm::simon) {
        return {{"input_qubits", "3"}, {"ancilla_qubits", "3"}, {"hidden_bitstring", "101"}};
    }
    if (algorithm_id == algorithm::grover) {
        return {{"qubits", "3"}, {"iterations", "2"}, {"marked_state", "101"}};
    }
    return {};
}

namespace {

std::string read_file(const fs::path& path, ErrorCode code) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(code, "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

[[noreturn]] void malformed(const std::string& where, const std::string& what) {
    throw Error(ErrorCode::manifest_malformed, "manifest " + where + ": " + what);
}

std::string required_string(const json& obj, const char* key, const std::string& where) {
    const auto it = obj.find(key);
    if (it == obj.end()) malformed(where, std::string("missing key '") + key + "'");
    if (!it->is_string() || it->get<std::string>().empty()) {
        malformed(where + "/" + key, "expected a non-empty string");
    }
    return it->get<std::string>();
}

std::string optional_string(const json& obj, const char* key, const std::string& where,
                            std::string fallback) {
    const auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_string()) malformed(where + "/" + key, "expected a string");
    return it->get<std::string>();
}

/// Lexically normal, without a trailing separator.
fs::path normal_dir(const fs::path& p) {
    fs::path n = p.lexically_normal();
    if (n.has_relative_path() && !n.has_filename()) n = n.parent_path();
    return n;
}

}  // namespace

CorpusManifest parse_manifest(std::string_view json_text, const fs::path& base_dir,
                              const ProfileRegistry& registry) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        malformed("(document)", std::string("parse error at byte ") + std::to_string(e.byte) +
                                    ": " + e.what());
    }
    if (!doc.is_object()) malformed("/", "expected an object");
    for (const auto& [key, _] : doc.items()) {
        if (key != "corpus_root" && key != "units") malformed("/" + key, "unknown key");
    }

    CorpusManifest manifest;
    const fs::path root = optional_string(doc, "corpus_root", "", ".");
    manifest.corpus_root = normal_dir(root.is_absolute() ? root : base_dir / root);

    const auto units = doc.find("units");
    if (units == doc.end() || !units->is_array()) malformed("/units", "expected an array");

    static const std::set<std::string> known_keys{"unit_name",  "language_id", "algorithm_id",
                                                  "files",      "provenance",  "notes",
                                                  "parameters"};
    std::set<std::pair<std::string, std::string>> cells;
    std::set<std::string> names;
    for (std::size_t i = 0; i < units->size(); ++i) {
        const json& u = (*units)[i];
        const std::string where = "/units/" + std::to_string(i);
        if (!u.is_object()) malformed(where, "expected an object");
        for (const auto& [key, _] : u.items()) {
            if (!known_keys.count(key)) malformed(where + "/" + key, "unknown key");
        }

        ManifestUnit unit;
        unit.unit_name = required_string(u, "unit_name", where);
        unit.language_id = required_string(u, "language_id", where);
        unit.algorithm_id = required_string(u, "algorithm_id", where);
        unit.provenance = optional_string(u, "provenance", where, "unspecified");
        unit.notes = optional_string(u, "notes", where, "");

        if (!registry.contains(unit.language_id)) {
            throw Error(ErrorCode::unknown_profile, "manifest " + where + "/language_id: unknown language '" +
                                                        unit.language_id + "'");
        }

        const auto files = u.find("files");
        if (files == u.end() || !files->is_array() || files->empty()) {
            malformed(where + "/files", "expected a non-empty array of paths");
        }
        for (std::size_t k = 0; k < files->size(); ++k) {
            const auto& f = (*files)[k];
            const std::string at = where + "/files/" + std::to_string(k);
            if (!f.is_string() || f.get<std::string>().empty()) malformed(at, "expected a path");
            const std::string rel = f.get<std::string>();
            if (!fs::is_regular_file(manifest.corpus_root / rel)) {
                throw Error(ErrorCode::manifest_missing_file,
                            "manifest " + at + ": missing file " +
                                (manifest.corpus_root / rel).string());
            }
            unit.files.push_back(rel);
        }

        if (const auto params = u.find("parameters"); params != u.end()) {
            if (!params->is_object()) malformed(where + "/parameters", "expected an object");
            for (const auto& [key, value] : params->items()) {
                unit.parameters[key] = value.is_string() ? value.get<std::string>() : value.dump();
            }
        }

        if (!cells.emplace(unit.language_id, unit.algorithm_id).second) {
            throw Error(ErrorCode::manifest_duplicate,
                        "manifest " + where + ": duplicate unit for (" + unit.language_id + ", " +
                            unit.algorithm_id + ")");
        }
        if (!names.insert(unit.unit_name).second) {
            throw Error(ErrorCode::manifest_duplicate,
                        "manifest " + where + ": duplicate unit_name '" + unit.unit_name + "'");
        }
        manifest.units.push_back(std::move(unit));
    }
    return manifest;
}

CorpusManifest load_manifest(const fs::path& path, const ProfileRegistry& registry) {
    const std::string text = read_file(path, ErrorCode::manifest_missing_file);
    try {
        return parse_manifest(text, path.parent_path(), registry);
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.what());
    }
}

std::string write_manifest(const CorpusManifest& manifest, const fs::path& base_dir) {
    nlohmann::ordered_json units = nlohmann::ordered_json::array();
    for (const auto& u : manifest.units) {
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : u.parameters) params[k] = v;
        nlohmann::ordered_json entry = nlohmann::ordered_json::object();
        entry["unit_name"] = u.unit_name;
        entry["language_id"] = u.language_id;
        entry["algorithm_id"] = u.algorithm_id;
        entry["files"] = u.files;
        entry["provenance"] = u.provenance;
        if (!u.notes.empty()) entry["notes"] = u.notes;
        if (!u.parameters.empty()) entry["parameters"] = params;
        units.push_back(std::move(entry));
    }
    fs::path root = manifest.corpus_root;
    if (!base_dir.empty()) {
        const auto rel = manifest.corpus_root.lexically_relative(base_dir);
        if (!rel.empty()) root = rel;
    }
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    doc["corpus_root"] = root.generic_string();
    doc["units"] = std::move(units);
    return doc.dump(2) + "\n";
}

fs::path bundled_corpus_dir() {
    if (const char* env = std::getenv("QXPRESS_CORPUS_DIR"); env != nullptr && *env != '\0') {
        return fs::path(env);
    }
    return fs::path(QXPRESS_CORPUS_DIR);
}

CorpusManifest bundled_corpus(const ProfileRegistry& registry) {
    return load_manifest(bundled_corpus_dir() / "corpus.json", registry);
}

SourceUnit load_unit(const CorpusManifest& manifest, const ManifestUnit& unit) {
    std::vector<fs::path> paths;
    for (const auto& f : unit.files) paths.push_back(manifest.corpus_root / f);
    return load_source_unit(unit.unit_name, unit.language_id, paths);
}

namespace {

bool glob_impl(std::string_view p, std::string_view s) {
    while (!p.empty()) {
        if (p.starts_with("**")) {
            const bool dir_form = p.size() > 2 && p[2] == '/';
            const std::string_view rest = p.substr(dir_form ? 3 : 2);
            for (std::size_t i = 0; i <= s.size(); ++i) {
                if (dir_form && i > 0 && s[i - 1] != '/') continue;
                if (glob_impl(rest, s.substr(i))) return true;
            }
            return false;
        }
        if (p.front() == '*') {
            for (std::size_t i = 0; i <= s.size(); ++i) {
                if (glob_impl(p.substr(1), s.substr(i))) return true;
                if (i < s.size() && s[i] == '/') break;
            }
            return false;
        }
        if (s.empty()) return false;
        if (p.front() == '?') {
            if (s.front() == '/') return false;
        } else if (p.front() != s.front()) {
            return false;
        }
        p.remove_prefix(1);
        s.remove_prefix(1);
    }
    return s.empty();
}

std::string derive_algorithm(const fs::path& rel) {
    if (auto id = canonical_algorithm_id(rel.stem().string())) return *id;
    std::vector<std::string> dirs;
    for (const auto& part : rel.parent_path()) dirs.push_back(part.string());
    for (auto it = dirs.rbegin(); it != dirs.rend(); ++it) {
        if (auto id = canonical_algorithm_id(*it)) return *id;
    }
    return rel.stem().string();
}

std::string pick_language(const ProfileRegistry& registry, const std::string& hint,
                          const fs::path& rel) {
    if (hint != "auto") {
        registry.lookup(hint);
        return hint;
    }
    const auto candidates = registry.ids_for_extension(rel.extension().string());
    if (candidates.size() == 1) return candidates.front();
    std::string list;
    for (const auto& c : candidates) list += (list.empty() ? "" : ", ") + c;
    if (candidates.empty()) {
        throw Error(ErrorCode::no_matching_language,
                    "ingest: no language claims '" + rel.generic_string() + "'; add a rule");
    }
    throw Error(ErrorCode::ambiguous_language,
                "ingest: '" + rel.generic_string() + "' could be any of {" + list +
                    "}; add a rule naming the language");
}

}  // namespace

bool glob_match(std::string_view pattern, std::string_view path) { return glob_impl(pattern, path); }

CorpusManifest ingest_directory(const fs::path& root, const std::vector<IngestRule>& rules,
                                const ProfileRegistry& registry) {
    if (!fs::is_directory(root)) {
        throw Error(ErrorCode::io, "ingest: not a directory: " + root.string());
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
        if (entry.is_regular_file()) files.push_back(entry.path().lexically_relative(root));
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.generic_string() < b.generic_string(); });

    struct Group {
        std::string language;
        std::string algorithm;
        std::vector<std::string> files;
    };
    std::vector<Group> groups;
    std::map<std::size_t, std::size_t> per_match_group;  // rule index -> group index

    for (const auto& rel : files) {
        const std::string generic = rel.generic_string();
        std::optional<std::size_t> rule_index;
        for (std::size_t r = 0; r < rules.size(); ++r) {
            if (glob_match(rules[r].pattern, generic)) {
                rule_index = r;
                break;
            }
        }
        if (!rule_index) {
            if (registry.ids_for_extension(rel.extension().string()).empty()) continue;
            groups.push_back({pick_language(registry, "auto", rel), derive_algorithm(rel), {generic}});
            continue;
        }
        const IngestRule& rule = rules[*rule_index];
        const std::string language = pick_language(registry, rule.language, rel);
        if (rule.grouping == UnitGrouping::per_file) {
            groups.push_back({language, rule.algorithm.empty() ? derive_algorithm(rel) : rule.algorithm,
                              {generic}});
            continue;
        }
        auto it = per_match_group.find(*rule_index);
        if (it == per_match_group.end()) {
            per_match_group[*rule_index] = groups.size();
            groups.push_back({language, rule.algorithm.empty() ? derive_algorithm(rel) : rule.algorithm,
                              {generic}});
        } else {
            Group& g = groups[it->second];
            if (g.language != language) {
                throw Error(ErrorCode::ambiguous_language,
                            "ingest: rule '" + rule.pattern + "' matches files of languages " +
                                g.language + " and " + language);
            }
            g.files.push_back(generic);
        }
    }

    std::stable_sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
        if (a.language != b.language) return a.language < b.language;
        const auto ra = algorithm_rank(a.algorithm), rb = algorithm_rank(b.algorithm);
        if (ra != rb) return ra < rb;
        return a.algorithm < b.algorithm;
    });

    CorpusManifest manifest;
    manifest.corpus_root = normal_dir(fs::absolute(root));
    std::set<std::pair<std::string, std::string>> seen;
    for (auto& g : groups) {
        if (!seen.emplace(g.language, g.algorithm).second) {
            throw Error(ErrorCode::manifest_duplicate,
                        "ingest: several units map to (" + g.language + ", " + g.algorithm +
                            "); add rules to group or name them");
        }
        ManifestUnit unit;
        unit.unit_name = g.language + "/" + g.algorithm;
        unit.language_id = g.language;
        unit.algorithm_id = g.algorithm;
        unit.files = std::move(g.files);
        unit.provenance = "unspecified";
        manifest.units.push_back(std::move(unit));
    }
    return manifest;
}

CorpusAnalysis analyze_corpus(const CorpusManifest& manifest, const ProfileRegistry& registry,
                              unsigned jobs) {
    const std::size_t n = manifest.units.size();
    std::vector<std::optional<MetricsReport>> results(n);
    std::vector<std::string> errors(n);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            const auto& u = manifest.units[i];
            try {
                const auto& profile = registry.lookup(u.language_id);
                results[i] = analyze_unit(load_unit(manifest, u), profile, u.algorithm_id);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };

    const std::size_t threads = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(n, 1));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    CorpusAnalysis out;
    for (std::size_t i = 0; i < n; ++i) {
        if (results[i]) {
            out.reports.push_back(std::move(*results[i]));
        } else {
            out.failures.push_back({manifest.units[i].unit_name, errors[i]});
        }
    }
    return out;
}

}  // namespace qxpress
