#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qxpress/lexer.hpp"
#include "qxpress/metrics.hpp"
#include "qxpress/profile.hpp"

namespace qxpress {

namespace algorithm {
inline constexpr std::string_view deutsch_jozsa = "deutsch-jozsa";
inline constexpr std::string_view bernstein_vazirani = "bernstein-vazirani";
inline constexpr std::string_view simon = "simon";
inline constexpr std::string_view grover = "grover";
}  // namespace algorithm

/// The four benchmark algorithms in presentation order.
const std::vector<std::string>& canonical_algorithms();

/// Position of an algorithm in presentation order; free-form ids sort after
/// the canonical four.
std::size_t algorithm_rank(std::string_view algorithm_id);

/// Maps spellings such as "deutsch_jozsa", "DeutschJozsa" or "bv" onto the
/// canonical id; nullopt for anything else.
std::optional<std::string> canonical_algorithm_id(std::string_view name);

inline constexpr std::string_view provenance_paper_repo = "paper-repo";
inline constexpr std::string_view provenance_reauthored = "reauthored";

/// Declared benchmark parameters (qubit counts, hidden strings) as key/value
/// text. Metadata only; never interpreted.
using AlgorithmParameters = std::map<std::string, std::string>;

/// The parameter set every bundled implementation of `algorithm_id` declares.
AlgorithmParameters standard_parameters(std::string_view algorithm_id);

struct ManifestUnit {
    std::string unit_name;
    std::string language_id;
    std::string algorithm_id;
    std::vector<std::string> files;  ///< relative to the corpus root
    std::string provenance;
    std::string notes;
    AlgorithmParameters parameters;

    bool operator==(const ManifestUnit&) const = default;
};

struct CorpusManifest {
    std::filesystem::path corpus_root;
    std::vector<ManifestUnit> units;

    bool operator==(const CorpusManifest&) const = default;
};

/// Parses and validates a manifest. `corpus_root` in the document is resolved
/// against the manifest's directory. Every file must exist; (language,
/// algorithm) pairs must be unique; languages must be registered.
CorpusManifest load_manifest(const std::filesystem::path& path, const ProfileRegistry& registry);

CorpusManifest parse_manifest(std::string_view json_text, const std::filesystem::path& base_dir,
                              const ProfileRegistry& registry);

/// Serialises a manifest. `corpus_root` is written relative to `base_dir`
/// when possible.
std::string write_manifest(const CorpusManifest& manifest,
                           const std::filesystem::path& base_dir);

/// Manifest of the fixtures shipped with the project.
CorpusManifest bundled_corpus(const ProfileRegistry& registry);
std::filesystem::path bundled_corpus_dir();

SourceUnit load_unit(const CorpusManifest& manifest, const ManifestUnit& unit);

enum class UnitGrouping {
    per_file,   ///< every matching file is its own unit
    per_match,  ///< all files matched by the rule form one unit
};

struct IngestRule {
    std::string pattern;          ///< glob relative to root: `*`, `?`, `**`
    std::string language = "auto";
    UnitGrouping grouping = UnitGrouping::per_match;
    std::string algorithm;        ///< empty: derived from the path
};

/// Walks `root` and groups files into units. Files matched by no rule become
/// per-file units when their extension names exactly one language, and are
/// skipped when no language claims them. A shared extension with no explicit
/// rule is an error.
CorpusManifest ingest_directory(const std::filesystem::path& root,
                                const std::vector<IngestRule>& rules,
                                const ProfileRegistry& registry);

bool glob_match(std::string_view pattern, std::string_view path);

/// Analyses every unit with up to `jobs` threads. Output order follows the
/// manifest regardless of scheduling. A unit that fails is reported in
/// `failures` and skipped.
struct UnitFailure {
    std::string unit_name;
    std::string message;
};

struct CorpusAnalysis {
    std::vector<MetricsReport> reports;
    std::vector<UnitFailure> failures;
};

CorpusAnalysis analyze_corpus(const CorpusManifest& manifest, const ProfileRegistry& registry,
                              unsigned jobs = 1);

}  // namespace qxpress
