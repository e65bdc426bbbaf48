#include "qxpress/profile.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qxpress/error.hpp"
#include "qxpress/lexer.hpp"

namespace qxpress {

using nlohmann::json;

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::unknown_profile: return "unknown-profile";
        case ErrorCode::ambiguous_language: return "ambiguous-language";
        case ErrorCode::no_matching_language: return "no-matching-language";
        case ErrorCode::invalid_profile: return "invalid-profile";
        case ErrorCode::encoding: return "encoding";
        case ErrorCode::lexical: return "lexical";
        case ErrorCode::io: return "io";
        case ErrorCode::manifest_malformed: return "manifest-malformed";
        case ErrorCode::manifest_missing_file: return "manifest-missing-file";
        case ErrorCode::manifest_duplicate: return "manifest-duplicate";
        case ErrorCode::unknown_metric: return "unknown-metric";
        case ErrorCode::duplicate_cell: return "duplicate-cell";
    }
    return "error";
}

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string join(const std::vector<std::string>& items, const char* sep = ", ") {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += sep;
        out += s;
    }
    return out;
}

/// Every CC construct must come out of the lexer as exactly one token.
void validate(const LanguageProfile& profile) {
    if (profile.id.empty()) throw Error(ErrorCode::invalid_profile, "profile without an id");
    for (const auto& construct : profile.cc_constructs) {
        TokenStream stream;
        try {
            stream = tokenize_text(construct, profile);
        } catch (const Error&) {
        }
        const bool single = stream.tokens.size() == 1 && stream.tokens.front().lexeme == construct;
        const bool bracketed = stream.tokens.size() == 2 && stream.tokens[0].pair_opener &&
                               stream.tokens[0].lexeme == construct;
        if (!single && !bracketed) {
            throw Error(ErrorCode::invalid_profile,
                        "profile '" + profile.id + "': construct '" + construct +
                            "' is not a single token under this profile");
        }
    }
}

}  // namespace

void ProfileRegistry::add(LanguageProfile profile) {
    validate(profile);
    if (auto it = profiles_.find(profile.id); it != profiles_.end()) {
        if (it->second == profile) return;
        throw Error(ErrorCode::invalid_profile,
                    "a different profile is already registered as '" + profile.id + "'");
    }
    replace(std::move(profile));
}

void ProfileRegistry::replace(LanguageProfile profile) {
    validate(profile);
    if (auto it = profiles_.find(profile.id); it != profiles_.end()) {
        for (const auto& ext : it->second.file_extensions) {
            by_extension_[lower(ext)].erase(profile.id);
        }
    }
    for (const auto& ext : profile.file_extensions) by_extension_[lower(ext)].insert(profile.id);
    const std::string id = profile.id;
    profiles_.insert_or_assign(id, std::move(profile));
}

const LanguageProfile& ProfileRegistry::lookup(std::string_view id) const {
    if (auto it = profiles_.find(id); it != profiles_.end()) return it->second;
    throw Error(ErrorCode::unknown_profile, "unknown language profile '" + std::string(id) +
                                                "' (known: " + join(ids()) + ")");
}

bool ProfileRegistry::contains(std::string_view id) const { return profiles_.find(id) != profiles_.end(); }

std::vector<std::string> ProfileRegistry::ids() const {
    std::vector<std::string> out;
    for (const auto& [id, _] : profiles_) out.push_back(id);
    return out;
}

std::vector<std::string> ProfileRegistry::ids_for_extension(std::string_view extension) const {
    auto it = by_extension_.find(lower(std::string(extension)));
    if (it == by_extension_.end()) return {};
    return {it->second.begin(), it->second.end()};
}

const LanguageProfile& resolve_profile(const ProfileRegistry& registry, std::string_view hint,
                                       const std::filesystem::path& path) {
    if (hint != "auto") return registry.lookup(hint);
    const std::string ext = path.extension().string();
    const auto candidates = registry.ids_for_extension(ext);
    if (candidates.empty()) {
        throw Error(ErrorCode::no_matching_language,
                    "no language profile claims '" + path.string() + "'; pass --lang");
    }
    if (candidates.size() > 1) {
        throw Error(ErrorCode::ambiguous_language,
                    "extension '" + ext + "' of '" + path.string() +
                        "' is shared by several profiles {" + join(candidates) +
                        "}; choose one with --lang");
    }
    return registry.lookup(candidates.front());
}

namespace {

std::vector<std::string> string_list(const json& value, const std::string& where) {
    if (!value.is_array()) throw Error(ErrorCode::invalid_profile, where + ": expected an array");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < value.size(); ++i) {
        if (!value[i].is_string()) {
            throw Error(ErrorCode::invalid_profile,
                        where + "/" + std::to_string(i) + ": expected a string");
        }
        out.push_back(value[i].get<std::string>());
    }
    return out;
}

CommentMarkers comment_markers(const json& value, const std::string& where) {
    if (!value.is_array()) throw Error(ErrorCode::invalid_profile, where + ": expected an array");
    CommentMarkers markers;
    for (std::size_t i = 0; i < value.size(); ++i) {
        const auto& item = value[i];
        const std::string at = where + "/" + std::to_string(i);
        if (item.is_string() && !item.get<std::string>().empty()) {
            markers.line.push_back(item.get<std::string>());
        } else if (item.is_array() && item.size() == 2 && item[0].is_string() &&
                   item[1].is_string()) {
            markers.block.push_back({item[0].get<std::string>(), item[1].get<std::string>()});
        } else {
            throw Error(ErrorCode::invalid_profile,
                        at + ": expected a line marker string or an [open, close] pair");
        }
    }
    return markers;
}

}  // namespace

void apply_profile_overrides(ProfileRegistry& registry, std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::invalid_profile, std::string("profile overrides: ") + e.what());
    }
    if (!doc.is_object()) {
        throw Error(ErrorCode::invalid_profile, "profile overrides: expected an object keyed by profile id");
    }
    std::vector<LanguageProfile> updated;
    for (const auto& [id, body] : doc.items()) {
        const std::string where = "/" + id;
        if (!registry.contains(id)) {
            throw Error(ErrorCode::unknown_profile, "profile overrides" + where +
                                                        ": unknown language profile '" + id + "'");
        }
        if (!body.is_object()) throw Error(ErrorCode::invalid_profile, where + ": expected an object");
        LanguageProfile profile = registry.lookup(id);
        for (const auto& [key, value] : body.items()) {
            const std::string at = where + "/" + key;
            if (key == "cc_constructs") {
                const auto items = string_list(value, at);
                profile.cc_constructs = {items.begin(), items.end()};
            } else if (key == "operator_lexemes") {
                const auto items = string_list(value, at);
                profile.operator_lexemes = {items.begin(), items.end()};
            } else if (key == "comment_markers") {
                profile.comment_markers = comment_markers(value, at);
            } else {
                throw Error(ErrorCode::invalid_profile, "profile overrides" + at + ": unknown key '" +
                                                            key + "'");
            }
        }
        profile.notes.push_back("overridden from configuration");
        updated.push_back(std::move(profile));
    }
    for (auto& p : updated) registry.replace(std::move(p));
}

void apply_profile_overrides_file(ProfileRegistry& registry, const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::io, "cannot read profile overrides " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        apply_profile_overrides(registry, buf.str());
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.what());
    }
}

std::string describe_profile(const LanguageProfile& p) {
    json markers = json::array();
    for (const auto& m : p.comment_markers.line) markers.push_back(m);
    for (const auto& b : p.comment_markers.block) markers.push_back({b.open, b.close});
    json strings = json::array();
    for (const auto& d : p.string_delimiters) {
        strings.push_back({{"open", d.open},
                           {"close", d.close},
                           {"multiline", d.multiline},
                           {"escape", d.escape == StringEscape::backslash ? "backslash" : "doubled"}});
    }
    json brackets = json::array();
    for (const auto& b : p.bracket_pairs) brackets.push_back(b.lexeme());

    json out = json::object();
    out["id"] = p.id;
    out["display_name"] = p.display_name;
    out["file_extensions"] = p.file_extensions;
    out["cc_constructs"] = p.cc_constructs;
    out["comment_markers"] = markers;
    out["string_delimiters"] = strings;
    out["string_prefixes"] = p.string_prefixes;
    out["operator_lexemes"] = p.operator_lexemes;
    out["bracket_pairs"] = brackets;
    out["call_is_operator"] = p.call_is_operator;
    out["comprehension_clause"] = p.comprehension_clause;
    out["docstrings_are_comments"] = p.docstrings_are_comments;
    out["notes"] = p.notes;
    return out.dump(2) + "\n";
}

}  // namespace qxpress
