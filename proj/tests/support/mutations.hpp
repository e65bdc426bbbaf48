#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qxpress/lexer.hpp"
#include "qxpress/profile.hpp"
#include "scanner.hpp"

namespace qxpress::test {

/// Byte offsets of line starts where a new line can be inserted without
/// landing inside a multi-line token or after a line continuation.
inline std::vector<std::size_t> insertion_points(const std::string& text, const LanguageProfile& profile) {
    const detail::CompiledProfile compiled(profile);
    const auto raw = detail::scan(text, compiled);
    std::vector<bool> blocked;
    for (const auto& t : raw) {
        if (t.end_line > blocked.size()) blocked.resize(t.end_line + 1, false);
        for (std::size_t l = t.line; l < t.end_line; ++l) blocked[l] = true;
    }
    std::vector<std::size_t> points{0};
    std::size_t line = 1;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '\n') continue;
        const std::string_view before(text.data(), i);
        const bool continued = !profile.line_continuation.empty() && before.ends_with(profile.line_continuation);
        const bool inside = line < blocked.size() && blocked[line];
        if (!continued && !inside) points.push_back(i + 1);
        ++line;
    }
    return points;
}

inline std::string comment_line(const LanguageProfile& profile, std::mt19937& rng) {
    static const char* const words[] = {"note", "TODO check this", "if for while", "x = y + 1", "(unbalanced", "\"quote"};
    const std::string body = words[rng() % std::size(words)];
    if (!profile.comment_markers.line.empty()) return profile.comment_markers.line.front() + " " + body;
    const auto& b = profile.comment_markers.block.front();
    return b.open + " note " + b.close;
}

/// Inserts `count` comment-only or blank lines at random safe line starts
/// across the files of `unit`.
inline SourceUnit insert_noise(SourceUnit unit, const LanguageProfile& profile, std::size_t count, std::mt19937& rng) {
    for (std::size_t k = 0; k < count; ++k) {
        auto& file = unit.files[rng() % unit.files.size()];
        const auto points = insertion_points(file.text, profile);
        const std::size_t at = points[rng() % points.size()];
        const int choice = static_cast<int>(rng() % 3);
        std::string line = choice == 0 ? "" : choice == 1 ? "   " : std::string(rng() % 5, ' ') + comment_line(profile, rng);
        file.text.insert(at, line + "\n");
    }
    return unit;
}

/// Appends every CC construct, space separated, to the content of every
/// string literal. Returns the number of literals touched.
inline std::size_t embed_constructs_in_strings(SourceUnit& unit, const LanguageProfile& profile) {
    std::string payload;
    for (const auto& c : profile.cc_constructs) payload += " " + c;
    const detail::CompiledProfile compiled(profile);
    std::size_t touched = 0;
    for (auto& file : unit.files) {
        auto raw = detail::scan(file.text, compiled);
        std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.begin > b.begin; });
        for (const auto& t : raw) {
            if (t.kind != detail::RawKind::string || t.unterminated) continue;
            const std::string_view lexeme(file.text.data() + t.begin, t.end - t.begin);
            std::size_t close = 0;
            for (const auto& d : profile.string_delimiters)
                if (lexeme.size() >= d.open.size() + d.close.size() && lexeme.ends_with(d.close))
                    close = std::max(close, d.close.size());
            if (close == 0) continue;
            file.text.insert(t.end - close, payload);
            ++touched;
        }
    }
    return touched;
}

/// Renames every non-reserved identifier to a fresh name, one to one.
inline SourceUnit rename_identifiers(SourceUnit unit, const LanguageProfile& profile) {
    const detail::CompiledProfile compiled(profile);
    std::map<std::string, std::string> names;
    for (auto& file : unit.files) {
        auto raw = detail::scan(file.text, compiled);
        std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.begin > b.begin; });
        for (const auto& t : raw) {
            if (t.kind != detail::RawKind::word) continue;
            const std::string word = file.text.substr(t.begin, t.end - t.begin);
            if (compiled.is_keyword(word) || profile.cc_constructs.count(word) || profile.operator_lexemes.count(word))
                continue;
            auto [it, fresh] = names.try_emplace(word, "");
            if (fresh) it->second = "renamed_" + std::to_string(names.size());
            file.text.replace(t.begin, t.end - t.begin, it->second);
        }
    }
    return unit;
}

}  // namespace qxpress::test
