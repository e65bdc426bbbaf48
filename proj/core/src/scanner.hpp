#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qxpress/profile.hpp"

namespace qxpress::detail {

enum class RawKind {
    comment,
    string,
    number,
    word,
    symbol,
    operand_glyph,
    literal_glyph,
    opener,
    closer,
};

struct RawToken {
    RawKind kind = RawKind::symbol;
    std::size_t begin = 0;  ///< byte offsets into the scanned text
    std::size_t end = 0;
    std::size_t line = 1;  ///< 1-based
    std::size_t column = 1;  ///< 1-based, scalar values
    std::size_t end_line = 1;
    std::size_t bracket = 0;  ///< index into bracket_pairs for opener/closer
    bool matched = false;     ///< closer that closes the innermost open pair
    bool unterminated = false;
    bool docstring = false;
};

/// Lookup tables derived from a profile once per scan.
class CompiledProfile {
public:
    explicit CompiledProfile(const LanguageProfile& profile);

    const LanguageProfile& profile() const { return *profile_; }

    bool is_identifier_start(char32_t c) const;
    bool is_identifier_continue(char32_t c) const;
    bool is_keyword(std::string_view word) const { return words_.count(std::string(word)) != 0; }
    bool is_operand_glyph(char32_t c) const { return operand_glyphs_.count(c) != 0; }
    bool is_literal_glyph(char32_t c) const { return literal_glyphs_.count(c) != 0; }

    /// Symbolic operator lexemes, longest first.
    const std::vector<std::string>& symbols() const { return symbols_; }
    const std::vector<StringDelimiter>& delimiters() const { return delimiters_; }
    const std::vector<std::string>& line_comments() const { return line_comments_; }

private:
    const LanguageProfile* profile_;
    std::set<std::string> words_;
    std::vector<std::string> symbols_;
    std::vector<StringDelimiter> delimiters_;
    std::vector<std::string> line_comments_;
    std::set<char32_t> identifier_extra_;
    std::set<char32_t> operand_glyphs_;
    std::set<char32_t> literal_glyphs_;
    std::set<char32_t> claimed_;  ///< non-ASCII scalars that start symbols or glyphs
};

/// Splits UTF-8 text (LF line endings) into raw tokens, comments included.
/// Never throws: unterminated literals are flagged and left to the caller.
std::vector<RawToken> scan(std::string_view text, const CompiledProfile& profile);

/// True when `c` is an ASCII letter, digit or underscore.
bool is_ascii_word(char32_t c);

}  // namespace qxpress::detail
