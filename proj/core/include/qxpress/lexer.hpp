#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qxpress/profile.hpp"

namespace qxpress {

struct SourceFile {
    std::filesystem::path path;
    std::string text;
};

/// One analysis unit: every file making up one implementation, analysed as a
/// single program in the listed order.
struct SourceUnit {
    std::string unit_name;
    std::string language_id;
    std::vector<SourceFile> files;
};

/// Reads the files from disk. Paths are kept as given.
SourceUnit load_source_unit(std::string unit_name, std::string language_id,
                            const std::vector<std::filesystem::path>& paths);

struct LineOrigin {
    std::size_t file_index = 0;
    std::size_t line = 0;  ///< 1-based physical line in the original file

    bool operator==(const LineOrigin&) const = default;
};

/// Source with blank lines, comment-only lines, trailing comments and
/// docstrings removed. `origin[i]` locates `lines[i]`.
struct EffectiveSource {
    std::vector<std::filesystem::path> files;
    std::vector<std::string> lines;
    std::vector<LineOrigin> origin;
};

enum class TokenClass { operator_, operand };

enum class TokenKind {
    keyword,
    symbol,
    identifier,
    call_identifier,
    number_literal,
    string_literal,
};

const char* to_string(TokenClass c);
const char* to_string(TokenKind k);

struct SourceLocation {
    std::filesystem::path file;
    std::size_t line = 0;    ///< 1-based physical line
    std::size_t column = 0;  ///< 1-based, in Unicode scalar values

    bool operator==(const SourceLocation&) const = default;
};

struct Token {
    std::string lexeme;
    TokenClass cls = TokenClass::operand;
    TokenKind kind = TokenKind::identifier;
    SourceLocation location;
    /// Closing half of a bracket pair. The opener carries the pair lexeme
    /// ("()") and is the one counted; closers only mark structure.
    bool pair_closer = false;
    bool pair_opener = false;

    bool operator==(const Token&) const = default;
};

struct TokenStream {
    std::vector<Token> tokens;
    std::string profile_id;
};

struct HalsteadCounts {
    std::size_t distinct_operators = 0;  ///< n1
    std::size_t distinct_operands = 0;   ///< n2
    std::size_t total_operators = 0;     ///< N1
    std::size_t total_operands = 0;      ///< N2

    bool operator==(const HalsteadCounts&) const = default;
};

/// Throws Error(encoding) naming the file when a file is not UTF-8.
EffectiveSource strip_non_essential(const SourceUnit& unit, const LanguageProfile& profile);

std::size_t count_loc(const EffectiveSource& source);

/// Throws Error(lexical) with a location on an unterminated string literal.
TokenStream tokenize(const EffectiveSource& source, const LanguageProfile& profile);

/// Convenience for a single in-memory text, no stripping applied.
TokenStream tokenize_text(std::string_view text, const LanguageProfile& profile,
                          const std::filesystem::path& name = "<text>");

HalsteadCounts classify_counts(const TokenStream& stream);

}  // namespace qxpress
