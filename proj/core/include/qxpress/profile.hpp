#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qxpress {

struct BlockComment {
    std::string open;
    std::string close;

    auto operator<=>(const BlockComment&) const = default;
};

struct CommentMarkers {
    std::vector<std::string> line;
    std::vector<BlockComment> block;

    bool operator==(const CommentMarkers&) const = default;
};

enum class StringEscape {
    backslash,      ///< `\"` does not terminate the literal
    doubled_quote,  ///< `''` inside a literal is one quote (APL)
};

struct StringDelimiter {
    std::string open;
    std::string close;
    bool multiline = false;
    StringEscape escape = StringEscape::backslash;

    bool operator==(const StringDelimiter&) const = default;
};

struct BracketPair {
    std::string open;
    std::string close;

    /// Lexeme counted for one occurrence of the pair, e.g. "()".
    std::string lexeme() const { return open + close; }

    bool operator==(const BracketPair&) const = default;
};

/// All lexical knowledge for one language surface. Profiles are plain data:
/// the lexer and the CC counter read these fields and nothing else.
struct LanguageProfile {
    std::string id;
    std::string display_name;

    CommentMarkers comment_markers;
    std::vector<StringDelimiter> string_delimiters;
    /// Glued in front of a delimiter without whitespace (`f"..."`, `$"..."`).
    /// Matched case-insensitively.
    std::vector<std::string> string_prefixes;

    /// Lexemes counted toward cyclomatic complexity.
    std::set<std::string> cc_constructs;
    /// Keywords and symbolic operators; always classified as operators.
    std::set<std::string> operator_lexemes;
    std::vector<BracketPair> bracket_pairs;

    bool call_is_operator = true;
    std::string call_opener = "(";

    /// Keyword that opens a comprehension clause inside `[]` / `{}`. When set,
    /// the constructs "list", "set" and "dict" mean comprehensions, not names.
    std::string comprehension_clause;
    /// String statements standing alone on their lines are documentation.
    bool docstrings_are_comments = false;
    std::string line_continuation;

    /// Scalars allowed in identifiers besides ASCII letters, digits and `_`.
    std::string identifier_extra;
    /// Non-ASCII scalars not otherwise claimed are identifier characters.
    bool unicode_identifiers = true;
    /// Glyphs emitted as one-scalar operand tokens (APL's ⍺ and ⍵).
    std::string operand_glyphs;
    /// Glyphs emitted as one-scalar number literals (APL's ⍬).
    std::string literal_glyphs;
    /// Prefix glyph for negative number literals (APL's ¯).
    std::string negative_number_prefix;

    std::vector<std::string> file_extensions;

    /// Free-form notes surfaced in reports (e.g. where a construct set came from).
    std::vector<std::string> notes;

    bool operator==(const LanguageProfile&) const = default;
};

/// Immutable after construction is finished; share freely across threads.
class ProfileRegistry {
public:
    /// Registering an equal profile twice is a no-op; a different profile
    /// under an existing id is rejected.
    void add(LanguageProfile profile);

    /// Replaces an existing profile with the same id.
    void replace(LanguageProfile profile);

    const LanguageProfile& lookup(std::string_view id) const;
    bool contains(std::string_view id) const;

    std::vector<std::string> ids() const;
    std::size_t size() const { return profiles_.size(); }
    bool empty() const { return profiles_.empty(); }

    /// Profile ids claiming the extension (including the leading dot),
    /// sorted. Empty when none.
    std::vector<std::string> ids_for_extension(std::string_view extension) const;

private:
    std::map<std::string, LanguageProfile, std::less<>> profiles_;
    std::map<std::string, std::set<std::string>, std::less<>> by_extension_;
};

/// The six studied language surfaces: qiskit, cirq, qrisp, quapl, qmod, qsharp.
ProfileRegistry builtin_profiles();

/// `hint` is a profile id or "auto". Auto picks the unique profile claiming the
/// file's extension; shared extensions are an error, never a guess.
const LanguageProfile& resolve_profile(const ProfileRegistry& registry,
                                       std::string_view hint,
                                       const std::filesystem::path& path);

/// Applies a JSON override document keyed by profile id. Recognised keys are
/// `cc_constructs`, `comment_markers` and `operator_lexemes`; anything else
/// is rejected.
void apply_profile_overrides(ProfileRegistry& registry, std::string_view json_text);
void apply_profile_overrides_file(ProfileRegistry& registry,
                                  const std::filesystem::path& path);

/// JSON rendering of a profile's full rule set, for auditing.
std::string describe_profile(const LanguageProfile& profile);

}  // namespace qxpress
