#include "qxpress/lexer.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "qxpress/error.hpp"
#include "scanner.hpp"
#include "utf8.hpp"

namespace qxpress {

using detail::RawKind;
using detail::RawToken;

const char* to_string(TokenClass c) {
    return c == TokenClass::operator_ ? "operator" : "operand";
}

const char* to_string(TokenKind k) {
    switch (k) {
        case TokenKind::keyword: return "keyword";
        case TokenKind::symbol: return "symbol";
        case TokenKind::identifier: return "identifier";
        case TokenKind::call_identifier: return "call-identifier";
        case TokenKind::number_literal: return "number-literal";
        case TokenKind::string_literal: return "string-literal";
    }
    return "?";
}

SourceUnit load_source_unit(std::string unit_name, std::string language_id,
                            const std::vector<std::filesystem::path>& paths) {
    SourceUnit unit{std::move(unit_name), std::move(language_id), {}};
    for (const auto& path : paths) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error(ErrorCode::io, "cannot read " + path.string());
        std::ostringstream buf;
        buf << in.rdbuf();
        unit.files.push_back({path, buf.str()});
    }
    return unit;
}

namespace {

/// UTF-8 check, BOM removal, CRLF/CR to LF.
std::string normalize(const SourceFile& file) {
    if (const auto bad = utf8::find_invalid(file.text)) {
        throw Error(ErrorCode::encoding, file.path.string() + ": not valid UTF-8 (byte offset " +
                                             std::to_string(*bad) + ")");
    }
    std::string_view text = file.text;
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\r') {
            out += '\n';
            if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
        } else {
            out += text[i];
        }
    }
    return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

bool is_blank(std::string_view s) {
    return s.find_first_not_of(" \t\f\v") == std::string_view::npos;
}

void rtrim(std::string& s) {
    const auto last = s.find_last_not_of(" \t\f\v");
    s.erase(last == std::string::npos ? 0 : last + 1);
}

std::string location_prefix(const std::filesystem::path& file, std::size_t line,
                            std::size_t column) {
    return file.string() + ":" + std::to_string(line) + ":" + std::to_string(column) + ": ";
}

/// Converts the raw tokens of one scanned text. `line_of` maps scan lines
/// (1-based) to physical lines.
template <typename LineMap>
void convert(std::string_view text, const std::vector<RawToken>& raw,
             const LanguageProfile& profile, const detail::CompiledProfile& compiled,
             const std::filesystem::path& file, LineMap line_of, std::vector<Token>& out) {
    auto next_code = [&](std::size_t i) -> const RawToken* {
        for (std::size_t j = i + 1; j < raw.size(); ++j) {
            if (raw[j].kind != RawKind::comment) return &raw[j];
        }
        return nullptr;
    };
    auto is_call = [&](std::size_t i) {
        if (!profile.call_is_operator) return false;
        const RawToken* next = next_code(i);
        if (next == nullptr || next->kind != RawKind::opener) return false;
        if (profile.bracket_pairs[next->bracket].open != profile.call_opener) return false;
        const auto gap = text.substr(raw[i].end, next->begin - raw[i].end);
        return gap.find_first_not_of(" \t") == std::string_view::npos;
    };

    for (std::size_t i = 0; i < raw.size(); ++i) {
        const RawToken& r = raw[i];
        if (r.kind == RawKind::comment) continue;
        const SourceLocation loc{file, line_of(r.line), r.column};
        if (r.kind == RawKind::string && r.unterminated) {
            throw Error(ErrorCode::lexical,
                        location_prefix(loc.file, loc.line, loc.column) +
                            "unterminated string literal");
        }
        if (r.kind == RawKind::string && r.docstring) continue;

        Token t;
        t.location = loc;
        t.lexeme = std::string(text.substr(r.begin, r.end - r.begin));
        switch (r.kind) {
            case RawKind::string:
                t.kind = TokenKind::string_literal;
                break;
            case RawKind::number:
            case RawKind::literal_glyph:
                t.kind = TokenKind::number_literal;
                break;
            case RawKind::operand_glyph:
                t.kind = TokenKind::identifier;
                break;
            case RawKind::word:
                if (compiled.is_keyword(t.lexeme)) {
                    t.kind = TokenKind::keyword;
                } else if (is_call(i)) {
                    t.kind = TokenKind::call_identifier;
                } else {
                    t.kind = TokenKind::identifier;
                }
                break;
            case RawKind::symbol: {
                const auto d = utf8::decode(t.lexeme, t.lexeme.size() - 1);
                const bool wordy = t.lexeme.size() > 1 && profile.operator_lexemes.count(t.lexeme) &&
                                   detail::is_ascii_word(d.length ? d.scalar : 0);
                t.kind = wordy ? TokenKind::keyword : TokenKind::symbol;
                break;
            }
            case RawKind::opener:
                t.kind = TokenKind::symbol;
                t.lexeme = profile.bracket_pairs[r.bracket].lexeme();
                t.pair_opener = true;
                break;
            case RawKind::closer:
                t.kind = TokenKind::symbol;
                if (r.matched) {
                    t.pair_closer = true;
                } else {
                    t.lexeme = profile.bracket_pairs[r.bracket].lexeme();
                }
                break;
            case RawKind::comment:
                break;
        }
        const bool is_operator = t.kind == TokenKind::keyword || t.kind == TokenKind::symbol ||
                                 t.kind == TokenKind::call_identifier;
        t.cls = is_operator ? TokenClass::operator_ : TokenClass::operand;
        out.push_back(std::move(t));
    }
}

}  // namespace

EffectiveSource strip_non_essential(const SourceUnit& unit, const LanguageProfile& profile) {
    const detail::CompiledProfile compiled(profile);
    EffectiveSource result;
    for (std::size_t f = 0; f < unit.files.size(); ++f) {
        const auto& file = unit.files[f];
        result.files.push_back(file.path);
        const std::string text = normalize(file);
        const auto lines = split_lines(text);
        const auto raw = detail::scan(text, compiled);

        // Byte ranges to blank out: comments and documentation strings.
        std::vector<std::pair<std::size_t, std::size_t>> removed;
        for (const auto& r : raw) {
            if (r.kind == RawKind::comment || (r.kind == RawKind::string && r.docstring)) {
                removed.emplace_back(r.begin, r.end);
            }
        }

        std::size_t cursor = 0;  // index into `removed`
        std::size_t line_begin = 0;
        for (std::size_t ln = 0; ln < lines.size(); ++ln) {
            const std::size_t line_end = line_begin + lines[ln].size();
            std::string kept;
            std::size_t pos = line_begin;
            while (cursor < removed.size() && removed[cursor].second <= line_begin) ++cursor;
            for (std::size_t k = cursor; k < removed.size() && removed[k].first < line_end; ++k) {
                const auto from = std::max(removed[k].first, line_begin);
                const auto to = std::min(removed[k].second, line_end);
                if (from < pos) continue;
                kept.append(text, pos, from - pos);
                kept += ' ';
                pos = to;
            }
            if (pos < line_end) kept.append(text, pos, line_end - pos);
            rtrim(kept);
            if (!is_blank(kept)) {
                result.lines.push_back(std::move(kept));
                result.origin.push_back({f, ln + 1});
            }
            line_begin = line_end + 1;
        }
    }
    return result;
}

std::size_t count_loc(const EffectiveSource& source) { return source.lines.size(); }

TokenStream tokenize(const EffectiveSource& source, const LanguageProfile& profile) {
    const detail::CompiledProfile compiled(profile);
    TokenStream stream;
    stream.profile_id = profile.id;

    std::size_t i = 0;
    while (i < source.lines.size()) {
        const std::size_t file_index = source.origin.at(i).file_index;
        std::size_t j = i;
        std::string text;
        while (j < source.lines.size() && source.origin.at(j).file_index == file_index) {
            text += source.lines[j];
            text += '\n';
            ++j;
        }
        const auto raw = detail::scan(text, compiled);
        const std::filesystem::path file =
            file_index < source.files.size() ? source.files[file_index] : std::filesystem::path{};
        convert(text, raw, profile, compiled, file,
                [&](std::size_t scan_line) { return source.origin.at(i + scan_line - 1).line; },
                stream.tokens);
        i = j;
    }
    return stream;
}

TokenStream tokenize_text(std::string_view text, const LanguageProfile& profile,
                          const std::filesystem::path& name) {
    const SourceFile file{name, std::string(text)};
    const std::string normalized = normalize(file);
    const detail::CompiledProfile compiled(profile);
    const auto raw = detail::scan(normalized, compiled);
    TokenStream stream;
    stream.profile_id = profile.id;
    convert(normalized, raw, profile, compiled, name, [](std::size_t l) { return l; },
            stream.tokens);
    return stream;
}

HalsteadCounts classify_counts(const TokenStream& stream) {
    std::set<std::string_view> operators;
    std::set<std::string_view> operands;
    HalsteadCounts c;
    for (const auto& t : stream.tokens) {
        if (t.pair_closer) continue;
        if (t.cls == TokenClass::operator_) {
            operators.insert(t.lexeme);
            ++c.total_operators;
        } else {
            operands.insert(t.lexeme);
            ++c.total_operands;
        }
    }
    c.distinct_operators = operators.size();
    c.distinct_operands = operands.size();
    return c;
}

}  // namespace qxpress
