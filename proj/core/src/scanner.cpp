#include "scanner.hpp"

#include <algorithm>

#include "utf8.hpp"

namespace qxpress::detail {

namespace {

bool is_space(char32_t c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v' || c == 0xA0 ||
           c == 0xFEFF;
}

bool is_ascii_digit(char32_t c) { return c >= '0' && c <= '9'; }

bool is_ascii_letter(char32_t c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

bool starts_with_nocase(std::string_view text, std::size_t pos, std::string_view s) {
    if (pos + s.size() > text.size()) return false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (ascii_lower(text[pos + i]) != ascii_lower(s[i])) return false;
    }
    return true;
}

std::set<char32_t> scalars_of(std::string_view s) {
    std::set<char32_t> out;
    for (std::size_t pos = 0; pos < s.size();) {
        const auto d = utf8::decode(s, pos);
        if (d.length == 0) break;
        out.insert(d.scalar);
        pos += d.length;
    }
    return out;
}

char32_t first_scalar(std::string_view s) { return utf8::decode(s, 0).scalar; }

char32_t last_scalar(std::string_view s) {
    std::size_t pos = s.size();
    while (pos > 0) {
        --pos;
        if ((static_cast<unsigned char>(s[pos]) & 0xC0) != 0x80) break;
    }
    return utf8::decode(s, pos).scalar;
}

}  // namespace

bool is_ascii_word(char32_t c) { return is_ascii_letter(c) || is_ascii_digit(c) || c == '_'; }

CompiledProfile::CompiledProfile(const LanguageProfile& profile)
    : profile_(&profile),
      identifier_extra_(scalars_of(profile.identifier_extra)),
      operand_glyphs_(scalars_of(profile.operand_glyphs)),
      literal_glyphs_(scalars_of(profile.literal_glyphs)) {
    auto is_word_scalar = [&](char32_t c) {
        return is_ascii_word(c) || identifier_extra_.count(c) != 0;
    };
    for (const auto& lexeme : profile.operator_lexemes) {
        if (lexeme.empty()) continue;
        const auto scalars = scalars_of(lexeme);
        const char32_t head = first_scalar(lexeme);
        const bool word = !is_ascii_digit(head) && is_word_scalar(head) &&
                          std::all_of(scalars.begin(), scalars.end(), is_word_scalar);
        if (word) {
            words_.insert(lexeme);
        } else {
            symbols_.push_back(lexeme);
        }
    }
    std::sort(symbols_.begin(), symbols_.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });

    delimiters_ = profile.string_delimiters;
    std::stable_sort(delimiters_.begin(), delimiters_.end(),
                     [](const auto& a, const auto& b) { return a.open.size() > b.open.size(); });
    line_comments_ = profile.comment_markers.line;
    std::stable_sort(line_comments_.begin(), line_comments_.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });

    auto claim = [&](std::string_view s) {
        if (s.empty()) return;
        const char32_t c = first_scalar(s);
        if (c >= 0x80 && identifier_extra_.count(c) == 0) claimed_.insert(c);
    };
    for (const auto& s : symbols_) claim(s);
    for (const auto& s : line_comments_) claim(s);
    for (const auto& b : profile.comment_markers.block) claim(b.open);
    for (const auto& d : delimiters_) claim(d.open);
    for (const auto& p : profile.bracket_pairs) {
        claim(p.open);
        claim(p.close);
    }
    claim(profile.negative_number_prefix);
    claimed_.insert(operand_glyphs_.begin(), operand_glyphs_.end());
    claimed_.insert(literal_glyphs_.begin(), literal_glyphs_.end());
}

bool CompiledProfile::is_identifier_start(char32_t c) const {
    if (is_ascii_letter(c) || c == '_') return true;
    if (identifier_extra_.count(c) != 0) return true;
    return c >= 0x80 && profile_->unicode_identifiers && claimed_.count(c) == 0 && !is_space(c);
}

bool CompiledProfile::is_identifier_continue(char32_t c) const {
    return is_ascii_digit(c) || is_identifier_start(c);
}

namespace {

class Scanner {
public:
    Scanner(std::string_view text, const CompiledProfile& profile)
        : text_(text), cp_(profile), p_(profile.profile()) {}

    std::vector<RawToken> run() {
        while (pos_ < text_.size()) step();
        return std::move(tokens_);
    }

private:
    char32_t peek(std::size_t at) const {
        const auto d = utf8::decode(text_, at);
        return d.length == 0 ? (at < text_.size() ? 0xFFFD : 0) : d.scalar;
    }

    std::size_t scalar_len(std::size_t at) const {
        const auto d = utf8::decode(text_, at);
        return d.length == 0 ? 1 : d.length;
    }

    bool at(std::size_t where, std::string_view s) const {
        return !s.empty() && text_.substr(where).starts_with(s);
    }

    void advance_to(std::size_t target) {
        while (pos_ < target && pos_ < text_.size()) {
            const char32_t c = peek(pos_);
            if (c == '\n') {
                ++line_;
                column_ = 1;
            } else {
                ++column_;
            }
            last_ = c;
            pos_ += scalar_len(pos_);
        }
    }

    bool rest_of_line_blank(std::size_t from) const {
        while (from < text_.size()) {
            const char32_t c = peek(from);
            if (c == '\n') return true;
            if (!is_space(c)) return false;
            from += scalar_len(from);
        }
        return true;
    }

    std::size_t line_end(std::size_t from) const {
        const auto nl = text_.find('\n', from);
        return nl == std::string_view::npos ? text_.size() : nl;
    }

    RawToken& emit(RawKind kind, std::size_t end) {
        RawToken t;
        t.kind = kind;
        t.begin = pos_;
        t.end = end;
        t.line = line_;
        t.column = column_;
        advance_to(end);
        t.end_line = line_;
        tokens_.push_back(t);
        if (kind == RawKind::comment) {
            if (t.end_line != t.line) code_on_line_ = false;
        } else {
            code_on_line_ = true;
        }
        return tokens_.back();
    }

    void step() {
        const char32_t c = peek(pos_);
        if (c == '\n') {
            advance_to(pos_ + 1);
            code_on_line_ = false;
            line_is_continuation_ = pending_continuation_;
            pending_continuation_ = false;
            return;
        }
        if (is_space(c)) {
            advance_to(pos_ + scalar_len(pos_));
            return;
        }
        const auto& cont = p_.line_continuation;
        if (at(pos_, cont) && rest_of_line_blank(pos_ + cont.size())) {
            advance_to(pos_ + cont.size());
            pending_continuation_ = true;
            return;
        }
        if (scan_comment()) return;
        if (scan_string()) return;
        if (scan_number(c)) return;
        if (cp_.is_operand_glyph(c)) {
            emit(RawKind::operand_glyph, pos_ + scalar_len(pos_));
            return;
        }
        if (cp_.is_literal_glyph(c)) {
            emit(RawKind::literal_glyph, pos_ + scalar_len(pos_));
            return;
        }
        if (cp_.is_identifier_start(c)) {
            if (scan_symbol(false)) return;
            std::size_t end = pos_;
            while (end < text_.size() && cp_.is_identifier_continue(peek(end))) {
                end += scalar_len(end);
            }
            emit(RawKind::word, end);
            return;
        }
        if (scan_bracket()) return;
        scan_symbol();
    }

    bool scan_comment() {
        std::size_t line_len = 0;
        for (const auto& m : cp_.line_comments()) {
            if (at(pos_, m)) {
                line_len = m.size();
                break;
            }
        }
        const BlockComment* block = nullptr;
        for (const auto& b : p_.comment_markers.block) {
            if (at(pos_, b.open) && (block == nullptr || b.open.size() > block->open.size())) {
                block = &b;
            }
        }
        if (block != nullptr && block->open.size() >= line_len) {
            const auto close = text_.find(block->close, pos_ + block->open.size());
            const bool found = close != std::string_view::npos && !block->close.empty();
            auto& t = emit(RawKind::comment, found ? close + block->close.size() : text_.size());
            t.unterminated = !found;
            return true;
        }
        if (line_len > 0) {
            emit(RawKind::comment, line_end(pos_));
            return true;
        }
        return false;
    }

    const StringDelimiter* delimiter_at(std::size_t where) const {
        for (const auto& d : cp_.delimiters()) {
            if (at(where, d.open)) return &d;
        }
        return nullptr;
    }

    bool scan_string() {
        std::size_t body = pos_;
        const StringDelimiter* delim = nullptr;
        const bool boundary = pos_ == 0 || !cp_.is_identifier_continue(last_);
        if (boundary) {
            for (const auto& prefix : p_.string_prefixes) {
                if (prefix.empty() || !starts_with_nocase(text_, pos_, prefix)) continue;
                if (const auto* d = delimiter_at(pos_ + prefix.size())) {
                    delim = d;
                    body = pos_ + prefix.size();
                    break;
                }
            }
        }
        if (delim == nullptr) delim = delimiter_at(pos_);
        if (delim == nullptr) return false;
        body += delim->open.size();

        bool unterminated = false;
        std::size_t end = body;
        for (;;) {
            if (end >= text_.size()) {
                unterminated = true;
                end = text_.size();
                break;
            }
            if (at(end, delim->close)) {
                if (delim->escape == StringEscape::doubled_quote &&
                    at(end + delim->close.size(), delim->close)) {
                    end += 2 * delim->close.size();
                    continue;
                }
                end += delim->close.size();
                break;
            }
            const char ch = text_[end];
            if (delim->escape == StringEscape::backslash && ch == '\\' && end + 1 < text_.size()) {
                end += 1 + scalar_len(end + 1);
                continue;
            }
            if (ch == '\n' && !delim->multiline) {
                unterminated = true;
                break;
            }
            end += scalar_len(end);
        }

        const bool may_be_doc = p_.docstrings_are_comments && !unterminated && depth_.empty() &&
                                !code_on_line_ && !line_is_continuation_;
        auto& t = emit(RawKind::string, end);
        t.unterminated = unterminated;
        if (may_be_doc) t.docstring = ends_statement(end);
        return true;
    }

    /// Only whitespace or a line comment between `from` and the line end.
    bool ends_statement(std::size_t from) const {
        while (from < text_.size()) {
            const char32_t c = peek(from);
            if (c == '\n') return true;
            if (!is_space(c)) {
                for (const auto& m : cp_.line_comments()) {
                    if (at(from, m)) return true;
                }
                return false;
            }
            from += scalar_len(from);
        }
        return true;
    }

    bool scan_number(char32_t c) {
        const auto& neg = p_.negative_number_prefix;
        const bool negated = at(pos_, neg);
        std::size_t digits = negated ? pos_ + neg.size() : pos_;
        const char32_t first = peek(digits);
        const bool starts = is_ascii_digit(first) ||
                            (first == '.' && is_ascii_digit(peek(digits + 1)) && last_ != '.');
        if (!starts || (!negated && !(is_ascii_digit(c) || c == '.'))) return false;

        std::size_t end = digits;
        auto run = [&] {
            while (end < text_.size() && is_ascii_word(static_cast<unsigned char>(text_[end]))) ++end;
        };
        if (first == '.') ++end;
        run();
        const auto lead = text_.substr(digits, 2);
        const bool radix = lead.size() == 2 && lead[0] == '0' &&
                           std::string_view("xXbBoO").find(lead[1]) != std::string_view::npos;
        for (;;) {
            if (end + 1 < text_.size() && text_[end] == '.' && text_[end - 1] != '.' &&
                is_ascii_digit(static_cast<unsigned char>(text_[end + 1])) && !radix) {
                ++end;
                run();
                continue;
            }
            const char prev = text_[end - 1];
            const bool exponent = !radix && (prev == 'e' || prev == 'E');
            const bool complex_part = !neg.empty() && (prev == 'j' || prev == 'J');
            if (exponent || complex_part) {
                std::size_t sign = 0;
                if (exponent && end < text_.size() && (text_[end] == '+' || text_[end] == '-')) {
                    sign = 1;
                } else if (at(end, neg)) {
                    sign = neg.size();
                }
                if (sign > 0 && end + sign < text_.size() &&
                    is_ascii_digit(static_cast<unsigned char>(text_[end + sign]))) {
                    end += sign;
                    run();
                    continue;
                }
            }
            break;
        }
        emit(RawKind::number, end);
        return true;
    }

    bool scan_bracket() {
        const auto& pairs = p_.bracket_pairs;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (at(pos_, pairs[i].open)) {
                auto& t = emit(RawKind::opener, pos_ + pairs[i].open.size());
                t.bracket = i;
                depth_.push_back(i);
                return true;
            }
        }
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (!at(pos_, pairs[i].close)) continue;
            const auto it = std::find(depth_.rbegin(), depth_.rend(), i);
            const bool matched = it != depth_.rend();
            if (matched) depth_.erase(std::next(it).base(), depth_.end());
            auto& t = emit(RawKind::closer, pos_ + pairs[i].close.size());
            t.bracket = i;
            t.matched = matched;
            return true;
        }
        return false;
    }

    /// Maximal munch over symbolic lexemes; a lexeme ending in a word
    /// character must not run into a following word character.
    bool scan_symbol(bool fallback = true) {
        for (const auto& s : cp_.symbols()) {
            if (!at(pos_, s)) continue;
            const std::size_t end = pos_ + s.size();
            if (cp_.is_identifier_continue(last_scalar(s)) && end < text_.size() &&
                cp_.is_identifier_continue(peek(end))) {
                continue;
            }
            emit(RawKind::symbol, end);
            return true;
        }
        if (!fallback) return false;
        emit(RawKind::symbol, pos_ + scalar_len(pos_));
        return true;
    }

    std::string_view text_;
    const CompiledProfile& cp_;
    const LanguageProfile& p_;
    std::vector<RawToken> tokens_;
    std::vector<std::size_t> depth_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
    char32_t last_ = 0;
    bool code_on_line_ = false;
    bool line_is_continuation_ = false;
    bool pending_continuation_ = false;
};

}  // namespace

std::vector<RawToken> scan(std::string_view text, const CompiledProfile& profile) {
    return Scanner(text, profile).run();
}

}  // namespace qxpress::detail
