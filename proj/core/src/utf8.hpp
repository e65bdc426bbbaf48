#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace qxpress::utf8 {

struct Decoded {
    char32_t scalar = 0;
    std::size_t length = 0;  ///< bytes consumed; 0 on malformed input
};

inline Decoded decode(std::string_view s, std::size_t pos) {
    if (pos >= s.size()) return {};
    const auto b0 = static_cast<unsigned char>(s[pos]);
    if (b0 < 0x80) return {b0, 1};

    std::size_t len = 0;
    char32_t cp = 0;
    char32_t min = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2, cp = b0 & 0x1F, min = 0x80;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3, cp = b0 & 0x0F, min = 0x800;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4, cp = b0 & 0x07, min = 0x10000;
    } else {
        return {};
    }
    if (pos + len > s.size()) return {};
    for (std::size_t i = 1; i < len; ++i) {
        const auto b = static_cast<unsigned char>(s[pos + i]);
        if ((b & 0xC0) != 0x80) return {};
        cp = (cp << 6) | (b & 0x3F);
    }
    if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return {};
    return {cp, len};
}

/// Byte offset of the first malformed sequence, or nullopt when valid.
inline std::optional<std::size_t> find_invalid(std::string_view s) {
    std::size_t pos = 0;
    while (pos < s.size()) {
        const auto d = decode(s, pos);
        if (d.length == 0) return pos;
        pos += d.length;
    }
    return std::nullopt;
}

inline void append(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

/// Number of scalar values; malformed bytes count one each.
inline std::size_t length(std::string_view s) {
    std::size_t n = 0;
    for (std::size_t pos = 0; pos < s.size(); ++n) {
        const auto d = decode(s, pos);
        pos += d.length == 0 ? 1 : d.length;
    }
    return n;
}

}  // namespace qxpress::utf8
