#include "wfc/unicode.hpp"

namespace wfc {

namespace {

inline bool is_continuation(std::uint8_t b) { return (b & 0xC0) == 0x80; }

}  // namespace

DecodedChar utf8_decode(std::string_view text, std::size_t pos) {
    const auto* bytes = reinterpret_cast<const std::uint8_t*>(text.data());
    const std::size_t n = text.size();
    if (pos >= n) return {};

    const std::uint8_t b0 = bytes[pos];
    if (b0 < 0x80) return {b0, 1, true};

    if (b0 >= 0xC2 && b0 <= 0xDF) {
        if (pos + 1 >= n || !is_continuation(bytes[pos + 1])) return {};
        char32_t cp = (char32_t(b0 & 0x1F) << 6) | (bytes[pos + 1] & 0x3F);
        return {cp, 2, true};
    }
    if (b0 >= 0xE0 && b0 <= 0xEF) {
        if (pos + 2 >= n) return {};
        const std::uint8_t b1 = bytes[pos + 1], b2 = bytes[pos + 2];
        const std::uint8_t lo = (b0 == 0xE0) ? 0xA0 : 0x80;
        const std::uint8_t hi = (b0 == 0xED) ? 0x9F : 0xBF;  // excludes surrogates
        if (b1 < lo || b1 > hi || !is_continuation(b2)) return {};
        char32_t cp = (char32_t(b0 & 0x0F) << 12) | (char32_t(b1 & 0x3F) << 6) | (b2 & 0x3F);
        return {cp, 3, true};
    }
    if (b0 >= 0xF0 && b0 <= 0xF4) {
        if (pos + 3 >= n) return {};
        const std::uint8_t b1 = bytes[pos + 1], b2 = bytes[pos + 2], b3 = bytes[pos + 3];
        const std::uint8_t lo = (b0 == 0xF0) ? 0x90 : 0x80;
        const std::uint8_t hi = (b0 == 0xF4) ? 0x8F : 0xBF;  // caps at U+10FFFF
        if (b1 < lo || b1 > hi || !is_continuation(b2) || !is_continuation(b3)) return {};
        char32_t cp = (char32_t(b0 & 0x07) << 18) | (char32_t(b1 & 0x3F) << 12) |
                      (char32_t(b2 & 0x3F) << 6) | (b3 & 0x3F);
        return {cp, 4, true};
    }
    return {};
}

bool utf8_valid(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size()) {
        const DecodedChar d = utf8_decode(text, pos);
        if (!d.valid) return false;
        pos += d.length;
    }
    return true;
}

std::string utf8_sanitize(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t pos = 0;
    while (pos < text.size()) {
        const DecodedChar d = utf8_decode(text, pos);
        if (d.valid) {
            out.append(text.substr(pos, d.length));
        } else {
            utf8_append(out, kReplacementChar);
        }
        pos += d.length;
    }
    return out;
}

void utf8_append(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(char(cp));
    } else if (cp < 0x800) {
        out.push_back(char(0xC0 | (cp >> 6)));
        out.push_back(char(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(char(0xE0 | (cp >> 12)));
        out.push_back(char(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(char(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(char(0xF0 | (cp >> 18)));
        out.push_back(char(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(char(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(char(0x80 | (cp & 0x3F)));
    }
}

bool is_unicode_space(char32_t cp) {
    switch (cp) {
        case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D:
        case 0x20: case 0x85: case 0xA0: case 0x1680:
        case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

bool is_word_char(char32_t cp) {
    if (cp < 0x80) {
        return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
    }
    if (cp == kReplacementChar) return false;
    if (cp >= 0xA1 && cp <= 0xBF) return cp == 0xAA || cp == 0xB5 || cp == 0xBA;
    if (cp == 0xD7 || cp == 0xF7) return false;
    if (cp >= 0x2000 && cp <= 0x206F) return false;   // general punctuation
    if (cp >= 0x3000 && cp <= 0x303F) return false;   // CJK punctuation
    if (cp >= 0xFF01 && cp <= 0xFF0F) return false;   // fullwidth punctuation
    if (cp >= 0xFF1A && cp <= 0xFF20) return false;
    if (cp >= 0xFF3B && cp <= 0xFF40) return false;
    if (cp >= 0xFF5B && cp <= 0xFF65) return false;
    return !is_unicode_space(cp);
}

char32_t simple_lower(char32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;  // Latin-1
    return cp;
}

}  // namespace wfc
