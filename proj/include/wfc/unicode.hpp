#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace wfc {

inline constexpr char32_t kReplacementChar = 0xFFFD;

struct DecodedChar {
    char32_t cp = kReplacementChar;
    unsigned length = 1;  // bytes consumed
    bool valid = false;
};

// Strict UTF-8 decoding of the code point starting at `pos`. Overlong forms,
// surrogates and values above U+10FFFF are invalid; an invalid prefix consumes
// exactly one byte.
DecodedChar utf8_decode(std::string_view text, std::size_t pos);

bool utf8_valid(std::string_view text);

// Copy of `text` with every invalid byte replaced by U+FFFD.
std::string utf8_sanitize(std::string_view text);

void utf8_append(std::string& out, char32_t cp);

// Unicode White_Space code points.
bool is_unicode_space(char32_t cp);

// Characters that may appear inside a word token. ASCII keeps letters and
// digits only; non-ASCII keeps everything except a pinned set of punctuation
// ranges (Latin-1 punctuation, general punctuation, CJK/fullwidth punctuation)
// and U+FFFD.
bool is_word_char(char32_t cp);

// One-to-one lowercase mapping for ASCII and the Latin-1 supplement.
char32_t simple_lower(char32_t cp);

}  // namespace wfc
