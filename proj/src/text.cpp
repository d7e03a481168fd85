#include "wfc/text.hpp"

#include <algorithm>

#include "wfc/unicode.hpp"

namespace wfc {

std::optional<Word> normalize_word(std::string_view fragment) {
    // Decode once, folding case as we go. Invalid bytes decode to U+FFFD,
    // which is not a word character.
    std::vector<char32_t> cps;
    cps.reserve(fragment.size());
    std::size_t pos = 0;
    while (pos < fragment.size()) {
        const DecodedChar d = utf8_decode(fragment, pos);
        cps.push_back(simple_lower(d.cp));
        pos += d.length;
    }

    std::size_t first = 0;
    while (first < cps.size() && !is_word_char(cps[first])) ++first;
    if (first == cps.size()) return std::nullopt;
    std::size_t last = cps.size() - 1;
    while (!is_word_char(cps[last])) --last;

    Word out;
    for (std::size_t i = first; i <= last; ++i) utf8_append(out, cps[i]);
    return out;
}

WordList tokenize(const RawDocument& doc) {
    WordList list;
    const std::string_view text = doc.text;
    std::size_t pos = 0;
    std::size_t start = 0;
    bool in_fragment = false;
    auto flush = [&](std::size_t end) {
        if (!in_fragment) return;
        if (auto word = normalize_word(text.substr(start, end - start))) {
            list.words.push_back(std::move(*word));
        }
        in_fragment = false;
    };
    while (pos < text.size()) {
        const DecodedChar d = utf8_decode(text, pos);
        if (d.valid && is_unicode_space(d.cp)) {
            flush(pos);
        } else if (!in_fragment) {
            start = pos;
            in_fragment = true;
        }
        pos += d.length;
    }
    flush(text.size());
    return list;
}

WordList sort_words(WordList list) {
    std::stable_sort(list.words.begin(), list.words.end());
    list.sorted = true;
    return list;
}

}  // namespace wfc
