#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wfc {

using Word = std::string;  // normalized token, canonical UTF-8 bytes

struct RawDocument {
    std::string id;
    std::string text;
};

// Word tokens in document order; `sorted` marks byte-wise lexicographic order.
struct WordList {
    std::vector<Word> words;
    bool sorted = false;
};

// Lowercases a whitespace-free fragment and strips leading/trailing
// non-word characters. Interior apostrophes and hyphens survive
// ("don't", "re-elect"). Returns nullopt when nothing remains.
std::optional<Word> normalize_word(std::string_view fragment);

// Splits on Unicode whitespace and normalizes each fragment, dropping the
// ones that normalize to nothing. Output follows text order, unsorted.
WordList tokenize(const RawDocument& doc);

// Stable byte-wise lexicographic sort; duplicates preserved.
WordList sort_words(WordList list);

}  // namespace wfc
