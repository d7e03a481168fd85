#pragma once

// Test-only corpus generators and small helpers shared across suites.

#include <algorithm>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "wfc/text.hpp"

namespace wfc::test {

using Rng = std::mt19937_64;

// Vocabulary word i; zero-padded so lexicographic order matches numeric order.
inline std::string vocab_word(std::size_t i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "w%04zu", i);
    return buf;
}

inline std::vector<std::string> random_words(Rng& rng, std::size_t n, std::size_t vocab) {
    std::uniform_int_distribution<std::size_t> pick(0, vocab - 1);
    std::vector<std::string> words(n);
    for (auto& w : words) w = vocab_word(pick(rng));
    return words;
}

inline RawDocument make_document(std::string id, const std::vector<std::string>& words) {
    std::string text;
    for (const auto& w : words) {
        if (!text.empty()) text += ' ';
        text += w;
    }
    return {std::move(id), std::move(text)};
}

// Documents with independently random contents; workers see unrelated word
// distributions.
inline std::vector<RawDocument> iid_corpus(Rng& rng, std::size_t docs, std::size_t words_per_doc,
                                           std::size_t vocab) {
    std::vector<RawDocument> corpus;
    corpus.reserve(docs);
    for (std::size_t d = 0; d < docs; ++d) {
        corpus.push_back(make_document("doc" + std::to_string(d),
                                       random_words(rng, words_per_doc, vocab)));
    }
    return corpus;
}

// Documents in groups of `group_size` consecutive indices sharing one word
// multiset (orders shuffled per copy), with word counts that are multiples
// of group_size. Round-robin assignment over any worker count dividing
// group_size then gives every worker the same multiset, of a size every
// such worker count divides.
inline std::vector<RawDocument> balanced_corpus(Rng& rng, std::size_t groups,
                                                std::size_t group_size,
                                                std::size_t max_words_per_doc,
                                                std::size_t vocab) {
    std::vector<RawDocument> corpus;
    corpus.reserve(groups * group_size);
    std::uniform_int_distribution<std::size_t> doc_words(1, max_words_per_doc / group_size);
    for (std::size_t g = 0; g < groups; ++g) {
        const std::size_t m = group_size * doc_words(rng);
        std::vector<std::string> words = random_words(rng, m, vocab);
        for (std::size_t c = 0; c < group_size; ++c) {
            std::shuffle(words.begin(), words.end(), rng);
            corpus.push_back(
                make_document("doc" + std::to_string(g * group_size + c), words));
        }
    }
    return corpus;
}

inline std::vector<std::string> sorted_copy(std::vector<std::string> words) {
    std::sort(words.begin(), words.end());
    return words;
}

}  // namespace wfc::test
