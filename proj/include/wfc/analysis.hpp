#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "wfc/reduce.hpp"
#include "wfc/text.hpp"

namespace wfc {

struct Corpus {
    std::string label;
    std::vector<RawDocument> documents;
};

class IngestError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Reads every plain-text file (.txt/.text) in `dir` as one document, in
// file-name order; file name becomes the document id. Invalid UTF-8 bytes
// are replaced with U+FFFD.
Corpus ingest_directory(const std::filesystem::path& dir, std::string label);

struct FrequencyRow {
    Word word;
    std::uint64_t count = 0;
    double rel_freq = 0.0;  // count / total_words
};

// Rows sorted by count descending, ties by word ascending, truncated to k.
// total_words always covers the whole map, not just the kept rows.
struct FrequencyTable {
    std::string label;
    std::uint64_t total_words = 0;
    std::vector<FrequencyRow> rows;
};

FrequencyTable top_k(const CountMap& counts, std::string label, std::size_t k);

struct DistinctiveRow {
    Word word;
    double score = 0.0;
};

// Words ranked by how much more often the target corpus uses them than the
// pooled others: score = log((c_t + 1)/(T_t + V)) - log((c_o + 1)/(T_o + V))
// with add-one smoothing over the union vocabulary of size V. Swapping the
// corpus roles negates every score.
struct DistinctivenessReport {
    std::string label;
    std::vector<DistinctiveRow> rows;
};

DistinctivenessReport distinctive_words(const CountMap& target, const CountMap& others,
                                        std::string label, std::size_t k);

// One word per line, normalized like document tokens; blank lines skipped.
std::unordered_set<Word> load_stopwords(const std::filesystem::path& file);

CountMap remove_stopwords(CountMap counts, const std::unordered_set<Word>& stopwords);

}  // namespace wfc
