#include "wfc/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "wfc/unicode.hpp"

namespace wfc {

namespace {

bool has_text_extension(const std::filesystem::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return char(std::tolower(c)); });
    return ext == ".txt" || ext == ".text";
}

std::string read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IngestError("cannot read file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IngestError("read failed: " + path.string());
    return std::move(buf).str();
}

}  // namespace

Corpus ingest_directory(const std::filesystem::path& dir, std::string label) {
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) {
        throw IngestError("not a readable directory: " + dir.string());
    }

    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && has_text_extension(entry.path())) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename() < b.filename(); });

    Corpus corpus;
    corpus.label = std::move(label);
    corpus.documents.reserve(files.size());
    for (const auto& file : files) {
        corpus.documents.push_back(
            {file.filename().string(), utf8_sanitize(read_file_bytes(file))});
    }
    return corpus;
}

FrequencyTable top_k(const CountMap& counts, std::string label, std::size_t k) {
    FrequencyTable table;
    table.label = std::move(label);
    for (const auto& [word, count] : counts) table.total_words += count;

    std::vector<FrequencyRow> rows;
    rows.reserve(counts.size());
    for (const auto& [word, count] : counts) {
        rows.push_back({word, count, double(count) / double(table.total_words)});
    }
    std::stable_sort(rows.begin(), rows.end(), [](const FrequencyRow& a, const FrequencyRow& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.word < b.word;
    });
    if (rows.size() > k) rows.resize(k);
    table.rows = std::move(rows);
    return table;
}

DistinctivenessReport distinctive_words(const CountMap& target, const CountMap& others,
                                        std::string label, std::size_t k) {
    DistinctivenessReport report;
    report.label = std::move(label);
    if (target.empty() && others.empty()) return report;

    std::uint64_t target_total = 0;
    std::uint64_t others_total = 0;
    std::size_t vocabulary = 0;
    for (const auto& [word, count] : target) target_total += count;
    for (const auto& [word, count] : others) others_total += count;
    {
        // union vocabulary size over two sorted maps
        auto ti = target.begin();
        auto oi = others.begin();
        while (ti != target.end() || oi != others.end()) {
            ++vocabulary;
            if (oi == others.end() || (ti != target.end() && ti->first < oi->first)) {
                ++ti;
            } else if (ti == target.end() || oi->first < ti->first) {
                ++oi;
            } else {
                ++ti;
                ++oi;
            }
        }
    }

    const double target_denom = double(target_total) + double(vocabulary);
    const double others_denom = double(others_total) + double(vocabulary);
    auto score_of = [&](std::uint64_t in_target, std::uint64_t in_others) {
        return std::log((double(in_target) + 1.0) / target_denom) -
               std::log((double(in_others) + 1.0) / others_denom);
    };

    std::vector<DistinctiveRow> rows;
    rows.reserve(vocabulary);
    auto count_in = [](const CountMap& m, const Word& w) -> std::uint64_t {
        auto it = m.find(w);
        return it == m.end() ? 0 : it->second;
    };
    for (const auto& [word, count] : target) {
        rows.push_back({word, score_of(count, count_in(others, word))});
    }
    for (const auto& [word, count] : others) {
        if (target.count(word) == 0) rows.push_back({word, score_of(0, count)});
    }

    std::stable_sort(rows.begin(), rows.end(), [](const DistinctiveRow& a, const DistinctiveRow& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.word < b.word;
    });
    if (rows.size() > k) rows.resize(k);
    report.rows = std::move(rows);
    return report;
}

std::unordered_set<Word> load_stopwords(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw IngestError("cannot read stop-word file: " + file.string());
    std::unordered_set<Word> stopwords;
    std::string line;
    while (std::getline(in, line)) {
        for (auto& word : tokenize({"stopwords", line}).words) {
            stopwords.insert(std::move(word));
        }
    }
    return stopwords;
}

CountMap remove_stopwords(CountMap counts, const std::unordered_set<Word>& stopwords) {
    for (auto it = counts.begin(); it != counts.end();) {
        it = stopwords.count(it->first) ? counts.erase(it) : std::next(it);
    }
    return counts;
}

}  // namespace wfc
