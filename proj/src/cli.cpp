#include "wfc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>

#include <CLI11.hpp>

#include "wfc/analysis.hpp"
#include "wfc/engine.hpp"
#include "wfc/pipeline.hpp"
#include "wfc/report.hpp"

namespace wfc::cli {

namespace {

constexpr std::size_t kDefaultTop = 25;
constexpr std::size_t kDefaultDistinct = 25;

std::string format_exact(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::uint64_t now_ns() {
    return std::uint64_t(std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now().time_since_epoch()).count());
}

struct WordcountOpts {
    std::string input;
    std::size_t workers = 1;
    std::string format = "tsv";
    std::size_t top = kDefaultTop;
    std::string stopwords;
    bool timings = false;
    std::string timings_out;
};

struct BenchOpts {
    std::string map = "identity";
    std::uint64_t n = 0;
    std::size_t block = 256;
    unsigned workers = 1;
    unsigned repeat = 3;
    std::uint64_t seed = 1;
    std::string format = "tsv";
};

struct CompareOpts {
    std::vector<std::string> corpora;
    std::size_t workers = 1;
    std::string format = "tsv";
    std::size_t top = kDefaultTop;
    std::size_t distinct = kDefaultDistinct;
    std::string stopwords;
    bool timings = false;
    std::string timings_out;
};

void emit_timings(const StageTimings& timings, const std::string& timings_out, bool to_err,
                  std::ostream& err, const std::string& label) {
    if (!timings_out.empty()) {
        std::ofstream file(timings_out, std::ios::app);
        if (!file) throw std::runtime_error("cannot write timings file: " + timings_out);
        if (!label.empty()) file << "corpus\t" << label << '\n';
        write_timings_tsv(file, timings);
    } else if (to_err) {
        if (!label.empty()) err << "corpus\t" << label << '\n';
        write_timings_tsv(err, timings);
    }
}

CountMap counts_for_directory(const std::string& dir, const std::string& label,
                              std::size_t workers, const std::unordered_set<Word>& stopwords,
                              StageTimings* timings_out) {
    Corpus corpus = ingest_directory(dir, label);
    RunResult run = run_wordcount(corpus.documents, workers);
    if (timings_out != nullptr) *timings_out = run.timings;
    return remove_stopwords(std::move(run.counts), stopwords);
}

int cmd_wordcount(const WordcountOpts& opts, std::ostream& out, std::ostream& err) {
    std::unordered_set<Word> stopwords;
    if (!opts.stopwords.empty()) stopwords = load_stopwords(opts.stopwords);

    const std::string label = std::filesystem::path(opts.input).filename().string();
    StageTimings timings;
    CountMap counts = counts_for_directory(opts.input, label, opts.workers, stopwords, &timings);
    FrequencyTable table = top_k(counts, label, opts.top);

    if (opts.format == "json") {
        out << frequency_json(table).dump() << '\n';
    } else {
        write_frequency_tsv(out, table);
    }
    emit_timings(timings, opts.timings_out, opts.timings, err, "");
    return 0;
}

MapKind parse_map_kind(const std::string& name) {
    if (name == "identity") return MapKind::identity;
    if (name == "sqrt") return MapKind::square_root;
    return MapKind::alternating_harmonic_term;
}

std::uint64_t median_ns(std::vector<std::uint64_t> samples) {
    std::sort(samples.begin(), samples.end());
    return samples[(samples.size() - 1) / 2];  // lower median
}

int cmd_bench(const BenchOpts& opts, std::ostream& out, std::ostream&) {
    const MapKind map = parse_map_kind(opts.map);

    std::vector<double> values(opts.n, 0.0);
    if (map != MapKind::alternating_harmonic_term) {
        std::mt19937_64 rng(opts.seed);
        std::uniform_real_distribution<double> uniform(0.0, 1.0);
        for (auto& v : values) v = uniform(rng);
    }

    const BlockConfig cfg{opts.block, opts.workers};
    struct Rec {
        const char* engine;
        unsigned run;
        std::uint64_t ns;
        double value;
    };
    std::vector<Rec> records;
    std::vector<std::uint64_t> serial_ns, blocked_ns;
    for (unsigned r = 0; r < opts.repeat; ++r) {
        std::uint64_t t0 = now_ns();
        const double serial = map_reduce_serial(values, map);
        const std::uint64_t ts = now_ns() - t0;
        t0 = now_ns();
        const double blocked = map_reduce_blocked(values, map, cfg);
        const std::uint64_t tb = now_ns() - t0;
        records.push_back({"serial", r, ts, serial});
        records.push_back({"blocked", r, tb, blocked});
        serial_ns.push_back(ts);
        blocked_ns.push_back(tb);
    }
    const std::uint64_t serial_median = median_ns(serial_ns);
    const std::uint64_t blocked_median = median_ns(blocked_ns);
    const double speedup = blocked_median == 0 ? 0.0 : double(serial_median) / double(blocked_median);

    if (opts.format == "json") {
        nlohmann::json runs = nlohmann::json::array();
        for (const auto& rec : records) {
            runs.push_back({{"engine", rec.engine},
                            {"run", rec.run},
                            {"ns", rec.ns},
                            {"value", rec.value}});
        }
        nlohmann::json doc = {{"runs", runs},
                              {"median_ns", {{"serial", serial_median}, {"blocked", blocked_median}}},
                              {"speedup", speedup}};
        out << doc.dump() << '\n';
    } else {
        for (const auto& rec : records) {
            out << "run\t" << rec.engine << '\t' << rec.run << '\t' << rec.ns << '\t'
                << format_exact(rec.value) << '\n';
        }
        out << "median\tserial\t" << serial_median << '\n';
        out << "median\tblocked\t" << blocked_median << '\n';
        out << "speedup\t" << format_double(speedup) << '\n';
    }
    return 0;
}

int cmd_compare(const CompareOpts& opts, std::ostream& out, std::ostream& err) {
    std::vector<std::pair<std::string, std::string>> corpora;  // label, dir
    std::set<std::string> seen;
    for (const auto& spec : opts.corpora) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
            err << "error: --corpus expects LABEL=DIR, got '" << spec << "'\n";
            return 2;
        }
        std::string label = spec.substr(0, eq);
        if (!seen.insert(label).second) {
            err << "error: duplicate corpus label '" << label << "'\n";
            return 2;
        }
        corpora.emplace_back(std::move(label), spec.substr(eq + 1));
    }
    if (corpora.size() < 2) {
        err << "error: compare needs at least two --corpus LABEL=DIR pairs\n";
        return 2;
    }

    std::unordered_set<Word> stopwords;
    if (!opts.stopwords.empty()) stopwords = load_stopwords(opts.stopwords);

    std::vector<CountMap> counts;
    counts.reserve(corpora.size());
    for (const auto& [label, dir] : corpora) {
        StageTimings timings;
        try {
            counts.push_back(counts_for_directory(dir, label, opts.workers, stopwords, &timings));
        } catch (const IngestError& e) {
            throw IngestError("corpus '" + label + "': " + e.what());
        }
        emit_timings(timings, opts.timings_out, opts.timings, err, label);
    }

    nlohmann::json json_doc = nlohmann::json::array();
    for (std::size_t i = 0; i < corpora.size(); ++i) {
        CountMap pooled_others;
        for (std::size_t o = 0; o < corpora.size(); ++o) {
            if (o == i) continue;
            for (const auto& [word, count] : counts[o]) pooled_others[word] += count;
        }
        FrequencyTable table = top_k(counts[i], corpora[i].first, opts.top);
        DistinctivenessReport report =
            distinctive_words(counts[i], pooled_others, corpora[i].first, opts.distinct);
        if (opts.format == "json") {
            json_doc.push_back(compare_json(table, report));
        } else {
            write_compare_tsv(out, table, report);
        }
    }
    if (opts.format == "json") out << json_doc.dump() << '\n';
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"word-frequency MapReduce pipeline, reduction benchmarks and corpus comparison"};
    app.name("wfc");
    app.require_subcommand(1);

    const auto format_check = CLI::IsMember({"tsv", "json"});
    const auto workers_check = CLI::Range(std::size_t(1), std::size_t(4096));

    WordcountOpts wc;
    auto* wordcount = app.add_subcommand("wordcount", "count word frequencies in a directory of text files");
    wordcount->add_option("--input", wc.input, "directory of .txt documents")->required();
    wordcount->add_option("--workers", wc.workers, "pipeline worker count")->check(workers_check);
    wordcount->add_option("--format", wc.format, "output format")->check(format_check);
    wordcount->add_option("--top", wc.top, "rows to report");
    wordcount->add_option("--stopwords", wc.stopwords, "file of words to drop from the report");
    wordcount->add_flag("--timings", wc.timings, "write per-stage timings to the error stream");
    wordcount->add_option("--timings-out", wc.timings_out, "write per-stage timings to a file");

    BenchOpts bench;
    auto* bench_cmd = app.add_subcommand("bench", "time the serial and blocked reduction engines");
    bench_cmd->add_option("--map", bench.map, "map function")
        ->required()
        ->check(CLI::IsMember({"identity", "sqrt", "altharm"}));
    bench_cmd->add_option("--n", bench.n, "element count")->required();
    bench_cmd->add_option("--block", bench.block, "elements per block")
        ->check(CLI::Range(std::size_t(1), std::size_t(1) << 30));
    bench_cmd->add_option("--workers", bench.workers, "folding worker count")
        ->check(CLI::Range(1u, 4096u));
    bench_cmd->add_option("--repeat", bench.repeat, "runs per engine")
        ->check(CLI::Range(1u, 1000u));
    bench_cmd->add_option("--seed", bench.seed, "seed for synthetic inputs");
    bench_cmd->add_option("--format", bench.format, "output format")->check(format_check);

    CompareOpts cmp;
    auto* compare = app.add_subcommand("compare", "rank each corpus's words against the pooled others");
    compare->add_option("--corpus", cmp.corpora, "LABEL=DIR pair (repeat for each corpus)");
    compare->add_option("--workers", cmp.workers, "pipeline worker count")->check(workers_check);
    compare->add_option("--format", cmp.format, "output format")->check(format_check);
    compare->add_option("--top", cmp.top, "frequency rows per corpus");
    compare->add_option("--distinct", cmp.distinct, "distinctiveness rows per corpus");
    compare->add_option("--stopwords", cmp.stopwords, "file of words to drop from the reports");
    compare->add_flag("--timings", cmp.timings, "write per-stage timings to the error stream");
    compare->add_option("--timings-out", cmp.timings_out, "write per-stage timings to a file");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("wfc");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (wordcount->parsed()) return cmd_wordcount(wc, out, err);
        if (bench_cmd->parsed()) return cmd_bench(bench, out, err);
        return cmd_compare(cmp, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace wfc::cli
