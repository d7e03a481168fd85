#include "wfc/pipeline.hpp"

#include <chrono>
#include <exception>
#include <functional>
#include <thread>
#include <utility>
#include <vector>

#include "wfc/shuffle.hpp"

namespace wfc {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ns(Clock::time_point since) {
    return std::uint64_t(std::chrono::duration_cast<std::chrono::nanoseconds>(
        Clock::now() - since).count());
}

// Runs body(j) for each worker on its own thread, then rethrows the
// lowest-indexed failure so error reporting is deterministic.
void for_each_worker(std::size_t n, const std::function<void(std::size_t)>& body) {
    if (n == 1) {
        body(0);
        return;
    }
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> threads;
    threads.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        threads.emplace_back([&, j] {
            try {
                body(j);
            } catch (...) {
                errors[j] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }
}

template <typename Fn>
std::uint64_t timed_stage(const char* name, Fn&& fn) {
    const auto start = Clock::now();
    try {
        fn();
    } catch (const std::exception& e) {
        throw PipelineError(name, e.what());
    }
    return elapsed_ns(start);
}

}  // namespace

RunResult run_wordcount(std::span<const RawDocument> corpus, std::size_t n_workers,
                        Transport& transport) {
    if (n_workers == 0) throw std::invalid_argument("run_wordcount: n_workers must be >= 1");

    const auto run_start = Clock::now();
    RunResult result;
    result.n_workers = n_workers;

    if (corpus.empty()) {
        result.shards.assign(n_workers, CountMap{});
        result.pre_repair_shards = result.shards;
        result.timings.total_ns = elapsed_ns(run_start);
        return result;
    }

    const std::size_t n = n_workers;
    std::vector<WordList> local(n);
    auto& t = result.timings;

    t.map_ns = timed_stage("map", [&] {
        for_each_worker(n, [&](std::size_t j) {
            // round-robin document assignment by index
            for (std::size_t d = j; d < corpus.size(); d += n) {
                WordList doc_words = tokenize(corpus[d]);
                auto& words = local[j].words;
                words.insert(words.end(),
                             std::make_move_iterator(doc_words.words.begin()),
                             std::make_move_iterator(doc_words.words.end()));
            }
        });
    });

    t.sort_ns = timed_stage("sort", [&] {
        for_each_worker(n, [&](std::size_t j) { local[j] = sort_words(std::move(local[j])); });
    });

    std::vector<EncodedShard> shards(n);
    t.encode_ns = timed_stage("encode", [&] {
        for_each_worker(n, [&](std::size_t j) {
            shards[j] = encode_outgoing(plan_partition(local[j], j, n), local[j]);
        });
    });

    std::vector<WordList> exchanged;
    t.exchange_ns = timed_stage("exchange", [&] {
        exchanged = exchange_encoded(std::move(shards), transport);
    });

    result.pre_repair_shards.assign(n, CountMap{});
    t.reduce_ns = timed_stage("reduce", [&] {
        for_each_worker(n, [&](std::size_t j) {
            result.pre_repair_shards[j] = reduce_sorted(exchanged[j]);
        });
    });

    t.repair_ns = timed_stage("repair", [&] {
        result.shards = boundary_repair(result.pre_repair_shards);
    });

    result.counts = merge_counts(result.shards);
    t.total_ns = elapsed_ns(run_start);
    return result;
}

RunResult run_wordcount(std::span<const RawDocument> corpus, std::size_t n_workers) {
    if (n_workers == 0) throw std::invalid_argument("run_wordcount: n_workers must be >= 1");
    InProcessTransport transport(n_workers);
    return run_wordcount(corpus, n_workers, transport);
}

CountMap serial_wordcount(std::span<const RawDocument> corpus) {
    CountMap counts;
    for (const auto& doc : corpus) {
        for (auto& word : tokenize(doc).words) {
            ++counts[std::move(word)];
        }
    }
    return counts;
}

}  // namespace wfc
