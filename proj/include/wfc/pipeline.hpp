#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include "wfc/reduce.hpp"
#include "wfc/text.hpp"
#include "wfc/transport.hpp"

namespace wfc {

// Coordinator-observed wall clock per stage barrier, nanoseconds.
struct StageTimings {
    std::uint64_t map_ns = 0;
    std::uint64_t sort_ns = 0;
    std::uint64_t encode_ns = 0;
    std::uint64_t exchange_ns = 0;
    std::uint64_t reduce_ns = 0;
    std::uint64_t repair_ns = 0;
    std::uint64_t total_ns = 0;
};

struct RunResult {
    CountMap counts;               // merged final counts, equals the serial count
    ShardedCounts shards;          // post-repair per-worker counts
    ShardedCounts pre_repair_shards;
    StageTimings timings;
    std::size_t n_workers = 1;
};

class PipelineError : public std::runtime_error {
public:
    PipelineError(std::string stage, const std::string& what)
        : std::runtime_error(stage + " stage: " + what), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

// tokenize -> sort -> partition/encode -> exchange -> reduce -> repair over
// the corpus, documents assigned to workers round-robin by index. The
// final counts equal serial_wordcount for any corpus and worker count.
RunResult run_wordcount(std::span<const RawDocument> corpus, std::size_t n_workers);
RunResult run_wordcount(std::span<const RawDocument> corpus, std::size_t n_workers,
                        Transport& transport);

// Single-context count of the whole corpus; the pipeline's correctness oracle.
CountMap serial_wordcount(std::span<const RawDocument> corpus);

}  // namespace wfc
