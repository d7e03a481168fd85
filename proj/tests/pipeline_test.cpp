#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "wfc/pipeline.hpp"

using namespace wfc;
using wfc::test::Rng;

namespace {

const std::vector<RawDocument> kTwoDocs{
    {"doc1", "I want to test MapReduce"},
    {"doc2", "MapReduce is a cool algorithm to test."},
};

CountMap counts(std::initializer_list<std::pair<const std::string, std::uint64_t>> init) {
    return CountMap(init);
}

}  // namespace

TEST_CASE("two-document run matches the worked example, before and after repair") {
    const RunResult result = run_wordcount(kTwoDocs, 2);

    REQUIRE(result.pre_repair_shards.size() == 2);
    CHECK(result.pre_repair_shards[0] ==
          counts({{"a", 1}, {"algorithm", 1}, {"cool", 1}, {"i", 1}, {"is", 1}, {"mapreduce", 1}}));
    CHECK(result.pre_repair_shards[1] ==
          counts({{"mapreduce", 1}, {"test", 2}, {"to", 2}, {"want", 1}}));

    const CountMap expected = counts({{"a", 1},
                                      {"algorithm", 1},
                                      {"cool", 1},
                                      {"i", 1},
                                      {"is", 1},
                                      {"mapreduce", 2},
                                      {"test", 2},
                                      {"to", 2},
                                      {"want", 1}});
    CHECK(result.counts == expected);
    CHECK(result.counts == serial_wordcount(kTwoDocs));
    CHECK(merge_counts(result.shards) == result.counts);
    CHECK(result.n_workers == 2);
}

TEST_CASE("single worker equals the serial oracle") {
    const RunResult result = run_wordcount(kTwoDocs, 1);
    CHECK(result.counts == serial_wordcount(kTwoDocs));
    CHECK(result.pre_repair_shards.size() == 1);
}

TEST_CASE("empty corpus yields empty counts and zeroed stage timings") {
    const std::vector<RawDocument> empty;
    const RunResult result = run_wordcount(empty, 4);
    CHECK(result.counts.empty());
    CHECK(result.shards.size() == 4);
    const auto& t = result.timings;
    CHECK(t.map_ns == 0);
    CHECK(t.sort_ns == 0);
    CHECK(t.encode_ns == 0);
    CHECK(t.exchange_ns == 0);
    CHECK(t.reduce_ns == 0);
    CHECK(t.repair_ns == 0);
}

TEST_CASE("stage timings are populated and bounded by the total") {
    const RunResult result = run_wordcount(kTwoDocs, 2);
    const auto& t = result.timings;
    const std::uint64_t stage_max = std::max({t.map_ns, t.sort_ns, t.encode_ns, t.exchange_ns,
                                              t.reduce_ns, t.repair_ns});
    CHECK(t.total_ns >= stage_max);
}

TEST_CASE("worker count zero is rejected") {
    CHECK_THROWS_AS(run_wordcount(kTwoDocs, 0), std::invalid_argument);
}

TEST_CASE("pipeline counts equal the serial oracle on heterogeneous corpora") {
    Rng rng(1001);
    for (int round = 0; round < 10; ++round) {
        const std::size_t docs = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
        const std::size_t words = std::uniform_int_distribution<std::size_t>(1, 300)(rng);
        const auto corpus = wfc::test::iid_corpus(rng, docs, words, 60);
        const CountMap oracle = serial_wordcount(corpus);
        for (std::size_t n : {1, 2, 3, 5, 8}) {
            const RunResult result = run_wordcount(corpus, n);
            CHECK(result.counts == oracle);
            CHECK(merge_counts(result.shards) == result.counts);
        }
    }
}

TEST_CASE("synthetic corpus counts are identical across worker counts") {
    Rng rng(77);
    const auto corpus = wfc::test::iid_corpus(rng, 100, 1000, 500);
    const CountMap oracle = serial_wordcount(corpus);
    for (std::size_t n : {2, 4, 8}) {
        CHECK(run_wordcount(corpus, n).counts == oracle);
    }
}

TEST_CASE("counts are independent of document order") {
    Rng rng(303);
    auto corpus = wfc::test::iid_corpus(rng, 17, 120, 25);
    const CountMap oracle = serial_wordcount(corpus);
    for (int shuffle = 0; shuffle < 5; ++shuffle) {
        std::shuffle(corpus.begin(), corpus.end(), rng);
        CHECK(run_wordcount(corpus, 4).counts == oracle);
    }
}

TEST_CASE("balanced corpora stay within the boundary-word bound before repair") {
    Rng rng(404);
    for (int round = 0; round < 5; ++round) {
        const std::size_t groups = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
        const auto corpus = wfc::test::balanced_corpus(rng, groups, 8, 400, 200);
        for (std::size_t n : {1, 2, 4, 8}) {
            const RunResult result = run_wordcount(corpus, n);
            CHECK(count_unreduced_words(result.pre_repair_shards) <= n - 1);
            CHECK(result.counts == serial_wordcount(corpus));
        }
    }
}

TEST_CASE("more workers than documents still count exactly") {
    Rng rng(505);
    const auto corpus = wfc::test::iid_corpus(rng, 3, 50, 10);
    const RunResult result = run_wordcount(corpus, 8);
    CHECK(result.counts == serial_wordcount(corpus));
    CHECK(result.pre_repair_shards.size() == 8);
}

TEST_CASE("serial_wordcount basics") {
    CHECK(serial_wordcount(std::vector<RawDocument>{}).empty());
    const std::vector<RawDocument> tiny{{"d", "a a b"}};
    CHECK(serial_wordcount(tiny) == counts({{"a", 2}, {"b", 1}}));
}

namespace {

// Drops the frame magic for every delivery, so decoding fails downstream.
class BrokenTransport final : public Transport {
public:
    explicit BrokenTransport(std::size_t n) : inner_(n) {}
    void send(std::size_t from, std::size_t to, WireMessage frame) override {
        inner_.send(from, to, std::move(frame));
    }
    WireMessage recv(std::size_t at, std::size_t from) override {
        WireMessage frame = inner_.recv(at, from);
        if (!frame.empty()) frame[0] = 0;
        return frame;
    }

private:
    InProcessTransport inner_;
};

}  // namespace

TEST_CASE("exchange failures carry stage attribution") {
    BrokenTransport transport(2);
    try {
        run_wordcount(kTwoDocs, 2, transport);
        FAIL("expected a pipeline error");
    } catch (const PipelineError& e) {
        CHECK(e.stage() == "exchange");
        CHECK(std::string(e.what()).find("exchange stage") != std::string::npos);
        CHECK(std::string(e.what()).find("invalid frame") != std::string::npos);
    }
}
