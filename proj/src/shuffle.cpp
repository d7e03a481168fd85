#include "wfc/shuffle.hpp"

#include <exception>
#include <string>
#include <thread>

namespace wfc {

ShardPlan plan_partition(const WordList& sorted, std::size_t worker_id, std::size_t n_workers) {
    if (n_workers == 0) throw std::invalid_argument("plan_partition: n_workers must be >= 1");
    if (worker_id >= n_workers) {
        throw std::invalid_argument("plan_partition: worker_id " + std::to_string(worker_id) +
                                    " out of range for " + std::to_string(n_workers) + " workers");
    }
    if (!sorted.sorted) throw std::invalid_argument("plan_partition: word list must be sorted");

    const std::size_t k = sorted.words.size();
    const std::size_t n = n_workers;

    std::vector<std::size_t> sizes(n, 0);
    sizes[worker_id] = k / n;
    if (n > 1) {
        const std::size_t rest = k - k / n;
        const std::size_t base = rest / (n - 1);
        std::size_t excess = rest % (n - 1);
        for (std::size_t c = 0; c < n; ++c) {
            if (c == worker_id) continue;
            sizes[c] = base;
            if (excess > 0) {
                ++sizes[c];
                --excess;
            }
        }
    }

    ShardPlan plan;
    plan.worker_id = worker_id;
    plan.n_workers = n;
    plan.local_count = k;
    plan.boundaries.resize(n + 1);
    plan.boundaries[0] = 0;
    for (std::size_t c = 0; c < n; ++c) {
        plan.boundaries[c + 1] = plan.boundaries[c] + sizes[c];
    }
    return plan;
}

EncodedShard encode_outgoing(const ShardPlan& plan, const WordList& sorted) {
    if (!sorted.sorted) throw std::invalid_argument("encode_outgoing: word list must be sorted");
    if (plan.local_count != sorted.words.size()) {
        throw std::invalid_argument("encode_outgoing: plan does not match word list");
    }

    EncodedShard shard;
    shard.worker_id = plan.worker_id;
    shard.n_workers = plan.n_workers;
    const auto& words = sorted.words;
    shard.kept.assign(words.begin() + plan.chunk_begin(plan.worker_id),
                      words.begin() + plan.chunk_end(plan.worker_id));
    for (std::size_t c = 0; c < plan.n_workers; ++c) {
        if (c == plan.worker_id) continue;
        std::span<const Word> chunk(words.data() + plan.chunk_begin(c), plan.chunk_size(c));
        shard.outgoing.emplace_back(c, encode_message(chunk));
    }
    return shard;
}

namespace {

std::string pair_label(std::size_t from, std::size_t to) {
    return "worker " + std::to_string(from) + " -> worker " + std::to_string(to);
}

// Merge n sorted chunks, lowest source index first on ties.
std::vector<Word> merge_sorted(std::vector<std::vector<Word>>& sources) {
    std::size_t total = 0;
    for (const auto& s : sources) total += s.size();
    std::vector<Word> out;
    out.reserve(total);
    std::vector<std::size_t> next(sources.size(), 0);
    while (out.size() < total) {
        const Word* best = nullptr;
        std::size_t best_src = 0;
        for (std::size_t s = 0; s < sources.size(); ++s) {
            if (next[s] >= sources[s].size()) continue;
            const Word& candidate = sources[s][next[s]];
            if (best == nullptr || candidate < *best) {
                best = &candidate;
                best_src = s;
            }
        }
        out.push_back(std::move(sources[best_src][next[best_src]]));
        ++next[best_src];
    }
    return out;
}

void run_exchange_worker(EncodedShard& shard, Transport& transport, WordList& output) {
    const std::size_t j = shard.worker_id;
    const std::size_t n = shard.n_workers;

    for (auto& [peer, frame] : shard.outgoing) {
        try {
            transport.send(j, peer, std::move(frame));
        } catch (const std::exception& e) {
            throw ExchangeError("exchange send failed (" + pair_label(j, peer) + "): " + e.what());
        }
    }

    std::vector<std::vector<Word>> sources(n);
    sources[j] = std::move(shard.kept);
    for (std::size_t peer = 0; peer < n; ++peer) {
        if (peer == j) continue;
        WireMessage frame;
        try {
            frame = transport.recv(j, peer);
        } catch (const std::exception& e) {
            throw ExchangeError("exchange receive failed (" + pair_label(peer, j) + "): " + e.what());
        }
        try {
            sources[peer] = decode_message(frame);
        } catch (const WireError& e) {
            throw ExchangeError("worker " + std::to_string(j) + " got an invalid frame from worker " +
                                std::to_string(peer) + ": " + e.what());
        }
    }

    output.words = merge_sorted(sources);
    output.sorted = true;
}

}  // namespace

std::vector<WordList> exchange_encoded(std::vector<EncodedShard> shards, Transport& transport) {
    const std::size_t n = shards.size();
    if (n == 0) throw std::invalid_argument("exchange: need at least one worker");
    for (std::size_t j = 0; j < n; ++j) {
        if (shards[j].worker_id != j || shards[j].n_workers != n) {
            throw std::invalid_argument("exchange: shard " + std::to_string(j) +
                                        " does not agree on worker layout");
        }
    }

    std::vector<WordList> outputs(n);
    if (n == 1) {
        outputs[0].words = std::move(shards[0].kept);
        outputs[0].sorted = true;
        return outputs;
    }

    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> threads;
    threads.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        threads.emplace_back([&, j] {
            try {
                run_exchange_worker(shards[j], transport, outputs[j]);
            } catch (...) {
                errors[j] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }
    return outputs;
}

std::vector<WordList> exchange(const std::vector<WorkerShard>& inputs, Transport& transport) {
    std::vector<EncodedShard> shards;
    shards.reserve(inputs.size());
    for (std::size_t j = 0; j < inputs.size(); ++j) {
        const auto& in = inputs[j];
        if (in.plan.worker_id != j || in.plan.n_workers != inputs.size()) {
            throw std::invalid_argument("exchange: plan " + std::to_string(j) +
                                        " does not agree on worker layout");
        }
        shards.push_back(encode_outgoing(in.plan, in.words));
    }
    return exchange_encoded(std::move(shards), transport);
}

std::vector<WordList> exchange(const std::vector<WorkerShard>& inputs) {
    InProcessTransport transport(inputs.empty() ? 1 : inputs.size());
    return wfc::exchange(inputs, transport);
}

}  // namespace wfc
