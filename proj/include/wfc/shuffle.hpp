#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wfc/text.hpp"
#include "wfc/transport.hpp"

namespace wfc {

// How one worker's sorted word list is cut into n alphabetically contiguous
// chunks: chunk c spans [boundaries[c], boundaries[c+1]). Chunk `worker_id`
// stays local; chunk c goes to worker c.
struct ShardPlan {
    std::size_t worker_id = 0;
    std::size_t n_workers = 1;
    std::size_t local_count = 0;
    std::vector<std::size_t> boundaries;  // n+1 monotone cut indices, 0 .. local_count

    std::size_t chunk_begin(std::size_t c) const { return boundaries[c]; }
    std::size_t chunk_end(std::size_t c) const { return boundaries[c + 1]; }
    std::size_t chunk_size(std::size_t c) const { return boundaries[c + 1] - boundaries[c]; }
};

// Cuts a sorted list of k words into n chunks. The kept chunk (index
// worker_id) gets exactly k/n rounded down; the remaining words are spread
// as evenly as possible over the other chunks, any excess going one per
// chunk from chunk 0 upward (skipping the kept chunk).
ShardPlan plan_partition(const WordList& sorted, std::size_t worker_id, std::size_t n_workers);

struct WorkerShard {
    ShardPlan plan;
    WordList words;
};

// One worker's shuffle payload: the kept chunk plus a frame per peer.
struct EncodedShard {
    std::size_t worker_id = 0;
    std::size_t n_workers = 1;
    std::vector<Word> kept;
    std::vector<std::pair<std::size_t, WireMessage>> outgoing;  // (peer, frame)
};

EncodedShard encode_outgoing(const ShardPlan& plan, const WordList& sorted);

class ExchangeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Runs the shuffle over pre-encoded shards: n concurrent workers send their
// frames, receive one frame from every peer, decode, and merge the chunks in
// worker-index order. Output per worker is sorted and independent of message
// arrival order.
std::vector<WordList> exchange_encoded(std::vector<EncodedShard> shards, Transport& transport);

// plan + encode + exchange in one call.
std::vector<WordList> exchange(const std::vector<WorkerShard>& inputs, Transport& transport);
std::vector<WordList> exchange(const std::vector<WorkerShard>& inputs);

}  // namespace wfc
