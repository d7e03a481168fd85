#pragma once

#include <condition_variable>
#include <cstddef>
#include <deque>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "wfc/wire.hpp"

namespace wfc {

class TransportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Ordered, reliable, point-to-point byte-message channel between worker
// pairs. Frames are delivered whole and in send order per (from, to) pair;
// recv blocks until the next frame from that sender arrives.
class Transport {
public:
    virtual ~Transport() = default;
    virtual void send(std::size_t from, std::size_t to, WireMessage frame) = 0;
    virtual WireMessage recv(std::size_t at, std::size_t from) = 0;
};

// Default in-process implementation: one unbounded FIFO per worker pair.
class InProcessTransport final : public Transport {
public:
    explicit InProcessTransport(std::size_t n_workers);

    void send(std::size_t from, std::size_t to, WireMessage frame) override;
    WireMessage recv(std::size_t at, std::size_t from) override;

    std::size_t n_workers() const { return n_; }

private:
    struct Channel {
        std::mutex mu;
        std::condition_variable cv;
        std::deque<WireMessage> queue;
    };

    Channel& channel(std::size_t from, std::size_t to);

    std::size_t n_;
    std::vector<std::unique_ptr<Channel>> channels_;  // indexed from * n_ + to
};

}  // namespace wfc
