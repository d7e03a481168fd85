#include "wfc/transport.hpp"

namespace wfc {

InProcessTransport::InProcessTransport(std::size_t n_workers) : n_(n_workers) {
    if (n_ == 0) throw TransportError("transport needs at least one worker");
    channels_.reserve(n_ * n_);
    for (std::size_t i = 0; i < n_ * n_; ++i) {
        channels_.push_back(std::make_unique<Channel>());
    }
}

InProcessTransport::Channel& InProcessTransport::channel(std::size_t from, std::size_t to) {
    if (from >= n_ || to >= n_) {
        throw TransportError("no channel between worker " + std::to_string(from) +
                             " and worker " + std::to_string(to));
    }
    return *channels_[from * n_ + to];
}

void InProcessTransport::send(std::size_t from, std::size_t to, WireMessage frame) {
    Channel& ch = channel(from, to);
    {
        std::lock_guard lock(ch.mu);
        ch.queue.push_back(std::move(frame));
    }
    ch.cv.notify_one();
}

WireMessage InProcessTransport::recv(std::size_t at, std::size_t from) {
    Channel& ch = channel(from, at);
    std::unique_lock lock(ch.mu);
    ch.cv.wait(lock, [&] { return !ch.queue.empty(); });
    WireMessage frame = std::move(ch.queue.front());
    ch.queue.pop_front();
    return frame;
}

}  // namespace wfc
