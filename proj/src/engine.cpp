#include "wfc/engine.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace wfc {

namespace {

// term(i) is the mapped value of the element at 0-based position i. Both
// engines fold through the same code path so a single block reproduces the
// serial result bitwise.
template <typename Term>
double fold_range(std::uint64_t begin, std::uint64_t end, const Term& term) {
    double acc = 0.0;
    for (std::uint64_t i = begin; i < end; ++i) acc += term(i);
    return acc;
}

// Pairwise combination rounds over block partials, in block-index order.
double combine_tree(std::vector<double> level) {
    if (level.empty()) return 0.0;
    while (level.size() > 1) {
        std::size_t out = 0;
        for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
            level[out++] = level[i] + level[i + 1];
        }
        if (level.size() % 2 == 1) level[out++] = level.back();
        level.resize(out);
    }
    return level[0];
}

template <typename Term>
double blocked_sum(std::uint64_t n, const BlockConfig& cfg, const Term& term) {
    if (cfg.block_size == 0 || cfg.workers == 0) {
        throw std::invalid_argument("block_size and workers must be >= 1");
    }
    const std::uint64_t n_blocks = (n + cfg.block_size - 1) / cfg.block_size;
    std::vector<double> partials(n_blocks, 0.0);

    auto fold_blocks = [&](std::uint64_t first, std::uint64_t last) {
        for (std::uint64_t b = first; b < last; ++b) {
            const std::uint64_t begin = b * cfg.block_size;
            const std::uint64_t end = std::min<std::uint64_t>(begin + cfg.block_size, n);
            partials[b] = fold_range(begin, end, term);
        }
    };

    const unsigned workers = unsigned(std::min<std::uint64_t>(cfg.workers, n_blocks ? n_blocks : 1));
    if (workers <= 1) {
        fold_blocks(0, n_blocks);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t first = n_blocks * w / workers;
            const std::uint64_t last = n_blocks * (w + 1) / workers;
            threads.emplace_back(fold_blocks, first, last);
        }
        for (auto& t : threads) t.join();
    }
    return combine_tree(std::move(partials));
}

double map_value(double value, std::uint64_t position, MapKind map) {
    switch (map) {
        case MapKind::identity:
            return value;
        case MapKind::square_root:
            return std::sqrt(value);
        case MapKind::alternating_harmonic_term:
            return (position % 2 == 1 ? 1.0 : -1.0) / double(position);
    }
    throw std::invalid_argument("unknown map kind");
}

}  // namespace

double map_reduce_serial(std::span<const double> values, MapKind map) {
    return fold_range(0, values.size(), [&](std::uint64_t i) {
        return map_value(values[i], i + 1, map);
    });
}

double map_reduce_blocked(std::span<const double> values, MapKind map, const BlockConfig& cfg) {
    return blocked_sum(values.size(), cfg, [&](std::uint64_t i) {
        return map_value(values[i], i + 1, map);
    });
}

double alternating_harmonic(std::uint64_t n, const BlockConfig& cfg) {
    return blocked_sum(n, cfg, [](std::uint64_t i) {
        return map_value(0.0, i + 1, MapKind::alternating_harmonic_term);
    });
}

}  // namespace wfc
