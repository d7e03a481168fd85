#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace wfc {

// Map functions the reduction engine supports. alternating_harmonic_term
// ignores the stored value and maps the element's 1-based position i to
// (-1)^(i+1) / i.
enum class MapKind {
    identity,
    square_root,
    alternating_harmonic_term,
};

struct BlockConfig {
    std::size_t block_size = 256;  // elements per leaf block
    unsigned workers = 1;          // concurrent folding contexts
};

// Left-to-right fold of map(values) with addition; the reference the
// blocked engine is checked against.
double map_reduce_serial(std::span<const double> values, MapKind map);

// Cuts the array into ceil(N / block_size) blocks, folds each block left to
// right, and combines the block partials with a fixed-shape binary tree
// keyed to block index. The result is bitwise identical for every worker
// count and every scheduling, and bitwise equal to the serial fold when a
// single block covers the whole array.
double map_reduce_blocked(std::span<const double> values, MapKind map, const BlockConfig& cfg);

// Partial sum of 1 - 1/2 + 1/3 - ... over n terms via the blocked engine;
// converges to ln 2, with error at most 1/(n+1).
double alternating_harmonic(std::uint64_t n, const BlockConfig& cfg = {});

}  // namespace wfc
