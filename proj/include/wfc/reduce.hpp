#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "wfc/text.hpp"

namespace wfc {

// word -> occurrence count; ordered so iteration and reporting are
// deterministic and shard boundaries are the first/last keys.
using CountMap = std::map<Word, std::uint64_t>;

// Per-worker count maps, indexed by worker.
using ShardedCounts = std::vector<CountMap>;

// Run-length encodes a sorted list: each word's count is its multiplicity.
CountMap reduce_sorted(const WordList& sorted);

// Merges every word held by more than one shard into its lowest-indexed
// holder and removes it elsewhere. Total count is conserved.
//
// When shards cover non-overlapping alphabetical ranges (the usual
// post-shuffle state), only each shard's first and last keys can be
// duplicated, so repair touches 2n keys. Shards whose ranges overlap
// further fall back to a full duplicate scan.
ShardedCounts boundary_repair(ShardedCounts sharded);

// Pointwise sum across maps.
CountMap merge_counts(std::span<const CountMap> maps);

// Distinct words held by two or more shards (the not-fully-reduced words
// before repair).
std::size_t count_unreduced_words(const ShardedCounts& sharded);

}  // namespace wfc
