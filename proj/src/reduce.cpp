#include "wfc/reduce.hpp"

#include <stdexcept>
#include <unordered_map>

namespace wfc {

CountMap reduce_sorted(const WordList& sorted) {
    if (!sorted.sorted) throw std::invalid_argument("reduce_sorted: word list must be sorted");
    CountMap counts;
    auto hint = counts.end();
    std::size_t i = 0;
    while (i < sorted.words.size()) {
        const Word& word = sorted.words[i];
        std::size_t run = i + 1;
        while (run < sorted.words.size() && sorted.words[run] == word) ++run;
        hint = counts.emplace_hint(hint, word, run - i);
        i = run;
    }
    return counts;
}

namespace {

// True when consecutive non-empty shards only meet at single boundary
// words: max key of each shard <= min key of the next non-empty one.
bool ranges_are_contiguous(const ShardedCounts& sharded) {
    const CountMap* prev = nullptr;
    for (const auto& shard : sharded) {
        if (shard.empty()) continue;
        if (prev != nullptr && prev->rbegin()->first > shard.begin()->first) return false;
        prev = &shard;
    }
    return true;
}

void merge_word_into(ShardedCounts& sharded, const Word& word, std::size_t owner) {
    auto it = sharded[owner].find(word);
    if (it == sharded[owner].end()) return;
    for (std::size_t s = owner + 1; s < sharded.size(); ++s) {
        auto dup = sharded[s].find(word);
        if (dup == sharded[s].end()) continue;
        it->second += dup->second;
        sharded[s].erase(dup);
    }
}

void repair_contiguous(ShardedCounts& sharded) {
    for (std::size_t s = 0; s < sharded.size(); ++s) {
        if (sharded[s].empty()) continue;
        // Only this shard's extreme keys can also live in later shards.
        merge_word_into(sharded, sharded[s].begin()->first, s);
        merge_word_into(sharded, sharded[s].rbegin()->first, s);
    }
}

void repair_full_scan(ShardedCounts& sharded) {
    std::unordered_map<Word, std::size_t> first_holder;
    for (std::size_t s = 0; s < sharded.size(); ++s) {
        for (auto it = sharded[s].begin(); it != sharded[s].end();) {
            auto [owner, inserted] = first_holder.try_emplace(it->first, s);
            if (inserted) {
                ++it;
            } else {
                sharded[owner->second][it->first] += it->second;
                it = sharded[s].erase(it);
            }
        }
    }
}

}  // namespace

ShardedCounts boundary_repair(ShardedCounts sharded) {
    if (ranges_are_contiguous(sharded)) {
        repair_contiguous(sharded);
    } else {
        repair_full_scan(sharded);
    }
    return sharded;
}

CountMap merge_counts(std::span<const CountMap> maps) {
    CountMap total;
    for (const auto& m : maps) {
        for (const auto& [word, count] : m) total[word] += count;
    }
    return total;
}

std::size_t count_unreduced_words(const ShardedCounts& sharded) {
    std::unordered_map<Word, std::size_t> holders;
    for (const auto& shard : sharded) {
        for (const auto& [word, count] : shard) ++holders[word];
    }
    std::size_t duplicated = 0;
    for (const auto& [word, n] : holders) {
        if (n > 1) ++duplicated;
    }
    return duplicated;
}

}  // namespace wfc
