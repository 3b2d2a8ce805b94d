#pragma once

#include <compare>
#include <cstdint>
#include <set>

#include "glho/weight.hpp"

namespace glho {

/// Coordinates of one atypical GL(m|1) block. The core holds the m-1
/// unpaired vee-labels shared by every weight in the block; base is the
/// paired label of the weight chosen to carry index 0. The choice of
/// base point is a free parameter of the indexing, nothing else.
struct BlockKey {
    int m = 1;
    std::set<std::int64_t> core;  ///< size m-1, never contains base
    std::int64_t base = 0;

    static BlockKey make(std::set<std::int64_t> core, std::int64_t base);

    auto operator<=>(const BlockKey&) const = default;
};

/// A simple object L(i) of the block, addressed by its integer index.
struct BlockPoint {
    BlockKey key;
    std::int64_t index = 0;
};

/// Extracts the block of an atypical GL(m|1) weight, assigning index 0
/// to the weight itself. Throws WrongShape if n != 1, TypicalWeight if
/// the weight is typical.
BlockKey block_key(const Weight& w);

/// The unique order isomorphism Z -> Z \ core with 0 -> base, i.e. the
/// paired-label position of the simple with index i.
std::int64_t position(const BlockKey& key, std::int64_t i);

/// Inverse of position(); p must avoid the core.
std::int64_t index_of_position(const BlockKey& key, std::int64_t p);

/// position(i + k): k free steps from index i, skipping core labels.
std::int64_t step(const BlockKey& key, std::int64_t i, std::int64_t k);

/// The dominant weight with vee = core ∪ {position(i)}, wedge = {position(i)}.
/// Inverse of block_key composed with the indexing.
Weight weight_at(const BlockKey& key, std::int64_t i);

/// deg of weight_at(key, i). Strictly increasing in i; consecutive
/// indices differ by 1 plus the number of core labels between them.
std::int64_t block_deg(const BlockKey& key, std::int64_t i);

/// central_charge of any weight in the block (independent of the index).
std::int64_t block_charge(const BlockKey& key);

}  // namespace glho
