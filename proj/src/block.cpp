#include "glho/block.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace glho {

BlockKey BlockKey::make(std::set<std::int64_t> core, std::int64_t base) {
    if (core.count(base)) {
        throw Error("block base " + std::to_string(base) + " collides with a core label");
    }
    BlockKey key;
    key.m = static_cast<int>(core.size()) + 1;
    key.core = std::move(core);
    key.base = base;
    return key;
}

BlockKey block_key(const Weight& w) {
    if (w.n != 1) throw WrongShape("block coordinates need n = 1, got n = " + std::to_string(w.n));
    LabelSets ls = label_sets(w);
    std::int64_t wedge = *ls.wedge.begin();
    if (!ls.vee.count(wedge)) throw TypicalWeight("weight is typical, no atypical block");
    std::set<std::int64_t> core = ls.vee;
    core.erase(wedge);
    return BlockKey::make(std::move(core), wedge);
}

std::int64_t position(const BlockKey& key, std::int64_t i) {
    std::int64_t p = key.base;
    for (std::int64_t k = 0; k < i; ++k) {
        do { ++p; } while (key.core.count(p));
    }
    for (std::int64_t k = 0; k > i; --k) {
        do { --p; } while (key.core.count(p));
    }
    return p;
}

std::int64_t index_of_position(const BlockKey& key, std::int64_t p) {
    if (key.core.count(p)) {
        throw Error("position " + std::to_string(p) + " is a core label, not a free slot");
    }
    std::int64_t i = 0;
    std::int64_t q = key.base;
    while (q < p) {
        do { ++q; } while (key.core.count(q));
        ++i;
    }
    while (q > p) {
        do { --q; } while (key.core.count(q));
        --i;
    }
    return i;
}

std::int64_t step(const BlockKey& key, std::int64_t i, std::int64_t k) {
    return position(key, i + k);
}

Weight weight_at(const BlockKey& key, std::int64_t i) {
    std::int64_t p = position(key, i);
    std::vector<std::int64_t> vee(key.core.begin(), key.core.end());
    vee.push_back(p);
    std::sort(vee.begin(), vee.end(), std::greater<>());
    std::vector<std::int64_t> rows(static_cast<std::size_t>(key.m) + 1);
    for (int j = 0; j < key.m; ++j) rows[static_cast<std::size_t>(j)] = vee[static_cast<std::size_t>(j)] + j;
    rows[static_cast<std::size_t>(key.m)] = 1 - key.m - p;
    return Weight::make(key.m, 1, std::move(rows));
}

std::int64_t block_deg(const BlockKey& key, std::int64_t i) {
    return deg_bidegree(weight_at(key, i)).deg;
}

std::int64_t block_charge(const BlockKey& key) {
    return central_charge(weight_at(key, 0));
}

}  // namespace glho
