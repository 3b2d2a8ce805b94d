#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "glho/block.hpp"

namespace glho {

enum class SeriesVariant { kac_plus, kac_minus, simple };

/// A truncated formal series sum_d c_d q^d whose coefficients live in
/// the free abelian group on block labels: Kac indices V(i), anti-Kac
/// indices V(i)*, or simple indices L(i), depending on the variant.
/// Terms with degree in [truncation, d_max] are exact; anything below
/// truncation is an incomplete boundary tail carried along for
/// reporting.
struct KSeries {
    SeriesVariant variant = SeriesVariant::simple;
    std::optional<BlockKey> key;
    /// degree -> (label index -> coefficient); zero coefficients pruned.
    std::map<std::int64_t, std::map<std::int64_t, std::int64_t>> terms;
    std::int64_t d_max = 0;
    std::int64_t truncation = 0;

    KSeries& add_term(std::int64_t deg, std::int64_t label, std::int64_t coeff);
    bool zero() const { return terms.empty(); }

    /// Terms with degree >= truncation (the trusted window).
    KSeries main_part() const;
    /// Terms below truncation (the boundary tail).
    KSeries tail() const;

    /// Multiplication by q^k: shifts every degree, d_max and truncation.
    KSeries q_shift(std::int64_t k) const;

    friend KSeries operator+(const KSeries& x, const KSeries& y);
    friend KSeries operator-(const KSeries& x, const KSeries& y);
    friend bool operator==(const KSeries& x, const KSeries& y) {
        return x.variant == y.variant && x.terms == y.terms;
    }
};

/// The expansion homomorphism into simple labels: a Kac or anti-Kac
/// term at index i contributes its top factor L(i) at the same degree
/// and its socle factor L(i-1) at the degree lowered by the block-degree
/// gap, so canonical series expand per-simple-degree and the map
/// commutes with q-shifts. Throws UnknownBlock without a key.
KSeries expand_to_simples(const KSeries& s);

/// The minimal-model series of the simple with index u, truncated after
/// N steps: omega carries the Kac pieces V(u), V(u-2), ..., V(u-2N) at
/// their block degrees, kernel the anti-Kac pieces V(u-1)*, ..., V(u-2N+1)*.
struct MinimalModelSeries {
    KSeries omega;
    KSeries kernel;
};

MinimalModelSeries minimal_model_series(const BlockKey& key, std::int64_t u, int depth);

/// expand(omega) - expand(kernel), truncated at block_deg(key, u) - 2N.
/// The main part is the single term q^{block_deg(key,u)} [L(u)]; one
/// uncancelled boundary term remains in the tail.
KSeries euler_check(const BlockKey& key, std::int64_t u, int depth);

/// A multiset of Kac labels with degrees, the raw material of a
/// canonical filtration. Degrees must match block_deg when a key is
/// attached.
struct KacFlagInput {
    std::optional<BlockKey> key;
    std::vector<std::pair<std::int64_t, std::int64_t>> entries;  ///< (label index, degree)
};

struct FiltrationGroup {
    std::int64_t degree = 0;
    std::map<std::int64_t, std::int64_t> labels;  ///< index -> multiplicity

    friend bool operator==(const FiltrationGroup&, const FiltrationGroup&) = default;
};

/// Groups a flag by degree, bottom to top: strictly decreasing degrees,
/// the highest-degree Kac pieces forming the bottom subobject. Output
/// is independent of the input order. Throws on an empty flag.
std::vector<FiltrationGroup> degree_filtration(const KacFlagInput& flag);

}  // namespace glho
