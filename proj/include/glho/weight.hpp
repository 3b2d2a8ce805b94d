#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <vector>

#include "glho/errors.hpp"

namespace glho {

/// An integral dominant highest weight of GL(m|n), stored un-normalized
/// (no rho shift): rows = (l_1,...,l_m | l_{m+1},...,l_{m+n}) with both
/// halves weakly decreasing.
struct Weight {
    int m = 1;
    int n = 1;
    std::vector<std::int64_t> rows;

    /// Validates shape and dominance; throws InvalidWeight.
    static Weight make(int m, int n, std::vector<std::int64_t> rows);

    std::int64_t row(int i) const { return rows.at(static_cast<std::size_t>(i)); }

    auto operator<=>(const Weight&) const = default;
};

/// The two shifted label sets of a weight:
///   vee   = { l_i + 1 - i       : 1 <= i <= m }
///   wedge = { j - m - l_{m+j}   : 1 <= j <= n }
/// Both are injective images (strict dominance of the shifts), so
/// |vee| = m and |wedge| = n.
struct LabelSets {
    std::set<std::int64_t> vee;
    std::set<std::int64_t> wedge;
};

struct Bidegree {
    std::int64_t d;       ///< sum over the first m rows
    std::int64_t dprime;  ///< sum over the last n rows
    std::int64_t deg;     ///< = d; the degree governing the canonical filtration
};

Bidegree deg_bidegree(const Weight& w);

LabelSets label_sets(const Weight& w);

/// |vee ∩ wedge|; 0 means typical, min(m,n) maximally atypical.
int atypicality(const Weight& w);

/// Tensoring with the k-th Berezin power: adds k to the first m rows and
/// subtracts k from the last n. Preserves atypicality; deg grows by k*m.
Weight ber_twist(const Weight& w, std::int64_t k);

/// d + dprime, the weight of the diagonal torus action. Constant on blocks.
std::int64_t central_charge(const Weight& w);

/// Highest weight of the i-th radical layer of the standard GL(n|n) Kac
/// object, 0 <= i <= n: first half (0,...,0,-i,...,-i) with i trailing
/// entries, super half the maximally atypical completion (i,...,i,0,...,0).
/// Has degree -i^2 and atypicality n.
Weight kac_layer_weight(int n, int i);

}  // namespace glho
