#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "glho/errors.hpp"

namespace glho {

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is the default value.
struct Partition {
    std::vector<int> parts;

    /// Validates monotonicity, drops trailing zeros; throws on negatives.
    static Partition make(std::vector<int> parts);

    int size() const;  ///< |alpha|
    int rows() const { return static_cast<int>(parts.size()); }
    int part(int i) const { return i < rows() ? parts[static_cast<std::size_t>(i)] : 0; }

    Partition transpose() const;
    bool self_conjugate() const { return *this == transpose(); }
    bool fits_box(int rows, int cols) const;
    bool contains(const Partition& inner) const;

    auto operator<=>(const Partition&) const = default;
};

std::int64_t binomial(int n, int k);

/// All partitions with at most n rows and parts at most n, graded by
/// size and lexicographically descending within a grade. Count is
/// binomial(2n, n).
std::vector<Partition> box_partitions(int n);

/// Number of self-conjugate partitions in the n x n box, by direct
/// enumeration. Equals 2^n.
std::int64_t count_self_conjugate(int n);

/// Dimension of the irreducible GL(n) representation with highest
/// weight alpha (Weyl dimension formula, exact integer arithmetic).
/// Throws TooManyRows if alpha has more than n parts.
std::int64_t gl_dim(const Partition& alpha, int n);

/// The exterior-algebra decomposition over GL(n) x GL(n): one pair
/// (alpha, alpha^T) per partition in the n x n box, and the dimension
/// count total = sum dim(alpha) * dim(alpha^T) = 2^(n^2).
struct CauchyResult {
    std::vector<std::pair<Partition, Partition>> pairs;
    std::int64_t total = 0;
};

CauchyResult cauchy_check(int n);

/// Littlewood-Richardson coefficient c^nu_{lambda,mu}, by the tableau
/// rule; zero unless |nu| = |lambda| + |mu| and lambda is contained in nu.
std::int64_t lr_mult(const Partition& lambda, const Partition& mu, const Partition& nu);

/// The standard flag of V tensor V^* for GL(n|n): one entry per
/// partition in the n x n box, flagged maximally atypical iff
/// self-conjugate, at degree -n^2 - |alpha|. Exactly 2^n maximal
/// entries; their degrees fill [-2n^2, -n^2] with minimum -2n^2.
struct VVStarEntry {
    Partition alpha;
    bool max_atypical = false;
    std::int64_t degree = 0;
};

std::vector<VVStarEntry> vv_star_flag(int n);

}  // namespace glho
