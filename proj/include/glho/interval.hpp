#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "glho/block.hpp"

namespace glho {

enum class IndecKind { R, B, P };

/// An indecomposable of an atypical GL(m|1) block, in interval form:
///   R[a,b]  socle L(a), L(a+2), ...   top L(a+1), L(a+3), ...
///   B[a,b]  twisted dual of R[a,b]
///   P(i)    projective cover, composition factors L(i-1), L(i), L(i), L(i+1)
/// Simples are normalized to R[i,i]; the Kac module V(i) is R[i-1,i] with
/// top L(i), and V(i)* = B[i-1,i].
struct Indec {
    IndecKind kind = IndecKind::R;
    std::int64_t a = 0;
    std::int64_t b = 0;  ///< for P: a == b == center index

    static Indec R(std::int64_t a, std::int64_t b);
    static Indec B(std::int64_t a, std::int64_t b);
    static Indec P(std::int64_t i);
    static Indec L(std::int64_t i);  ///< = R[i,i]

    std::int64_t length() const { return kind == IndecKind::P ? 4 : b - a + 1; }
    bool simple() const { return kind != IndecKind::P && a == b; }
    bool even_length() const { return length() % 2 == 0; }

    auto operator<=>(const Indec&) const = default;
};

/// A finite formal direct sum of indecomposables: multiset of summands
/// with positive multiplicities. Empty map = zero object. The key is
/// optional; it is required only where simple indices must be resolved
/// to weights.
struct BlockObject {
    std::optional<BlockKey> key;
    std::map<Indec, std::int64_t> summands;

    BlockObject& add(const Indec& x, std::int64_t mult = 1);
    bool zero() const { return summands.empty(); }

    friend bool operator==(const BlockObject& x, const BlockObject& y) {
        return x.summands == y.summands;
    }
};

/// Contravariant twist X -> X^*: swaps R and B, fixes P and simples.
Indec twisted_dual(const Indec& x);
BlockObject twisted_dual(const BlockObject& x);

/// A standard-flag entry: V(index) or its twisted dual V(index)*.
struct FlagLabel {
    std::int64_t index = 0;
    bool dual = false;

    auto operator<=>(const FlagLabel&) const = default;
};

/// Flags of an indecomposable, each listed bottom (submodule) to top.
/// Kac flags descend in degree, anti-Kac flags ascend:
///   even R[a,b]: kac  = [V(b), V(b-2), ..., V(a+1)]
///   even B[a,b]: anti = [V(a+1)*, V(a+3)*, ..., V(b)*]
///   P(i):        kac  = [V(i+1), V(i)], anti = [V(i)*, V(i+1)*]
struct KacFlags {
    std::vector<FlagLabel> kac;
    std::vector<FlagLabel> anti;
};

/// Throws NoFlag for odd-length R/B (not in either tensor ideal).
KacFlags kac_flag(const Indec& x);

struct IdealClass {
    bool in_tplus = false;
    bool in_tminus = false;
    bool projective = false;
};

/// Membership of one indecomposable in the Kac ideal, the anti-Kac
/// ideal, and the projectives: P in all three, even R in T+ only,
/// even B in T- only, everything else in none.
IdealClass classify_ideal(const Indec& x);

/// Componentwise conjunction over the summands (zero object: all true).
IdealClass classify_ideal(const BlockObject& x);

/// Multiset of simple indices: R/B[a,b] contributes {a,...,b},
/// P(i) contributes {i-1, i, i, i+1}.
std::map<std::int64_t, std::int64_t> composition_factors(const BlockObject& x);

}  // namespace glho
