#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "glho/interval.hpp"

namespace glho {

/// A summand of an object of the block's homotopy category in normal
/// form: either a homotopy-simple S(i) or a surviving even-length
/// interval EvenR[a,b] (b - a odd).
struct HoSummand {
    bool even_r = false;
    std::int64_t a = 0;
    std::int64_t b = 0;  ///< == a for S

    static HoSummand S(std::int64_t i) { return HoSummand{false, i, i}; }
    static HoSummand EvenR(std::int64_t a, std::int64_t b);

    auto operator<=>(const HoSummand&) const = default;
};

struct HoObject {
    std::optional<BlockKey> key;
    std::map<HoSummand, std::int64_t> summands;

    HoObject& add(const HoSummand& s, std::int64_t mult = 1);
    bool zero() const { return summands.empty(); }
    bool all_simple() const;

    friend bool operator==(const HoObject& x, const HoObject& y) {
        return x.summands == y.summands;
    }
};

/// Normal form of a block object in the homotopy category:
///   P(i) -> 0, even B -> 0, odd B[a,b] -> S(b), odd R[a,b] -> S(a),
///   L(i) -> S(i), even R[a,b] -> EvenR[a,b].
HoObject ho_reduce(const BlockObject& x);

/// Canonical block-object representative: S(i) -> L(i), EvenR -> R.
/// ho_reduce(ho_embed(y)) == y for every normal form y.
BlockObject ho_embed(const HoObject& y);

/// Suspension: S(i)[k] = S(i-k). Throws UnsupportedShift when an EvenR
/// summand is present and k != 0.
HoObject shift(const HoObject& x, std::int64_t k);

/// dim [x,y]. For sums of simples: pairs (S(i) in x, S(j) in y) with
/// i >= j and i = j mod 2, counted with multiplicity. [E,E] = 1 for a
/// single identical EvenR on both sides; every other EvenR
/// configuration throws UnsupportedHom.
std::int64_t hom_dim(const HoObject& x, const HoObject& y);

/// A morphism between sums of simples: integer matrix over the basis
/// arrows f_{ij} : S(j) -> S(i), which exist iff j >= i and j = i mod 2
/// and compose by f_{ij} . f_{jk} = f_{ik}.
struct HoMorphism {
    std::vector<std::int64_t> src;  ///< simple indices of the source, by slot
    std::vector<std::int64_t> dst;  ///< simple indices of the target, by slot

    struct Entry {
        std::size_t src_slot = 0;
        std::size_t dst_slot = 0;
        std::int64_t coeff = 0;
    };
    std::vector<Entry> entries;

    /// The basis arrow f_{ij} (source S(j), target S(i)) scaled by coeff.
    /// Throws InvalidMorphism unless j >= i and j = i mod 2.
    static HoMorphism basis(std::int64_t i, std::int64_t j, std::int64_t coeff = 1);

    static HoMorphism identity(const std::vector<std::int64_t>& indices);

    std::int64_t coeff_at(std::size_t src_slot, std::size_t dst_slot) const;

    friend bool operator==(const HoMorphism& f, const HoMorphism& g);
};

/// g after f. Throws CompositionMismatch unless f.dst == g.src.
HoMorphism compose(const HoMorphism& g, const HoMorphism& f);

/// Image in the isogeny localization, where each block retains exactly
/// one even and one odd simple: S(i) -> parity of i, EvenR -> 0.
struct ParityCount {
    std::int64_t ev = 0;
    std::int64_t odd = 0;

    friend bool operator==(const ParityCount&, const ParityCount&) = default;
};

ParityCount isogeny_image(const HoObject& x);

/// Image in the semisimple quotient, whose simples are labelled by the
/// atypical weights: S(i) -> weight_at(key, i), EvenR -> 0 (negligible).
/// Requires a key.
std::map<Weight, std::int64_t> ss_image(const HoObject& x);

/// Label of a simple in the semisimple quotient as a representation of
/// the even quotient group: a GL(m-1) weight plus a determinant power.
struct SemisimpleLabel {
    std::vector<std::int64_t> gl_weight;  ///< m-1 entries
    std::int64_t det_power = 0;
};

/// Only the degenerate m = 1 case is implemented (L(a|-a) is the a-th
/// Berezin power, so the GL(0) part is empty and det_power = a); the
/// dictionary for m > 1 needs external mixed-tensor data and throws.
SemisimpleLabel semisimple_label(const Weight& w);

}  // namespace glho
