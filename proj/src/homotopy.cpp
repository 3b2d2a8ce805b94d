#include "glho/homotopy.hpp"

#include <algorithm>
#include <string>

namespace glho {

namespace {

bool same_parity(std::int64_t i, std::int64_t j) { return (i - j) % 2 == 0; }

bool arrow_exists(std::int64_t src, std::int64_t dst) {
    return src >= dst && same_parity(src, dst);
}

}  // namespace

HoSummand HoSummand::EvenR(std::int64_t a, std::int64_t b) {
    if (a >= b || (b - a) % 2 == 0) {
        throw Error("EvenR[" + std::to_string(a) + "," + std::to_string(b) +
                    "] needs an even-length interval");
    }
    return HoSummand{true, a, b};
}

HoObject& HoObject::add(const HoSummand& s, std::int64_t mult) {
    if (mult < 0) throw Error("negative multiplicity");
    if (mult > 0) summands[s] += mult;
    return *this;
}

bool HoObject::all_simple() const {
    return std::all_of(summands.begin(), summands.end(),
                       [](const auto& entry) { return !entry.first.even_r; });
}

HoObject ho_reduce(const BlockObject& x) {
    HoObject out;
    out.key = x.key;
    for (const auto& [s, mult] : x.summands) {
        switch (s.kind) {
            case IndecKind::P:
                break;
            case IndecKind::R:
                if (s.even_length()) {
                    out.add(HoSummand::EvenR(s.a, s.b), mult);
                } else {
                    out.add(HoSummand::S(s.a), mult);
                }
                break;
            case IndecKind::B:
                if (!s.even_length()) out.add(HoSummand::S(s.b), mult);
                break;
        }
    }
    return out;
}

BlockObject ho_embed(const HoObject& y) {
    BlockObject out;
    out.key = y.key;
    for (const auto& [s, mult] : y.summands) {
        out.add(s.even_r ? Indec::R(s.a, s.b) : Indec::L(s.a), mult);
    }
    return out;
}

HoObject shift(const HoObject& x, std::int64_t k) {
    if (k == 0) return x;
    HoObject out;
    out.key = x.key;
    for (const auto& [s, mult] : x.summands) {
        if (s.even_r) {
            throw UnsupportedShift("shift of an even-length interval is not defined");
        }
        out.add(HoSummand::S(s.a - k), mult);
    }
    return out;
}

std::int64_t hom_dim(const HoObject& x, const HoObject& y) {
    if (x.all_simple() && y.all_simple()) {
        std::int64_t dim = 0;
        for (const auto& [sx, mx] : x.summands) {
            for (const auto& [sy, my] : y.summands) {
                if (arrow_exists(sx.a, sy.a)) dim += mx * my;
            }
        }
        return dim;
    }
    // The only computed hom space touching an even interval is its own
    // one-dimensional endomorphism ring.
    if (x.summands.size() == 1 && x == y) {
        const auto& [s, mult] = *x.summands.begin();
        if (s.even_r && mult == 1) return 1;
    }
    throw UnsupportedHom("hom space involving even-length intervals is outside the domain");
}

HoMorphism HoMorphism::basis(std::int64_t i, std::int64_t j, std::int64_t coeff) {
    if (!arrow_exists(j, i)) {
        throw InvalidMorphism("no arrow f_{" + std::to_string(i) + "," + std::to_string(j) +
                              "}: needs j >= i of equal parity");
    }
    HoMorphism f;
    f.src = {j};
    f.dst = {i};
    if (coeff != 0) f.entries.push_back(Entry{0, 0, coeff});
    return f;
}

HoMorphism HoMorphism::identity(const std::vector<std::int64_t>& indices) {
    HoMorphism f;
    f.src = indices;
    f.dst = indices;
    for (std::size_t s = 0; s < indices.size(); ++s) f.entries.push_back(Entry{s, s, 1});
    return f;
}

std::int64_t HoMorphism::coeff_at(std::size_t src_slot, std::size_t dst_slot) const {
    std::int64_t c = 0;
    for (const Entry& e : entries) {
        if (e.src_slot == src_slot && e.dst_slot == dst_slot) c += e.coeff;
    }
    return c;
}

bool operator==(const HoMorphism& f, const HoMorphism& g) {
    if (f.src != g.src || f.dst != g.dst) return false;
    for (std::size_t s = 0; s < f.src.size(); ++s) {
        for (std::size_t t = 0; t < f.dst.size(); ++t) {
            if (f.coeff_at(s, t) != g.coeff_at(s, t)) return false;
        }
    }
    return true;
}

HoMorphism compose(const HoMorphism& g, const HoMorphism& f) {
    if (f.dst != g.src) {
        throw CompositionMismatch("target of the first morphism differs from source of the second");
    }
    HoMorphism h;
    h.src = f.src;
    h.dst = g.dst;
    for (std::size_t s = 0; s < h.src.size(); ++s) {
        for (std::size_t t = 0; t < h.dst.size(); ++t) {
            std::int64_t c = 0;
            for (std::size_t mid = 0; mid < f.dst.size(); ++mid) {
                c += f.coeff_at(s, mid) * g.coeff_at(mid, t);
            }
            if (c != 0) {
                if (!arrow_exists(h.src[s], h.dst[t])) {
                    throw InvalidMorphism("composite hits a vanishing hom space");
                }
                h.entries.push_back(HoMorphism::Entry{s, t, c});
            }
        }
    }
    return h;
}

ParityCount isogeny_image(const HoObject& x) {
    ParityCount out;
    for (const auto& [s, mult] : x.summands) {
        if (s.even_r) continue;
        if (((s.a % 2) + 2) % 2 == 0) {
            out.ev += mult;
        } else {
            out.odd += mult;
        }
    }
    return out;
}

std::map<Weight, std::int64_t> ss_image(const HoObject& x) {
    if (!x.key) throw UnknownBlock("object carries no block key");
    std::map<Weight, std::int64_t> out;
    for (const auto& [s, mult] : x.summands) {
        if (s.even_r) continue;
        out[weight_at(*x.key, s.a)] += mult;
    }
    return out;
}

SemisimpleLabel semisimple_label(const Weight& w) {
    if (w.n != 1) throw WrongShape("semisimple labels need n = 1");
    if (atypicality(w) == 0) throw TypicalWeight("typical weights die in the quotient");
    if (w.m != 1) {
        throw Error("mixed-tensor dictionary for m > 1 is not implemented");
    }
    return SemisimpleLabel{{}, w.row(0)};
}

}  // namespace glho
