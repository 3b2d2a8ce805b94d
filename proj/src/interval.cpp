#include "glho/interval.hpp"

#include <string>

namespace glho {

namespace {

void require_interval(std::int64_t a, std::int64_t b) {
    if (a > b) {
        throw Error("interval [" + std::to_string(a) + "," + std::to_string(b) +
                    "] needs a <= b");
    }
}

}  // namespace

Indec Indec::R(std::int64_t a, std::int64_t b) {
    require_interval(a, b);
    return Indec{IndecKind::R, a, b};
}

Indec Indec::B(std::int64_t a, std::int64_t b) {
    require_interval(a, b);
    if (a == b) return Indec{IndecKind::R, a, a};  // B[a,a] = L(a) = R[a,a]
    return Indec{IndecKind::B, a, b};
}

Indec Indec::P(std::int64_t i) { return Indec{IndecKind::P, i, i}; }

Indec Indec::L(std::int64_t i) { return Indec{IndecKind::R, i, i}; }

BlockObject& BlockObject::add(const Indec& x, std::int64_t mult) {
    if (mult < 0) throw Error("negative multiplicity");
    if (mult > 0) summands[x] += mult;
    return *this;
}

Indec twisted_dual(const Indec& x) {
    switch (x.kind) {
        case IndecKind::R: return x.simple() ? x : Indec::B(x.a, x.b);
        case IndecKind::B: return Indec::R(x.a, x.b);
        case IndecKind::P: return x;
    }
    throw Error("unreachable");
}

BlockObject twisted_dual(const BlockObject& x) {
    BlockObject out;
    out.key = x.key;
    for (const auto& [s, mult] : x.summands) out.add(twisted_dual(s), mult);
    return out;
}

KacFlags kac_flag(const Indec& x) {
    KacFlags flags;
    if (x.kind == IndecKind::P) {
        flags.kac = {FlagLabel{x.a + 1, false}, FlagLabel{x.a, false}};
        flags.anti = {FlagLabel{x.a, true}, FlagLabel{x.a + 1, true}};
        return flags;
    }
    if (!x.even_length()) {
        throw NoFlag("odd-length interval has no standard flag");
    }
    if (x.kind == IndecKind::R) {
        for (std::int64_t i = x.b; i > x.a; i -= 2) flags.kac.push_back(FlagLabel{i, false});
    } else {
        for (std::int64_t i = x.a + 1; i <= x.b; i += 2) flags.anti.push_back(FlagLabel{i, true});
    }
    return flags;
}

IdealClass classify_ideal(const Indec& x) {
    if (x.kind == IndecKind::P) return IdealClass{true, true, true};
    if (!x.even_length()) return IdealClass{false, false, false};
    if (x.kind == IndecKind::R) return IdealClass{true, false, false};
    return IdealClass{false, true, false};
}

IdealClass classify_ideal(const BlockObject& x) {
    IdealClass agg{true, true, true};
    for (const auto& [s, mult] : x.summands) {
        (void)mult;
        IdealClass c = classify_ideal(s);
        agg.in_tplus = agg.in_tplus && c.in_tplus;
        agg.in_tminus = agg.in_tminus && c.in_tminus;
        agg.projective = agg.projective && c.projective;
    }
    return agg;
}

std::map<std::int64_t, std::int64_t> composition_factors(const BlockObject& x) {
    std::map<std::int64_t, std::int64_t> factors;
    for (const auto& [s, mult] : x.summands) {
        if (s.kind == IndecKind::P) {
            factors[s.a - 1] += mult;
            factors[s.a] += 2 * mult;
            factors[s.a + 1] += mult;
        } else {
            for (std::int64_t i = s.a; i <= s.b; ++i) factors[i] += mult;
        }
    }
    return factors;
}

}  // namespace glho
