#include "glho/kseries.hpp"

#include <algorithm>
#include <string>

namespace glho {

KSeries& KSeries::add_term(std::int64_t deg, std::int64_t label, std::int64_t coeff) {
    if (coeff == 0) return *this;
    d_max = std::max(d_max, deg);
    auto& slot = terms[deg][label];
    slot += coeff;
    if (slot == 0) {
        terms[deg].erase(label);
        if (terms[deg].empty()) terms.erase(deg);
    }
    return *this;
}

KSeries KSeries::main_part() const {
    KSeries out = *this;
    out.terms.clear();
    for (const auto& [deg, labels] : terms) {
        if (deg >= truncation) out.terms[deg] = labels;
    }
    return out;
}

KSeries KSeries::tail() const {
    KSeries out = *this;
    out.terms.clear();
    for (const auto& [deg, labels] : terms) {
        if (deg < truncation) out.terms[deg] = labels;
    }
    return out;
}

KSeries KSeries::q_shift(std::int64_t k) const {
    KSeries out = *this;
    out.terms.clear();
    for (const auto& [deg, labels] : terms) out.terms[deg + k] = labels;
    out.d_max += k;
    out.truncation += k;
    return out;
}

namespace {

KSeries combine(const KSeries& x, const KSeries& y, std::int64_t sign) {
    if (x.variant != y.variant) throw Error("cannot combine series of different variants");
    if (x.key && y.key && !(*x.key == *y.key)) throw Error("cannot combine series over different blocks");
    KSeries out = x;
    if (!out.key) out.key = y.key;
    out.d_max = std::max(x.d_max, y.d_max);
    out.truncation = std::max(x.truncation, y.truncation);
    for (const auto& [deg, labels] : y.terms) {
        for (const auto& [label, coeff] : labels) out.add_term(deg, label, sign * coeff);
    }
    return out;
}

}  // namespace

KSeries operator+(const KSeries& x, const KSeries& y) { return combine(x, y, 1); }

KSeries operator-(const KSeries& x, const KSeries& y) { return combine(x, y, -1); }

KSeries expand_to_simples(const KSeries& s) {
    if (s.variant == SeriesVariant::simple) {
        throw Error("series is already over simple labels");
    }
    if (!s.key) throw UnknownBlock("series labels carry no block key");
    const BlockKey& key = *s.key;
    KSeries out;
    out.variant = SeriesVariant::simple;
    out.key = s.key;
    out.d_max = s.d_max;
    out.truncation = s.truncation;
    for (const auto& [deg, labels] : s.terms) {
        for (const auto& [label, coeff] : labels) {
            // V(i) and V(i)* share the factors L(i) (top of V(i)) and L(i-1).
            std::int64_t gap = block_deg(key, label) - block_deg(key, label - 1);
            out.add_term(deg, label, coeff);
            out.add_term(deg - gap, label - 1, coeff);
        }
    }
    return out;
}

MinimalModelSeries minimal_model_series(const BlockKey& key, std::int64_t u, int depth) {
    if (depth < 1) throw Error("truncation depth must be at least 1");
    MinimalModelSeries mm;
    mm.omega.variant = SeriesVariant::kac_plus;
    mm.omega.key = key;
    for (int i = 0; i <= depth; ++i) {
        mm.omega.add_term(block_deg(key, u - 2 * i), u - 2 * i, 1);
    }
    mm.omega.d_max = block_deg(key, u);
    mm.omega.truncation = block_deg(key, u - 2 * depth);

    mm.kernel.variant = SeriesVariant::kac_minus;
    mm.kernel.key = key;
    for (int i = 1; i <= depth; ++i) {
        mm.kernel.add_term(block_deg(key, u - 2 * i + 1), u - 2 * i + 1, 1);
    }
    mm.kernel.d_max = block_deg(key, u - 1);
    mm.kernel.truncation = block_deg(key, u - 2 * depth + 1);
    return mm;
}

KSeries euler_check(const BlockKey& key, std::int64_t u, int depth) {
    MinimalModelSeries mm = minimal_model_series(key, u, depth);
    KSeries diff = expand_to_simples(mm.omega) - expand_to_simples(mm.kernel);
    diff.d_max = block_deg(key, u);
    diff.truncation = block_deg(key, u) - 2 * depth;
    return diff;
}

std::vector<FiltrationGroup> degree_filtration(const KacFlagInput& flag) {
    if (flag.entries.empty()) throw Error("empty flag has no filtration");
    if (flag.key) {
        for (const auto& [label, deg] : flag.entries) {
            if (deg != block_deg(*flag.key, label)) {
                throw Error("flag degree " + std::to_string(deg) +
                            " disagrees with the block degree of V(" + std::to_string(label) + ")");
            }
        }
    }
    std::map<std::int64_t, std::map<std::int64_t, std::int64_t>, std::greater<>> groups;
    for (const auto& [label, deg] : flag.entries) ++groups[deg][label];
    std::vector<FiltrationGroup> out;
    for (auto& [deg, labels] : groups) out.push_back(FiltrationGroup{deg, std::move(labels)});
    return out;
}

}  // namespace glho
