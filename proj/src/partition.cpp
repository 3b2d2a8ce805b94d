#include "glho/partition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace glho {

Partition Partition::make(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw Error("partition parts must be positive");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1]) {
            throw Error("partition parts must be weakly decreasing");
        }
    }
    Partition p;
    p.parts = std::move(parts);
    return p;
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::transpose() const {
    std::vector<int> t;
    for (int col = 0; rows() > 0 && col < parts[0]; ++col) {
        int height = 0;
        while (height < rows() && parts[static_cast<std::size_t>(height)] > col) ++height;
        t.push_back(height);
    }
    return Partition::make(std::move(t));
}

bool Partition::fits_box(int box_rows, int box_cols) const {
    return rows() <= box_rows && (rows() == 0 || parts[0] <= box_cols);
}

bool Partition::contains(const Partition& inner) const {
    for (int i = 0; i < inner.rows(); ++i) {
        if (part(i) < inner.part(i)) return false;
    }
    return true;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t result = 1;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

namespace {

template <typename Visit>
void box_partitions_rec(int n, int row, int max_part, std::vector<int>& acc, Visit&& visit) {
    visit(acc);
    if (row == n) return;
    for (int p = max_part; p >= 1; --p) {
        acc.push_back(p);
        box_partitions_rec(n, row + 1, p, acc, visit);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> box_partitions(int n) {
    if (n < 1) throw Error("box size must be positive");
    std::vector<std::pair<int, Partition>> graded;
    std::vector<int> acc;
    box_partitions_rec(n, 0, n, acc, [&](const std::vector<int>& parts) {
        Partition p = Partition::make(parts);
        graded.emplace_back(p.size(), std::move(p));
    });
    std::sort(graded.begin(), graded.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second.parts > y.second.parts;  // larger leading parts first within a grade
    });
    std::vector<Partition> out;
    out.reserve(graded.size());
    for (auto& [size, p] : graded) {
        (void)size;
        out.push_back(std::move(p));
    }
    return out;
}

std::int64_t count_self_conjugate(int n) {
    if (n < 1) throw Error("box size must be positive");
    std::int64_t count = 0;
    std::vector<int> acc;
    box_partitions_rec(n, 0, n, acc, [&](const std::vector<int>& parts) {
        // Transpose in place against the original: parts[i] > j iff j-th
        // column has height > i.
        int cols = parts.empty() ? 0 : parts[0];
        for (int col = 0; col < cols; ++col) {
            int height = 0;
            while (height < static_cast<int>(parts.size()) &&
                   parts[static_cast<std::size_t>(height)] > col) {
                ++height;
            }
            if (col >= static_cast<int>(parts.size()) ||
                parts[static_cast<std::size_t>(col)] != height) {
                return;
            }
        }
        ++count;
    });
    return count;
}

namespace {

__int128 gcd128(__int128 x, __int128 y) {
    if (x < 0) x = -x;
    if (y < 0) y = -y;
    while (y != 0) {
        __int128 r = x % y;
        x = y;
        y = r;
    }
    return x;
}

}  // namespace

std::int64_t gl_dim(const Partition& alpha, int n) {
    if (alpha.rows() > n) {
        throw TooManyRows("partition has " + std::to_string(alpha.rows()) +
                          " rows, rank is " + std::to_string(n));
    }
    // Ratio of Vandermonde products in the shifted entries a_i = alpha_i + n - i,
    // kept reduced at every step so intermediates stay near the final value.
    std::vector<std::int64_t> shifted(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) shifted[static_cast<std::size_t>(i)] = alpha.part(i) + n - 1 - i;
    __int128 num = 1;
    __int128 den = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            num *= shifted[static_cast<std::size_t>(i)] - shifted[static_cast<std::size_t>(j)];
            den *= j - i;
            __int128 g = gcd128(num, den);
            if (g > 1) {
                num /= g;
                den /= g;
            }
        }
    }
    // The full ratio is an integer and gcd(num, den) = 1, so den = 1 here.
    if (den != 1) throw Error("dimension ratio failed to reduce");
    if (num > static_cast<__int128>(INT64_MAX)) throw Error("dimension overflows 64 bits");
    return static_cast<std::int64_t>(num);
}

CauchyResult cauchy_check(int n) {
    CauchyResult result;
    for (const Partition& alpha : box_partitions(n)) {
        Partition t = alpha.transpose();
        result.total += gl_dim(alpha, n) * gl_dim(t, n);
        result.pairs.emplace_back(alpha, std::move(t));
    }
    return result;
}

namespace {

struct LrState {
    const Partition* inner;
    const Partition* outer;
    std::vector<int> content_left;      // remaining copies of each letter
    std::vector<std::vector<int>> fill; // fill[r][c] for inner.part(r) <= c < outer.part(r)
};

// Cells are visited row by row, right to left inside a row, so that the
// reading word is a prefix at every step and the lattice condition can
// be enforced incrementally via the letter counts already placed.
std::int64_t lr_count(LrState& st, int row, int col, std::vector<int>& placed) {
    const Partition& inner = *st.inner;
    const Partition& outer = *st.outer;
    while (row < outer.rows() && col < inner.part(row)) {
        ++row;
        col = row < outer.rows() ? outer.part(row) - 1 : 0;
    }
    if (row == outer.rows()) return 1;

    std::int64_t total = 0;
    const int letters = static_cast<int>(st.content_left.size());
    for (int t = 1; t <= letters; ++t) {
        if (st.content_left[static_cast<std::size_t>(t - 1)] == 0) continue;
        // lattice: every prefix of the reading word has #t <= #(t-1)
        if (t > 1 && placed[static_cast<std::size_t>(t - 1)] >= placed[static_cast<std::size_t>(t - 2)]) continue;
        // rows weakly increase left to right
        if (col + 1 < outer.part(row) && t > st.fill[static_cast<std::size_t>(row)][static_cast<std::size_t>(col + 1)]) continue;
        // columns strictly increase downwards
        if (row > 0 && col < outer.part(row - 1) && col >= inner.part(row - 1)) {
            if (t <= st.fill[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)]) continue;
        }
        st.fill[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = t;
        --st.content_left[static_cast<std::size_t>(t - 1)];
        ++placed[static_cast<std::size_t>(t - 1)];
        int next_row = row;
        int next_col = col - 1;
        if (next_col < inner.part(row)) {
            ++next_row;
            next_col = next_row < outer.rows() ? outer.part(next_row) - 1 : 0;
        }
        total += lr_count(st, next_row, next_col, placed);
        --placed[static_cast<std::size_t>(t - 1)];
        ++st.content_left[static_cast<std::size_t>(t - 1)];
    }
    return total;
}

}  // namespace

std::int64_t lr_mult(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.size() != lambda.size() + mu.size()) return 0;
    if (!nu.contains(lambda)) return 0;
    if (mu.rows() == 0) return nu == lambda ? 1 : 0;

    LrState st;
    st.inner = &lambda;
    st.outer = &nu;
    st.content_left.assign(mu.parts.begin(), mu.parts.end());
    st.fill.assign(static_cast<std::size_t>(nu.rows()), {});
    for (int r = 0; r < nu.rows(); ++r) st.fill[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(nu.part(r)), 0);

    std::vector<int> placed(st.content_left.size(), 0);
    int row = 0;
    int col = nu.part(0) - 1;
    return lr_count(st, row, col, placed);
}

std::vector<VVStarEntry> vv_star_flag(int n) {
    std::vector<VVStarEntry> out;
    const std::int64_t base = -static_cast<std::int64_t>(n) * n;
    for (const Partition& alpha : box_partitions(n)) {
        VVStarEntry e;
        e.max_atypical = alpha.self_conjugate();
        e.degree = base - alpha.size();
        e.alpha = alpha;
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace glho
