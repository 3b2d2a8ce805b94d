#include "glho/weight.hpp"

#include <numeric>
#include <string>

namespace glho {

Weight Weight::make(int m, int n, std::vector<std::int64_t> rows) {
    if (m < 1 || n < 1) {
        throw InvalidWeight("weight needs m >= 1 and n >= 1, got m=" + std::to_string(m) +
                            " n=" + std::to_string(n));
    }
    if (rows.size() != static_cast<std::size_t>(m + n)) {
        throw InvalidWeight("weight needs m+n = " + std::to_string(m + n) + " rows, got " +
                            std::to_string(rows.size()));
    }
    for (int i = 0; i + 1 < m; ++i) {
        if (rows[i] < rows[i + 1]) throw InvalidWeight("first half not weakly decreasing");
    }
    for (int j = m; j + 1 < m + n; ++j) {
        if (rows[j] < rows[j + 1]) throw InvalidWeight("second half not weakly decreasing");
    }
    Weight w;
    w.m = m;
    w.n = n;
    w.rows = std::move(rows);
    return w;
}

Bidegree deg_bidegree(const Weight& w) {
    std::int64_t d = std::accumulate(w.rows.begin(), w.rows.begin() + w.m, std::int64_t{0});
    std::int64_t dprime = std::accumulate(w.rows.begin() + w.m, w.rows.end(), std::int64_t{0});
    return Bidegree{d, dprime, d};
}

LabelSets label_sets(const Weight& w) {
    LabelSets ls;
    for (int i = 1; i <= w.m; ++i) ls.vee.insert(w.row(i - 1) + 1 - i);
    for (int j = 1; j <= w.n; ++j) ls.wedge.insert(j - w.m - w.row(w.m + j - 1));
    return ls;
}

int atypicality(const Weight& w) {
    LabelSets ls = label_sets(w);
    int count = 0;
    for (std::int64_t v : ls.vee) count += ls.wedge.count(v) ? 1 : 0;
    return count;
}

Weight ber_twist(const Weight& w, std::int64_t k) {
    Weight out = w;
    for (int i = 0; i < w.m; ++i) out.rows[i] += k;
    for (int j = w.m; j < w.m + w.n; ++j) out.rows[j] -= k;
    return out;
}

std::int64_t central_charge(const Weight& w) {
    Bidegree bd = deg_bidegree(w);
    return bd.d + bd.dprime;
}

Weight kac_layer_weight(int n, int i) {
    if (n < 1 || i < 0 || i > n) {
        throw Error("layer weight needs 1 <= n and 0 <= i <= n");
    }
    std::vector<std::int64_t> rows;
    rows.reserve(static_cast<std::size_t>(2 * n));
    for (int r = 0; r < n - i; ++r) rows.push_back(0);
    for (int r = 0; r < i; ++r) rows.push_back(-i);
    for (int r = 0; r < i; ++r) rows.push_back(i);
    for (int r = 0; r < n - i; ++r) rows.push_back(0);
    return Weight::make(n, n, std::move(rows));
}

}  // namespace glho
