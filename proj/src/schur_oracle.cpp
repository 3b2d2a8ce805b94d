#include "schur_oracle.hpp"

#include <algorithm>
#include <functional>

#include "glho/errors.hpp"

namespace glho::oracle {

namespace {

// Visits every semistandard filling of lambda with entries in 1..nvars.
// Rows are filled left to right, top to bottom; the constraints are
// weak increase along rows and strict increase down columns.
void for_each_ssyt(const Partition& lambda, int nvars,
                   const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    if (lambda.rows() > nvars) return;
    std::vector<std::vector<int>> fill(static_cast<std::size_t>(lambda.rows()));
    for (int r = 0; r < lambda.rows(); ++r) {
        fill[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lambda.part(r)), 0);
    }
    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == lambda.rows()) {
            visit(fill);
            return;
        }
        int nr = r;
        int nc = c + 1;
        if (nc == lambda.part(r)) {
            ++nr;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
        if (r > 0) lo = std::max(lo, fill[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        for (int v = lo; v <= nvars; ++v) {
            fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            rec(nr, nc);
        }
        fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
    };
    if (lambda.rows() == 0) {
        visit(fill);
    } else {
        rec(0, 0);
    }
}

}  // namespace

Poly schur_polynomial(const Partition& lambda, int nvars) {
    Poly p;
    for_each_ssyt(lambda, nvars, [&](const std::vector<std::vector<int>>& fill) {
        Monomial mono{0, 0, 0, 0};
        for (const auto& row : fill) {
            for (int v : row) ++mono[static_cast<std::size_t>(v - 1)];
        }
        ++p[mono];
    });
    return p;
}

Poly multiply(const Poly& p, const Poly& q) {
    Poly out;
    for (const auto& [mp, cp] : p) {
        for (const auto& [mq, cq] : q) {
            Monomial m;
            for (std::size_t v = 0; v < m.size(); ++v) m[v] = mp[v] + mq[v];
            out[m] += cp * cq;
            if (out[m] == 0) out.erase(m);
        }
    }
    return out;
}

std::map<Partition, std::int64_t> expand_in_schur_basis(Poly p, int nvars) {
    std::map<Partition, std::int64_t> out;
    while (!p.empty()) {
        auto lead = std::prev(p.end());  // lexicographically largest exponent
        Monomial mono = lead->first;
        std::int64_t coeff = lead->second;
        std::vector<int> parts;
        for (int v = 0; v < nvars; ++v) {
            int e = mono[static_cast<std::size_t>(v)];
            if (v > 0 && e > mono[static_cast<std::size_t>(v - 1)]) {
                throw Error("leading exponent is not dominant; input not symmetric");
            }
            if (e > 0) parts.push_back(e);
        }
        Partition lambda = Partition::make(std::move(parts));
        out[lambda] += coeff;
        Poly s = schur_polynomial(lambda, nvars);
        for (const auto& [m, c] : s) {
            p[m] -= coeff * c;
            if (p[m] == 0) p.erase(m);
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        it = it->second == 0 ? out.erase(it) : std::next(it);
    }
    return out;
}

std::int64_t ssyt_count(const Partition& lambda, int n) {
    std::int64_t count = 0;
    for_each_ssyt(lambda, n, [&](const std::vector<std::vector<int>>&) { ++count; });
    return count;
}

std::set<Partition> self_conjugate_by_hooks(int n) {
    std::set<Partition> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        // Arm lengths of the diagonal hooks, strictly decreasing.
        std::vector<int> arms;
        for (int a = n - 1; a >= 0; --a) {
            if (mask & (1u << a)) arms.push_back(a);
        }
        std::vector<std::vector<bool>> grid(static_cast<std::size_t>(n),
                                            std::vector<bool>(static_cast<std::size_t>(n), false));
        for (std::size_t k = 0; k < arms.size(); ++k) {
            int d = static_cast<int>(k);
            for (int c = d; c <= d + arms[k]; ++c) {
                grid[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)] = true;
                grid[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)] = true;
            }
        }
        std::vector<int> parts;
        for (int r = 0; r < n; ++r) {
            int len = 0;
            while (len < n && grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(len)]) ++len;
            if (len > 0) parts.push_back(len);
        }
        Partition p = Partition::make(std::move(parts));
        if (!p.self_conjugate() || !p.fits_box(n, n)) {
            throw Error("hook reconstruction produced a bad partition");
        }
        out.insert(std::move(p));
    }
    return out;
}

std::vector<Partition> partitions_of(int s, int max_rows, int max_part) {
    std::vector<Partition> out;
    std::vector<int> acc;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.push_back(Partition::make(acc));
            return;
        }
        if (static_cast<int>(acc.size()) == max_rows) return;
        for (int p = std::min(left, cap); p >= 1; --p) {
            acc.push_back(p);
            rec(left - p, p);
            acc.pop_back();
        }
    };
    rec(s, max_part);
    return out;
}

}  // namespace glho::oracle
