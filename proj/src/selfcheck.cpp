#include "glho/selfcheck.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>
#include <string_view>

#include "glho/homotopy.hpp"
#include "glho/kseries.hpp"
#include "glho/parse.hpp"
#include "glho/partition.hpp"
#include "schur_oracle.hpp"

namespace glho::selfcheck {

namespace {

// Each criterion accumulates into one result; the first failed
// assertion is kept verbatim so a red line is actionable on its own.
class Check {
  public:
    explicit Check(std::string name) { result_.name = std::move(name); }

    template <typename A, typename B>
    void eq(const A& actual, const B& expected, std::string_view what) {
        ++asserts_;
        if (!(actual == static_cast<A>(expected))) fail(what);
    }

    void is_true(bool cond, std::string_view what) {
        ++asserts_;
        if (!cond) fail(what);
    }

    CriterionResult finish(std::string_view summary) {
        result_.pass = !failed_;
        if (result_.pass) {
            std::ostringstream os;
            os << summary << " (" << asserts_ << " assertions)";
            result_.detail = os.str();
        }
        return result_;
    }

  private:
    void fail(std::string_view what) {
        if (!failed_) result_.detail = std::string(what);
        failed_ = true;
    }

    CriterionResult result_;
    bool failed_ = false;
    long asserts_ = 0;
};

HoObject simple_obj(const BlockKey& key, std::int64_t i) {
    HoObject x;
    x.key = key;
    x.add(HoSummand::S(i));
    return x;
}

std::int64_t rng_int(std::mt19937& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

BlockKey random_key(std::mt19937& rng, int m) {
    std::set<std::int64_t> labels;
    while (static_cast<int>(labels.size()) < m) labels.insert(rng_int(rng, -10, 10));
    std::vector<std::int64_t> pool(labels.begin(), labels.end());
    std::int64_t base = pool[static_cast<std::size_t>(rng_int(rng, 0, m - 1))];
    labels.erase(base);
    return BlockKey::make(std::move(labels), base);
}

Weight random_atypical_weight(std::mt19937& rng, int m) {
    BlockKey key = random_key(rng, m);
    return weight_at(key, 0);
}

Indec random_indec(std::mt19937& rng) {
    std::int64_t a = rng_int(rng, -8, 8);
    switch (rng_int(rng, 0, 3)) {
        case 0: return Indec::P(a);
        case 1: return Indec::L(a);
        case 2: return Indec::R(a, a + rng_int(rng, 1, 6));
        default: return Indec::B(a, a + rng_int(rng, 1, 6));
    }
}

BlockObject random_block_object(std::mt19937& rng) {
    BlockObject x;
    std::int64_t count = rng_int(rng, 0, 5);
    for (std::int64_t c = 0; c < count; ++c) x.add(random_indec(rng), rng_int(rng, 1, 3));
    return x;
}

CriterionResult check_hom_table() {
    Check c("hom-table");
    BlockKey keys[] = {BlockKey::make({}, 0), BlockKey::make({2, 5}, 0)};
    for (const BlockKey& key : keys) {
        for (std::int64_t i = -10; i <= 10; ++i) {
            for (std::int64_t j = -10; j <= 10; ++j) {
                std::int64_t expected = (i >= j && (i - j) % 2 == 0) ? 1 : 0;
                std::ostringstream what;
                what << "dim [S(" << i << "),S(" << j << ")] != " << expected;
                c.eq(hom_dim(simple_obj(key, i), simple_obj(key, j)), expected, what.str());
            }
        }
    }
    return c.finish("hom rule i >= j, i = j mod 2 over [-10,10]^2");
}

CriterionResult check_vanishing_endomorphism() {
    Check c("vanishing-endomorphism");
    BlockKey key = BlockKey::make({}, 0);
    for (std::int64_t i = -10; i <= 10; ++i) {
        for (std::int64_t j = i + 1; j <= 10; ++j) {
            c.eq(hom_dim(simple_obj(key, i), simple_obj(key, j)), 0,
                 "nonzero hom into a higher simple");
        }
        c.eq(hom_dim(simple_obj(key, i), simple_obj(key, i)), 1, "endomorphism ring not k");
    }
    return c.finish("vanishing below and scalar endomorphisms over [-10,10]");
}

CriterionResult check_minimal_model_gl11() {
    Check c("minimal-model-gl11");
    const int depth = 10;
    for (std::int64_t a = -5; a <= 5; ++a) {
        BlockKey key = BlockKey::make({}, a);
        MinimalModelSeries mm = minimal_model_series(key, 0, depth);
        c.eq(mm.omega.terms.size(), std::size_t{depth + 1}, "omega term count");
        for (int i = 0; i <= depth; ++i) {
            auto it = mm.omega.terms.find(a - 2 * i);
            c.is_true(it != mm.omega.terms.end(), "omega misses exponent a-2i");
            if (it == mm.omega.terms.end()) continue;
            c.eq(it->second.size(), std::size_t{1}, "omega exponent carries several labels");
            c.eq(it->second.count(-2 * i), std::size_t{1}, "omega label is not V at index -2i");
            c.eq(it->second.at(-2 * i), 1, "omega coefficient is not 1");
            c.eq(position(key, -2 * i), a - 2 * i, "label position differs from exponent");
        }
        c.eq(mm.kernel.terms.size(), std::size_t{depth}, "kernel term count");
        for (int i = 1; i <= depth; ++i) {
            auto it = mm.kernel.terms.find(a - 2 * i + 1);
            c.is_true(it != mm.kernel.terms.end(), "kernel misses exponent a-2i+1");
            if (it == mm.kernel.terms.end()) continue;
            c.eq(it->second.count(-2 * i + 1), std::size_t{1}, "kernel label is not V* at index 1-2i");
            c.eq(it->second.at(-2 * i + 1), 1, "kernel coefficient is not 1");
        }
        // Expansion: simple factors appear once each, at their own degree.
        KSeries simples = expand_to_simples(mm.omega);
        for (int t = 0; t <= 2 * depth + 1; ++t) {
            auto it = simples.terms.find(a - t);
            c.is_true(it != simples.terms.end() && it->second.count(-t) == 1 &&
                          it->second.at(-t) == 1,
                      "expansion misses q^(a-t) L(a-t)");
        }
    }
    return c.finish("principal-block series V(a), V(a-2), ... with odd-exponent kernel");
}

CriterionResult check_euler_identity() {
    Check c("euler-identity");
    std::mt19937 rng(0x9e3779b9u);
    const int depth = 10;
    for (int m : {1, 2, 3}) {
        for (int trial = 0; trial < 20; ++trial) {
            BlockKey key = random_key(rng, m);
            std::int64_t u = rng_int(rng, -5, 5);
            KSeries e = euler_check(key, u, depth);
            KSeries main = e.main_part();
            c.eq(main.terms.size(), std::size_t{1}, "more than one exact term");
            std::int64_t d = block_deg(key, u);
            c.is_true(main.terms.count(d) == 1 && main.terms[d].size() == 1 &&
                          main.terms[d].count(u) == 1 && main.terms[d].at(u) == 1,
                      "exact part is not q^deg [L(u)]");
        }
    }
    return c.finish("telescoping to q^deg [L(u)] for m in {1,2,3}, 20 random blocks each");
}

CriterionResult check_self_conjugate() {
    Check c("self-conjugate-count");
    for (int n = 1; n <= 12; ++n) {
        std::vector<Partition> box = box_partitions(n);
        c.eq(static_cast<std::int64_t>(box.size()), binomial(2 * n, n), "box count != C(2n,n)");
        std::set<Partition> distinct(box.begin(), box.end());
        c.eq(distinct.size(), box.size(), "box enumeration repeats a partition");
        for (const Partition& p : box) {
            c.is_true(p.fits_box(n, n), "enumerated partition leaves the box");
        }
        c.eq(count_self_conjugate(n), std::int64_t{1} << n, "self-conjugate count != 2^n");
        std::set<Partition> filtered;
        for (const Partition& p : box) {
            if (p.self_conjugate()) filtered.insert(p);
        }
        c.is_true(filtered == oracle::self_conjugate_by_hooks(n),
                  "self-conjugate set differs from the hook reconstruction");
    }
    return c.finish("2^n self-conjugate and C(2n,n) box partitions for n <= 12");
}

CriterionResult check_cauchy() {
    Check c("cauchy-identity");
    for (int n = 1; n <= 5; ++n) {
        CauchyResult r = cauchy_check(n);
        c.eq(r.total, std::int64_t{1} << (n * n), "total != 2^(n^2)");
        c.eq(static_cast<std::int64_t>(r.pairs.size()), binomial(2 * n, n), "pair count");
        for (const auto& [alpha, beta] : r.pairs) {
            c.is_true(alpha.transpose() == beta, "pair partner is not the transpose");
        }
    }
    return c.finish("sum of dim(a) dim(a^T) = 2^(n^2) for n <= 5");
}

CriterionResult check_vv_star() {
    Check c("vvstar-flag");
    for (int n = 1; n <= 6; ++n) {
        std::vector<VVStarEntry> flag = vv_star_flag(n);
        c.eq(static_cast<std::int64_t>(flag.size()), binomial(2 * n, n), "entry count");
        std::int64_t maximal = 0;
        std::int64_t min_max_degree = 0;
        const std::int64_t nn = static_cast<std::int64_t>(n) * n;
        for (const VVStarEntry& e : flag) {
            c.is_true(e.degree >= -2 * nn && e.degree <= -nn, "degree outside [-2n^2, -n^2]");
            c.eq(e.max_atypical, e.alpha.self_conjugate(), "atypicality flag");
            if (e.max_atypical) {
                ++maximal;
                min_max_degree = std::min(min_max_degree, e.degree);
            }
        }
        c.eq(maximal, std::int64_t{1} << n, "maximal-atypical count != 2^n");
        c.eq(min_max_degree, -2 * nn, "socle degree != -2n^2");
    }
    return c.finish("2^n maximal entries with degrees in [-2n^2, -n^2] for n <= 6");
}

CriterionResult check_ho_reduce() {
    Check c("homotopy-reduction");
    std::mt19937 rng(0x243f6a88u);
    for (int trial = 0; trial < 1000; ++trial) {
        BlockObject x = random_block_object(rng);
        HoObject h = ho_reduce(x);
        c.is_true(ho_reduce(ho_embed(h)) == h, "reduction is not idempotent");

        // Reference normal form, summand by summand.
        HoObject expected;
        for (const auto& [s, mult] : x.summands) {
            if (s.kind == IndecKind::P) continue;
            if (s.kind == IndecKind::B && s.even_length()) continue;
            if (s.kind == IndecKind::B) {
                expected.add(HoSummand::S(s.b), mult);
            } else if (s.even_length()) {
                expected.add(HoSummand::EvenR(s.a, s.b), mult);
            } else {
                expected.add(HoSummand::S(s.a), mult);
            }
        }
        c.is_true(h == expected, "normal form disagrees with the per-summand rule");

        BlockObject dd = twisted_dual(twisted_dual(x));
        c.is_true(dd == x, "twisted dual is not an involution");
        IdealClass cls = classify_ideal(x);
        IdealClass dual_cls = classify_ideal(twisted_dual(x));
        c.is_true(cls.in_tplus == dual_cls.in_tminus && cls.in_tminus == dual_cls.in_tplus,
                  "duality does not swap the two ideals");
    }
    return c.finish("normal forms, idempotence and duality on 1000 random objects");
}

CriterionResult check_shift_parity() {
    Check c("shift-parity");
    std::mt19937 rng(0x13198a2eu);
    BlockKey key = BlockKey::make({1}, 0);
    for (int trial = 0; trial < 200; ++trial) {
        HoObject x, y;
        x.key = key;
        y.key = key;
        std::int64_t nx = rng_int(rng, 1, 4);
        std::int64_t ny = rng_int(rng, 1, 4);
        for (std::int64_t s = 0; s < nx; ++s) x.add(HoSummand::S(rng_int(rng, -6, 6)));
        for (std::int64_t s = 0; s < ny; ++s) y.add(HoSummand::S(rng_int(rng, -6, 6)));
        std::int64_t base_dim = hom_dim(x, y);
        for (std::int64_t k = -5; k <= 5; ++k) {
            c.eq(hom_dim(shift(x, k), shift(y, k)), base_dim, "hom changes under shift");
        }
        ParityCount before = isogeny_image(x);
        ParityCount after = isogeny_image(shift(x, 1));
        c.is_true(before.ev == after.odd && before.odd == after.ev,
                  "suspension does not flip the parity");
        c.is_true(shift(shift(x, 1), -1) == x, "shift round trip");
    }
    for (std::int64_t i = -5; i <= 5; ++i) {
        HoObject s = simple_obj(key, i);
        c.is_true(shift(s, 1) == simple_obj(key, i - 1), "S(i)[1] != S(i-1)");
    }
    return c.finish("hom invariance, parity flip, and the suspension law");
}

CriterionResult check_degree_filtration() {
    Check c("degree-filtration");
    std::mt19937 rng(0x85a308d3u);
    for (int trial = 0; trial < 200; ++trial) {
        KacFlagInput flag;
        std::int64_t entries = rng_int(rng, 1, 10);
        for (std::int64_t e = 0; e < entries; ++e) {
            flag.entries.emplace_back(rng_int(rng, -6, 6), rng_int(rng, -4, 4));
        }
        std::vector<FiltrationGroup> groups = degree_filtration(flag);
        KacFlagInput shuffled = flag;
        std::shuffle(shuffled.entries.begin(), shuffled.entries.end(), rng);
        c.is_true(degree_filtration(shuffled) == groups, "output depends on input order");
        for (std::size_t g = 0; g + 1 < groups.size(); ++g) {
            c.is_true(groups[g].degree > groups[g + 1].degree, "degrees not strictly decreasing");
        }
        std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> recovered, original;
        for (const auto& g : groups) {
            for (const auto& [label, mult] : g.labels) recovered[{label, g.degree}] += mult;
        }
        for (const auto& [label, deg] : flag.entries) ++original[{label, deg}];
        c.is_true(recovered == original, "groups do not recover the input multiset");
    }
    {
        // Projective cover of L(0) in the principal GL(1|1) block.
        KacFlagInput flag;
        flag.key = BlockKey::make({}, 0);
        flag.entries = {{0, 0}, {1, 1}};
        std::vector<FiltrationGroup> groups = degree_filtration(flag);
        c.eq(groups.size(), std::size_t{2}, "projective flag group count");
        c.is_true(groups[0].degree == 1 && groups[0].labels == std::map<std::int64_t, std::int64_t>{{1, 1}},
                  "bottom group is not V(1) at degree 1");
        c.is_true(groups[1].degree == 0 && groups[1].labels == std::map<std::int64_t, std::int64_t>{{0, 1}},
                  "top group is not V(0) at degree 0");
    }
    for (std::int64_t a = -3; a <= 3; ++a) {
        KacFlagInput flag;
        flag.entries = {{a, a}, {a - 2, a - 2}, {a - 4, a - 4}};
        std::vector<FiltrationGroup> groups = degree_filtration(flag);
        c.eq(groups.size(), std::size_t{3}, "prefix flag group count");
        for (std::size_t g = 0; g < 3; ++g) {
            c.is_true(groups[g].degree == a - 2 * static_cast<std::int64_t>(g) &&
                          groups[g].labels.size() == 1,
                      "prefix groups are not decreasing singletons");
        }
    }
    return c.finish("order-free grouping, projective-cover and prefix flags");
}

CriterionResult check_lr_oracle() {
    Check c("lr-oracle");
    const int nvars = 4;
    std::vector<Partition> shapes;
    for (int s = 0; s <= 6; ++s) {
        for (const Partition& p : oracle::partitions_of(s, nvars, s == 0 ? 1 : s)) shapes.push_back(p);
    }
    for (const Partition& la : shapes) {
        oracle::Poly pla = oracle::schur_polynomial(la, nvars);
        for (const Partition& mu : shapes) {
            oracle::Poly product = oracle::multiply(pla, oracle::schur_polynomial(mu, nvars));
            std::map<Partition, std::int64_t> expansion =
                oracle::expand_in_schur_basis(product, nvars);
            int total = la.size() + mu.size();
            int width = (la.rows() ? la.parts[0] : 0) + (mu.rows() ? mu.parts[0] : 0);
            for (const Partition& nu : oracle::partitions_of(total, nvars, std::max(width, 1))) {
                auto it = expansion.find(nu);
                std::int64_t expected = it == expansion.end() ? 0 : it->second;
                c.eq(lr_mult(la, mu, nu), expected, "tableau rule differs from the Schur product");
            }
            c.is_true(lr_mult(la, mu, Partition::make({total + 1})) == 0,
                      "nonzero coefficient at the wrong size");
        }
    }
    // Dimension identity over GL(n), n <= 4.
    for (int n = 1; n <= 4; ++n) {
        for (const Partition& la : shapes) {
            if (la.rows() > n || la.size() > 4) continue;
            for (const Partition& mu : shapes) {
                if (mu.rows() > n || la.size() + mu.size() > 8) continue;
                int total = la.size() + mu.size();
                int width = (la.rows() ? la.parts[0] : 0) + (mu.rows() ? mu.parts[0] : 0);
                std::int64_t sum = 0;
                for (const Partition& nu : oracle::partitions_of(total, n, std::max(width, 1))) {
                    sum += lr_mult(la, mu, nu) * gl_dim(nu, n);
                }
                c.eq(sum, gl_dim(la, n) * gl_dim(mu, n), "dimension identity fails");
            }
        }
    }
    return c.finish("tableau rule vs Schur products (|la|,|mu| <= 6) and dimension sums");
}

CriterionResult check_block_geometry() {
    Check c("block-geometry");
    std::mt19937 rng(0x452821e6u);
    for (int trial = 0; trial < 500; ++trial) {
        int m = static_cast<int>(rng_int(rng, 1, 4));
        Weight w = random_atypical_weight(rng, m);
        BlockKey key = block_key(w);
        c.is_true(weight_at(key, 0) == w, "weight_at does not invert block_key");

        std::int64_t charge = block_charge(key);
        std::int64_t previous = block_deg(key, -11);
        for (std::int64_t i = -10; i <= 10; ++i) {
            std::int64_t deg = block_deg(key, i);
            c.is_true(deg > previous, "block degree not strictly increasing");
            previous = deg;
            c.eq(central_charge(weight_at(key, i)), charge, "charge varies inside the block");
            c.eq(atypicality(weight_at(key, i)), 1, "block weight not atypical");
        }
    }
    return c.finish("round trip, monotone degree and constant charge on 500 random blocks");
}

}  // namespace

std::vector<CriterionResult> run_all() {
    return {
        check_hom_table(),
        check_vanishing_endomorphism(),
        check_minimal_model_gl11(),
        check_euler_identity(),
        check_self_conjugate(),
        check_cauchy(),
        check_vv_star(),
        check_ho_reduce(),
        check_shift_parity(),
        check_degree_filtration(),
        check_lr_oracle(),
        check_block_geometry(),
    };
}

bool report(std::ostream& os, const std::vector<CriterionResult>& results) {
    bool all = true;
    for (const CriterionResult& r : results) {
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.detail.empty()) os << "  [" << r.detail << "]";
        os << '\n';
        all = all && r.pass;
    }
    os << (all ? "all criteria passed" : "some criteria FAILED") << '\n';
    return all;
}

}  // namespace glho::selfcheck
