#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "supermac/symfunc.hpp"

using namespace supermac;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

// Brute-force oracle: expand a product of Newton sums over explicit exponent
// vectors in `nvars` variables and collect coefficients by sorted type.
std::map<Partition, long> brute_power_in_monomials(const Partition& lam, int nvars) {
    std::vector<std::vector<int>> monomials = {std::vector<int>(static_cast<size_t>(nvars), 0)};
    for (int i = 0; i < lam.length(); ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& mono : monomials) {
            for (int v = 0; v < nvars; ++v) {
                auto grown = mono;
                grown[static_cast<size_t>(v)] += lam.part(i);
                next.push_back(std::move(grown));
            }
        }
        monomials = std::move(next);
    }
    std::map<std::vector<int>, long> counts;
    for (auto mono : monomials) {
        std::sort(mono.begin(), mono.end(), std::greater<int>());
        counts[mono] += 1;
    }
    std::map<Partition, long> out;
    for (const auto& [expo, count] : counts) {
        Partition kappa(expo);
        // the symmetric product spreads each type evenly over its orbit
        const long orbit = static_cast<long>(monomial_exponents(kappa, nvars).size());
        REQUIRE(orbit > 0);
        REQUIRE(count % orbit == 0);
        out[kappa] = count / orbit;
    }
    return out;
}

MacdonaldEngine<Rational>& engine_qt() {
    static MacdonaldEngine<Rational> e(default_exact_params());
    return e;
}

MacdonaldEngine<Rational>& engine_tq() {
    static MacdonaldEngine<Rational> e(default_exact_params().swapped());
    return e;
}

}  // namespace

TEST_CASE("monomial expansion") {
    CHECK(monomial_exponents(P({1}), 2).size() == 2);
    auto expos = monomial_exponents(P({2, 1}), 2);
    CHECK(expos.size() == 2);  // x1^2 x2 + x1 x2^2
    CHECK(monomial_exponents(P({1, 1, 1}), 2).empty());
}

TEST_CASE("power to monomial transition against brute force") {
    auto& eng = engine_qt();
    for (const Partition& lam : partitions_up_to(5)) {
        if (lam.empty()) continue;
        const int d = static_cast<int>(lam.weight());
        SymFunc<Rational> p = SymFunc<Rational>::unit(Basis::PowerSum, lam);
        SymFunc<Rational> m = eng.to_m(p);
        auto oracle = brute_power_in_monomials(lam, d);
        for (const auto& [kappa, c] : oracle) {
            CHECK(m.coeff(kappa) == Rational(c));
        }
        CHECK(m.terms.size() == oracle.size());
        // round trip
        SymFunc<Rational> back = eng.to_p(m);
        CHECK(back.terms.size() == 1);
        CHECK(back.coeff(lam) == Rational(1));
    }

    // the classic small case: p_1^2 = m_2 + 2 m_11
    SymFunc<Rational> p11 = SymFunc<Rational>::unit(Basis::PowerSum, P({1, 1}));
    auto m = engine_qt().to_m(p11);
    CHECK(m.coeff(P({2})) == Rational(1));
    CHECK(m.coeff(P({1, 1})) == Rational(2));
}

TEST_CASE("deformed inner product on power sums") {
    auto& eng = engine_qt();
    const Rational q = eng.params().q, t = eng.params().t;
    auto p1 = SymFunc<Rational>::unit(Basis::PowerSum, P({1}));
    auto p2 = SymFunc<Rational>::unit(Basis::PowerSum, P({2}));
    CHECK(eng.inner_product(p1, p1) == (Rational(1) - q) / (Rational(1) - t));
    CHECK(eng.inner_product(p1, p2) == Rational(0));
    CHECK(eng.inner_product(p2, p2) == Rational(2) * (Rational(1) - q * q) / (Rational(1) - t * t));
}

TEST_CASE("macdonald polynomials at small weight") {
    auto& eng = engine_qt();
    const Rational q = eng.params().q, t = eng.params().t;

    CHECK(eng.macdonald_p(P({1})).coeff(P({1})) == Rational(1));
    CHECK(eng.macdonald_p(P({1})).terms.size() == 1);

    CHECK(eng.macdonald_p(P({1, 1})).coeff(P({1, 1})) == Rational(1));
    CHECK(eng.macdonald_p(P({1, 1})).terms.size() == 1);

    // degree-2 Gram-Schmidt oracle: u = (1+q)(1-t)/(1-qt)
    const SymFunc<Rational>& p2 = eng.macdonald_p(P({2}));
    CHECK(p2.coeff(P({2})) == Rational(1));
    CHECK(p2.coeff(P({1, 1})) ==
          (Rational(1) + q) * (Rational(1) - t) / (Rational(1) - q * t));
}

TEST_CASE("triangularity and orthogonality up to weight 6") {
    auto& eng = engine_qt();
    for (int d = 1; d <= 6; ++d) {
        const auto& parts = eng.weight_partitions(d);
        for (const Partition& lam : parts) {
            const auto& p = eng.macdonald_p(lam);
            CHECK(p.coeff(lam) == Rational(1));
            for (const auto& [mu, c] : p.terms) {
                if (mu == lam) continue;
                CHECK(dominance_compare(mu, lam) == Dominance::Less);
            }
        }
        for (const Partition& lam : parts) {
            for (const Partition& mu : parts) {
                if (lam == mu) continue;
                CHECK(eng.inner_product(eng.macdonald_p(lam), eng.macdonald_p(mu)) == Rational(0));
            }
        }
    }
}

TEST_CASE("norm inverse equals b_lambda and <P,Q> = 1") {
    auto& eng = engine_qt();
    for (const Partition& lam : partitions_up_to(6)) {
        CHECK(eng.macdonald_norm(lam) * b_factor(lam, eng.params()) == Rational(1));
    }
    CHECK(eng.inner_product(eng.macdonald_p(P({2})), eng.macdonald_q(P({2}))) == Rational(1));
}

TEST_CASE("macdonald Q") {
    auto& eng = engine_qt();
    const Rational q = eng.params().q, t = eng.params().t;
    CHECK(eng.macdonald_q(Partition()).coeff(Partition()) == Rational(1));
    CHECK(eng.macdonald_q(P({1})).coeff(P({1})) == (Rational(1) - t) / (Rational(1) - q));
}

TEST_CASE("omega involution and duality") {
    auto& eng = engine_qt();
    auto& swp = engine_tq();
    const Rational q = eng.params().q, t = eng.params().t;

    auto p1 = SymFunc<Rational>::unit(Basis::PowerSum, P({1}));
    auto w1 = eng.omega(p1);
    CHECK(w1.coeff(P({1})) == (Rational(1) - q) / (Rational(1) - t));

    auto p2 = SymFunc<Rational>::unit(Basis::PowerSum, P({2}));
    auto w2 = eng.omega(p2);
    CHECK(w2.coeff(P({2})) == -(Rational(1) - q * q) / (Rational(1) - t * t));

    // omega_{q,t}(P_lambda(q,t)) = Q_{lambda'}(t,q), compared in the p basis
    for (const Partition& lam : partitions_up_to(6)) {
        auto lhs = eng.omega(eng.macdonald_p_powersum(lam));
        auto rhs = swp.to_p(swp.macdonald_q(lam.conjugate()));
        CHECK(lhs.terms == rhs.terms);
    }
}

TEST_CASE("parameter inversion invariance of P") {
    MacdonaldEngine<Rational> inv(default_exact_params().inverted());
    auto& eng = engine_qt();
    for (const Partition& lam : partitions_up_to(6)) {
        CHECK(eng.macdonald_p(lam).terms == inv.macdonald_p(lam).terms);
    }
}

TEST_CASE("gram-schmidt is independent of the linear extension") {
    auto& eng = engine_qt();
    std::mt19937_64 rng(7);
    for (int d = 2; d <= 6; ++d) {
        auto order = eng.weight_partitions(d);
        // random dominance-respecting shuffles: repeatedly pick any remaining
        // partition all of whose dominance-smaller elements are already placed
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<Partition> pool = order;
            std::vector<Partition> topo;
            while (!pool.empty()) {
                std::vector<size_t> ready;
                for (size_t i = 0; i < pool.size(); ++i) {
                    bool ok = true;
                    for (size_t j = 0; j < pool.size(); ++j) {
                        if (i == j) continue;
                        if (dominance_compare(pool[j], pool[i]) == Dominance::Less) ok = false;
                    }
                    if (ok) ready.push_back(i);
                }
                std::uniform_int_distribution<size_t> pick(0, ready.size() - 1);
                size_t chosen = ready[pick(rng)];
                topo.push_back(pool[chosen]);
                pool.erase(pool.begin() + static_cast<long>(chosen));
            }
            auto alt = eng.macdonald_with_order(topo);
            for (const Partition& lam : order) {
                CHECK(alt.at(lam).terms == eng.macdonald_p(lam).terms);
            }
        }
    }
}

TEST_CASE("box identity: (x1...xn)^k P_lambda = P_{lambda+(k^n)} in n variables") {
    auto& eng = engine_qt();
    for (const Partition& lam : partitions_up_to(5)) {
        const int n = std::max(1, lam.length());
        if (n > 3) continue;
        for (int k = 1; k <= 2; ++k) {
            SymFunc<Rational> lhs(Basis::Monomial);
            for (const auto& [mu, c] : restrict_vars(eng.macdonald_p(lam), n).terms) {
                lhs.add(part_sum(mu, rectangle(k, n)), c);
            }
            auto rhs = restrict_vars(eng.macdonald_p(part_sum(lam, rectangle(k, n))), n);
            CHECK(lhs.terms == rhs.terms);
        }
    }
}

TEST_CASE("pieri coefficients") {
    auto& eng = engine_qt();
    const Rational q = eng.params().q, t = eng.params().t;

    CHECK(eng.pieri_coefficient(P({2}), P({1}), P({1})) == Rational(1));
    CHECK(eng.pieri_coefficient(P({1, 1}), P({1}), P({1})) ==
          (Rational(1) + t) * (Rational(1) - q) / (Rational(1) - q * t));
    CHECK(eng.pieri_coefficient(P({3}), P({1}), P({1})) == Rational(0));

    // support window mu u nu <= lambda <= mu + nu, and the extremal values
    auto& swp = engine_tq();
    for (const Partition& mu : partitions_up_to(4)) {
        for (const Partition& nu : partitions_up_to(3)) {
            const long w = mu.weight() + nu.weight();
            if (w > 7 || w == 0) continue;
            for (const Partition& lam : partitions_of(static_cast<int>(w))) {
                const Rational f = eng.pieri_coefficient(lam, mu, nu);
                const Partition lo = union_merge(mu, nu);
                const Partition hi = part_sum(mu, nu);
                const bool in_window = dominance_leq(lo, lam) && dominance_leq(lam, hi);
                if (!in_window) CHECK(f == Rational(0));
            }
            // f^{mu+nu}_{mu,nu}(q,t) = 1
            CHECK(eng.pieri_coefficient(part_sum(mu, nu), mu, nu) == Rational(1));
            // f^{(mu u nu)'}_{mu' nu'}(t,q) = 1
            CHECK(swp.pieri_coefficient(union_merge(mu, nu).conjugate(), mu.conjugate(),
                                        nu.conjugate()) == Rational(1));
            // f^{(mu+nu)'}_{mu' nu'}(t,q) = b_mu b_nu / b_{mu+nu} at (q,t)
            const auto ps = eng.params();
            CHECK(swp.pieri_coefficient(part_sum(mu, nu).conjugate(), mu.conjugate(),
                                        nu.conjugate()) ==
                  b_factor(mu, ps) * b_factor(nu, ps) / b_factor(part_sum(mu, nu), ps));
        }
    }
}

TEST_CASE("skew macdonald polynomials") {
    auto& eng = engine_qt();
    auto& swp = engine_tq();

    // P_{lambda/0} = P_lambda
    for (const Partition& lam : partitions_up_to(4)) {
        auto skew = skew_macdonald(eng, swp, lam, Partition(), 6);
        CHECK(skew.terms == restrict_vars(eng.macdonald_p(lam), 6).terms);
    }

    // P_{(1)/(1)} = 1
    auto unit = skew_macdonald(eng, swp, P({1}), P({1}), 2);
    CHECK(unit.terms.size() == 1);
    CHECK(unit.coeff(Partition()) == Rational(1));

    // vanishing in too few variables
    CHECK(skew_macdonald(eng, swp, P({1, 1}), Partition(), 1).zero());

    // column-overflow vanishing: lambda'_j - mu_j > n forces zero in n vars
    CHECK(skew_macdonald(eng, swp, P({1, 1, 1, 1}), P({1}), 2).zero());
    CHECK_FALSE(skew_macdonald(eng, swp, P({1, 1, 1}), P({1}), 2).zero());
}

TEST_CASE("merging variable sets: P_lambda(x,y) = sum P_{lambda/mu}(x) Q_mu(y)") {
    auto& eng = engine_qt();
    auto& swp = engine_tq();
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> num(-6, 6);

    auto random_point = [&](int n) {
        std::vector<Rational> pt;
        for (int i = 0; i < n; ++i) {
            int a = num(rng);
            if (a == 0) a = 1;
            pt.push_back(Rational(a, 1 + (i % 3)));
        }
        return pt;
    };

    struct Case {
        Partition lam;
        int n1, n2;
    };
    const std::vector<Case> cases = {{P({1}), 1, 1}, {P({2}), 2, 2}, {P({2, 1}), 2, 1},
                                     {P({2, 2}), 2, 2}, {P({3, 1}), 2, 2}};
    for (const auto& c : cases) {
        for (int rep = 0; rep < 5; ++rep) {
            auto x = random_point(c.n1);
            auto y = random_point(c.n2);
            std::vector<Rational> xy = x;
            xy.insert(xy.end(), y.begin(), y.end());
            Rational lhs = evaluate_monomial(
                restrict_vars(eng.macdonald_p(c.lam), c.n1 + c.n2), xy);
            Rational rhs(0);
            for (const Partition& mu : partitions_up_to(static_cast<int>(c.lam.weight()))) {
                if (!contains(mu, c.lam)) continue;
                auto skew = skew_macdonald(eng, swp, c.lam, mu, c.n1);
                if (skew.zero()) continue;
                auto qmu = restrict_vars(eng.macdonald_q(mu), c.n2);
                if (qmu.zero()) continue;
                rhs += evaluate_monomial(skew, x) * evaluate_monomial(qmu, y);
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("transition guards") {
    auto& eng = engine_qt();
    // singular transitions are impossible at generic parameters, but the
    // omega denominators can degenerate at t = 1
    ParamSet<Rational> bad(Rational(7, 10), Rational(1));
    MacdonaldEngine<Rational> be(bad);
    auto p2 = SymFunc<Rational>::unit(Basis::PowerSum, P({2}));
    CHECK_THROWS_AS(be.omega(p2), DegenerateParameterError);
    CHECK_THROWS_AS(be.inner_product(p2, p2), DegenerateParameterError);
    CHECK_NOTHROW(eng.inner_product(p2, p2));
}
