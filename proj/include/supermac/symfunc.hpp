#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "supermac/partition.hpp"
#include "supermac/scalars.hpp"

namespace supermac {

enum class Basis { Monomial, PowerSum, MacdonaldP };

// Sparse expansion of a symmetric function in a named basis. Mixed weights
// are allowed (formal sums); all operations treat weight components
// independently.
template <class R>
struct SymFunc {
    Basis basis = Basis::Monomial;
    std::map<Partition, R> terms;

    SymFunc() = default;
    explicit SymFunc(Basis b) : basis(b) {}

    static SymFunc unit(Basis b, const Partition& lambda, const R& coeff = R(1)) {
        SymFunc f(b);
        f.add(lambda, coeff);
        return f;
    }

    bool zero() const { return terms.empty(); }

    void add(const Partition& lambda, const R& coeff) {
        auto it = terms.find(lambda);
        if (it == terms.end()) {
            if (!is_zero(coeff)) terms.emplace(lambda, coeff);
        } else {
            it->second += coeff;
            if (is_zero(it->second)) terms.erase(it);
        }
    }

    R coeff(const Partition& lambda) const {
        auto it = terms.find(lambda);
        return it == terms.end() ? R(0) : it->second;
    }

    SymFunc& operator+=(const SymFunc& other) {
        require_same_basis(other);
        for (const auto& [lam, c] : other.terms) add(lam, c);
        return *this;
    }

    SymFunc& operator-=(const SymFunc& other) {
        require_same_basis(other);
        for (const auto& [lam, c] : other.terms) add(lam, -c);
        return *this;
    }

    SymFunc& operator*=(const R& s) {
        if (is_zero(s)) {
            terms.clear();
            return *this;
        }
        for (auto& [lam, c] : terms) c *= s;
        return *this;
    }

    friend SymFunc operator*(const R& s, SymFunc f) {
        f *= s;
        return f;
    }

    int max_weight() const {
        int w = 0;
        for (const auto& [lam, c] : terms) w = std::max<int>(w, static_cast<int>(lam.weight()));
        return w;
    }

  private:
    void require_same_basis(const SymFunc& other) const {
        if (basis != other.basis) throw Error("basis mismatch in symmetric-function arithmetic");
    }
};

// Distinct permutations of lambda padded with zeros to nvars; empty when
// the partition is longer than nvars (the monomial vanishes there).
inline std::vector<std::vector<int>> monomial_exponents(const Partition& lambda, int nvars) {
    std::vector<std::vector<int>> out;
    if (lambda.length() > nvars) return out;
    std::vector<int> expo(static_cast<size_t>(nvars), 0);
    for (int i = 0; i < lambda.length(); ++i) expo[static_cast<size_t>(i)] = lambda.part(i);
    std::sort(expo.begin(), expo.end());
    do {
        out.push_back(expo);
    } while (std::next_permutation(expo.begin(), expo.end()));
    return out;
}

// Evaluate an m-basis expansion at a point with nvars coordinates; indices
// longer than nvars contribute nothing.
template <class R, class F>
F evaluate_monomial(const SymFunc<R>& f, const std::vector<F>& x) {
    if (f.basis != Basis::Monomial) throw Error("evaluate_monomial expects the m basis");
    const int n = static_cast<int>(x.size());
    F total(0);
    for (const auto& [lam, c] : f.terms) {
        if (lam.length() > n) continue;
        F msum(0);
        for (const auto& expo : monomial_exponents(lam, n)) {
            F mono(1);
            for (int i = 0; i < n; ++i) {
                if (expo[static_cast<size_t>(i)] != 0)
                    mono *= pow_int(x[static_cast<size_t>(i)], expo[static_cast<size_t>(i)]);
            }
            msum += mono;
        }
        total += field_cast<F>(c) * msum;
    }
    return total;
}

// Drop m-basis terms that vanish in nvars variables.
template <class R>
SymFunc<R> restrict_vars(const SymFunc<R>& f, int nvars) {
    if (f.basis != Basis::Monomial) throw Error("restrict_vars expects the m basis");
    SymFunc<R> out(Basis::Monomial);
    for (const auto& [lam, c] : f.terms) {
        if (lam.length() <= nvars) out.add(lam, c);
    }
    return out;
}

// Symmetric-function engine at fixed parameters (q,t) = (a^2, b^2). Caches
// per-weight transition matrices between the p and m bases and the Macdonald
// basis obtained by Gram-Schmidt over the dominance order.
template <class R>
class MacdonaldEngine {
  public:
    explicit MacdonaldEngine(ParamSet<R> ps) : ps_(std::move(ps)) {}

    const ParamSet<R>& params() const { return ps_; }

    // Partitions of weight d in ascending lexicographic order, which is a
    // linear extension of dominance (minimal element first).
    const std::vector<Partition>& weight_partitions(int d) {
        auto& slot = weights_[d];
        if (!slot.listed) {
            slot.parts = partitions_of(d);
            std::sort(slot.parts.begin(), slot.parts.end());
            for (size_t i = 0; i < slot.parts.size(); ++i) slot.index[slot.parts[i]] = i;
            slot.listed = true;
        }
        return slot.parts;
    }

    SymFunc<R> to_p(const SymFunc<R>& f) {
        switch (f.basis) {
            case Basis::PowerSum:
                return f;
            case Basis::MacdonaldP: {
                SymFunc<R> out(Basis::PowerSum);
                for (const auto& [lam, c] : f.terms) {
                    for (const auto& [mu, d] : macdonald_p_powersum(lam).terms) out.add(mu, c * d);
                }
                return out;
            }
            case Basis::Monomial: {
                SymFunc<R> out(Basis::PowerSum);
                for (const auto& [lam, c] : f.terms) {
                    const int d = static_cast<int>(lam.weight());
                    const auto& data = weight_data(d);
                    const size_t row = weights_[d].index.at(lam);
                    const auto& parts = weight_partitions(d);
                    for (size_t j = 0; j < parts.size(); ++j) {
                        if (!is_zero(data.m2p[row][j])) out.add(parts[j], c * data.m2p[row][j]);
                    }
                }
                return out;
            }
        }
        throw Error("unreachable basis");
    }

    SymFunc<R> to_m(const SymFunc<R>& f) {
        switch (f.basis) {
            case Basis::Monomial:
                return f;
            case Basis::MacdonaldP: {
                SymFunc<R> out(Basis::Monomial);
                for (const auto& [lam, c] : f.terms) {
                    for (const auto& [mu, d] : macdonald_p(lam).terms) out.add(mu, c * d);
                }
                return out;
            }
            case Basis::PowerSum: {
                SymFunc<R> out(Basis::Monomial);
                for (const auto& [lam, c] : f.terms) {
                    const int d = static_cast<int>(lam.weight());
                    const auto& data = weight_data(d);
                    const size_t row = weights_[d].index.at(lam);
                    const auto& parts = weight_partitions(d);
                    for (size_t j = 0; j < parts.size(); ++j) {
                        if (!is_zero(data.p2m[row][j])) out.add(parts[j], c * data.p2m[row][j]);
                    }
                }
                return out;
            }
        }
        throw Error("unreachable basis");
    }

    // <p_lambda, p_mu> = delta * z_lambda * prod (1-q^{lambda_i})/(1-t^{lambda_i});
    // bilinear (coefficients here are real).
    R inner_product(const SymFunc<R>& f, const SymFunc<R>& g) {
        SymFunc<R> fp = to_p(f), gp = to_p(g);
        R total(0);
        for (const auto& [lam, c] : fp.terms) {
            auto it = gp.terms.find(lam);
            if (it == gp.terms.end()) continue;
            total += c * it->second * power_sum_norm(lam);
        }
        return total;
    }

    // Monic Macdonald polynomial in the m basis:
    // P_lambda = m_lambda + lower dominance terms, orthogonal to all P_mu
    // with mu strictly dominated by lambda.
    const SymFunc<R>& macdonald_p(const Partition& lambda) {
        const int d = static_cast<int>(lambda.weight());
        ensure_macdonald(d);
        return weights_[d].macdonald.at(lambda);
    }

    const SymFunc<R>& macdonald_p_powersum(const Partition& lambda) {
        const int d = static_cast<int>(lambda.weight());
        ensure_macdonald(d);
        auto& slot = weights_[d];
        auto it = slot.macdonald_p_basis.find(lambda);
        if (it == slot.macdonald_p_basis.end()) {
            SymFunc<R> f = slot.macdonald.at(lambda);
            SymFunc<R> fp(Basis::PowerSum);
            const auto& data = weight_data(d);
            const auto& parts = weight_partitions(d);
            for (const auto& [mu, c] : f.terms) {
                const size_t row = slot.index.at(mu);
                for (size_t j = 0; j < parts.size(); ++j) {
                    if (!is_zero(data.m2p[row][j])) fp.add(parts[j], c * data.m2p[row][j]);
                }
            }
            it = slot.macdonald_p_basis.emplace(lambda, std::move(fp)).first;
        }
        return it->second;
    }

    // <P_lambda, P_lambda>; equals 1/b_lambda.
    const R& macdonald_norm(const Partition& lambda) {
        const int d = static_cast<int>(lambda.weight());
        ensure_macdonald(d);
        return weights_[d].macdonald_norm.at(lambda);
    }

    // Q_lambda = b_lambda P_lambda in the m basis.
    SymFunc<R> macdonald_q(const Partition& lambda) {
        SymFunc<R> f = macdonald_p(lambda);
        f *= b_factor(lambda, ps_);
        return f;
    }

    // omega_{q,t}: p_r -> (-1)^{r-1} (1-q^r)/(1-t^r) p_r, extended
    // multiplicatively to p_lambda.
    SymFunc<R> omega(const SymFunc<R>& f) {
        SymFunc<R> fp = to_p(f);
        SymFunc<R> out(Basis::PowerSum);
        for (const auto& [lam, c] : fp.terms) {
            R factor(1);
            for (int i = 0; i < lam.length(); ++i) {
                const long r = lam.part(i);
                const R den = R(1) - ps_.t_pow(r);
                if (is_zero(den)) throw DegenerateParameterError("omega denominator 1-t^r vanishes");
                R piece = (R(1) - ps_.q_pow(r)) / den;
                if (r % 2 == 0) piece = -piece;
                factor *= piece;
            }
            out.add(lam, c * factor);
        }
        return out;
    }

    // Product computed through the p basis, where p_lambda p_mu = p_{lambda u mu}.
    SymFunc<R> multiply(const SymFunc<R>& f, const SymFunc<R>& g) {
        SymFunc<R> fp = to_p(f), gp = to_p(g);
        SymFunc<R> out(Basis::PowerSum);
        for (const auto& [lam, c] : fp.terms) {
            for (const auto& [mu, d] : gp.terms) out.add(union_merge(lam, mu), c * d);
        }
        return out;
    }

    // Expansion of a homogeneous-by-weight function in the Macdonald basis by
    // leading-term elimination (P_kappa = m_kappa + dominance-lower terms).
    std::map<Partition, R> expand_in_macdonald(const SymFunc<R>& f) {
        SymFunc<R> rem = to_m(f);
        std::map<Partition, R> out;
        while (!rem.zero()) {
            // any dominance-maximal index in the support works
            auto pick = rem.terms.begin();
            for (auto it = std::next(rem.terms.begin()); it != rem.terms.end(); ++it) {
                if (it->first.weight() != pick->first.weight()) continue;
                Dominance dom = dominance_compare(pick->first, it->first);
                if (dom == Dominance::Less) pick = it;
            }
            const Partition kappa = pick->first;
            const R c = pick->second;
            out[kappa] = c;
            SymFunc<R> pk = macdonald_p(kappa);
            pk *= c;
            rem -= pk;
        }
        return out;
    }

    // f^lambda_{mu nu} = <Q_lambda, P_mu P_nu>: the coefficient of P_lambda in
    // P_mu P_nu. Zero unless |mu|+|nu| = |lambda|.
    R pieri_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
        if (mu.weight() + nu.weight() != lambda.weight()) return R(0);
        auto key = std::make_pair(mu, nu);
        auto it = pieri_cache_.find(key);
        if (it == pieri_cache_.end()) {
            SymFunc<R> prod = multiply(macdonald_p(mu), macdonald_p(nu));
            it = pieri_cache_.emplace(key, expand_in_macdonald(prod)).first;
        }
        auto jt = it->second.find(lambda);
        return jt == it->second.end() ? R(0) : jt->second;
    }

    // Gram-Schmidt repeated over a caller-supplied linear extension of the
    // weight-d dominance order; used to test independence from the extension.
    std::map<Partition, SymFunc<R>> macdonald_with_order(const std::vector<Partition>& order) {
        return gram_schmidt(order);
    }

  private:
    struct WeightData {
        std::vector<std::vector<R>> p2m;  // row i = p_{parts[i]} in m coordinates
        std::vector<std::vector<R>> m2p;  // inverse
        std::vector<R> psum_norm;         // <p_i, p_i>
        bool ready = false;
    };

    struct WeightSlot {
        bool listed = false;
        std::vector<Partition> parts;
        std::map<Partition, size_t> index;
        WeightData data;
        std::map<Partition, SymFunc<R>> macdonald;
        std::map<Partition, SymFunc<R>> macdonald_p_basis;
        std::map<Partition, R> macdonald_norm;
        bool macdonald_ready = false;
    };

    ParamSet<R> ps_;
    std::map<int, WeightSlot> weights_;
    std::map<Partition, std::map<Partition, R>> power_expansion_;
    std::map<std::pair<Partition, Partition>, std::map<Partition, R>> pieri_cache_;

    R power_sum_norm(const Partition& lam) {
        R w = R(static_cast<long>(z_lambda(lam)));
        for (int i = 0; i < lam.length(); ++i) {
            const long r = lam.part(i);
            const R den = R(1) - ps_.t_pow(r);
            if (is_zero(den))
                throw DegenerateParameterError("power-sum norm denominator 1-t^r vanishes");
            w *= (R(1) - ps_.q_pow(r)) / den;
        }
        return w;
    }

    // p_lambda in the m basis (infinitely many variables), built one Newton
    // sum at a time: multiplying m_mu by p_r adds r to one existing part
    // value or opens a new part, weighted by the multiplicity of the grown
    // part in the result.
    const std::map<Partition, R>& power_expansion(const Partition& lam) {
        auto it = power_expansion_.find(lam);
        if (it != power_expansion_.end()) return it->second;
        std::map<Partition, R> result;
        if (lam.empty()) {
            result[Partition()] = R(1);
        } else {
            std::vector<int> rest(lam.parts().begin() + 1, lam.parts().end());
            const auto& prev = power_expansion(Partition(std::move(rest)));
            const int r = lam.part(0);
            for (const auto& [mu, c] : prev) {
                std::vector<int> grow_values;
                grow_values.push_back(0);
                for (int i = 0; i < mu.length(); ++i) {
                    if (grow_values.back() != mu.part(i)) grow_values.push_back(mu.part(i));
                }
                for (int u : grow_values) {
                    std::vector<int> parts = mu.parts();
                    if (u == 0) {
                        parts.push_back(r);
                    } else {
                        auto pos = std::find(parts.begin(), parts.end(), u);
                        *pos = u + r;
                    }
                    Partition kappa(std::move(parts));
                    int mult = 0;
                    for (int i = 0; i < kappa.length(); ++i) {
                        if (kappa.part(i) == u + r) ++mult;
                    }
                    result[kappa] += R(mult) * c;
                }
            }
            for (auto it2 = result.begin(); it2 != result.end();) {
                if (is_zero(it2->second)) it2 = result.erase(it2);
                else ++it2;
            }
        }
        return power_expansion_.emplace(lam, std::move(result)).first->second;
    }

    const WeightData& weight_data(int d) {
        weight_partitions(d);
        WeightSlot& slot = weights_[d];
        if (slot.data.ready) return slot.data;
        const size_t n = slot.parts.size();
        WeightData data;
        data.p2m.assign(n, std::vector<R>(n, R(0)));
        data.psum_norm.resize(n);
        for (size_t i = 0; i < n; ++i) {
            const auto& expansion = power_expansion(slot.parts[i]);
            for (const auto& [mu, c] : expansion) data.p2m[i][slot.index.at(mu)] = c;
            data.psum_norm[i] = power_sum_norm(slot.parts[i]);
        }
        data.m2p = invert_matrix(data.p2m);
        data.ready = true;
        slot.data = std::move(data);
        return slot.data;
    }

    static std::vector<std::vector<R>> invert_matrix(const std::vector<std::vector<R>>& a) {
        const size_t n = a.size();
        std::vector<std::vector<R>> m = a;
        std::vector<std::vector<R>> inv(n, std::vector<R>(n, R(0)));
        for (size_t i = 0; i < n; ++i) inv[i][i] = R(1);
        for (size_t col = 0; col < n; ++col) {
            size_t pivot = col;
            while (pivot < n && is_zero(m[pivot][col])) ++pivot;
            if (pivot == n) throw Error("singular basis-transition matrix");
            std::swap(m[pivot], m[col]);
            std::swap(inv[pivot], inv[col]);
            const R lead = m[col][col];
            for (size_t j = 0; j < n; ++j) {
                m[col][j] /= lead;
                inv[col][j] /= lead;
            }
            for (size_t row = 0; row < n; ++row) {
                if (row == col || is_zero(m[row][col])) continue;
                const R factor = m[row][col];
                for (size_t j = 0; j < n; ++j) {
                    m[row][j] -= factor * m[col][j];
                    inv[row][j] -= factor * inv[col][j];
                }
            }
        }
        return inv;
    }

    void ensure_macdonald(int d) {
        weight_partitions(d);
        WeightSlot& slot = weights_[d];
        if (slot.macdonald_ready) return;
        auto [computed, norms] = gram_schmidt_with_norms(slot.parts);
        slot.macdonald = std::move(computed);
        slot.macdonald_norm = std::move(norms);
        slot.macdonald_ready = true;
    }

    // Inner product of two m-basis functions homogeneous of weight d.
    R inner_product_m_basis(int d, const SymFunc<R>& f, const SymFunc<R>& g) {
        const auto& data = weight_data(d);
        WeightSlot& slot = weights_[d];
        const size_t n = slot.parts.size();
        std::vector<R> fp(n, R(0)), gp(n, R(0));
        for (const auto& [mu, c] : f.terms) {
            const size_t row = slot.index.at(mu);
            for (size_t j = 0; j < n; ++j) {
                if (!is_zero(data.m2p[row][j])) fp[j] += c * data.m2p[row][j];
            }
        }
        for (const auto& [mu, c] : g.terms) {
            const size_t row = slot.index.at(mu);
            for (size_t j = 0; j < n; ++j) {
                if (!is_zero(data.m2p[row][j])) gp[j] += c * data.m2p[row][j];
            }
        }
        R total(0);
        for (size_t j = 0; j < n; ++j) {
            if (!is_zero(fp[j]) && !is_zero(gp[j])) total += fp[j] * gp[j] * data.psum_norm[j];
        }
        return total;
    }

    std::map<Partition, SymFunc<R>> gram_schmidt(const std::vector<Partition>& order) {
        return gram_schmidt_with_norms(order).first;
    }

    // Orthogonalization carried out in p coordinates (the inner product is
    // diagonal there); results are mapped back to the m basis at the end.
    std::pair<std::map<Partition, SymFunc<R>>, std::map<Partition, R>> gram_schmidt_with_norms(
        const std::vector<Partition>& order) {
        std::map<Partition, std::vector<R>> done_coords;
        std::map<Partition, R> norms;
        for (const Partition& lam : order) {
            const int d = static_cast<int>(lam.weight());
            const auto& data = weight_data(d);
            WeightSlot& slot = weights_[d];
            const size_t n = slot.parts.size();
            std::vector<R> f = data.m2p[slot.index.at(lam)];
            for (const auto& [mu, pmu] : done_coords) {
                if (mu.weight() != lam.weight()) continue;
                if (dominance_compare(mu, lam) != Dominance::Less) continue;
                R overlap(0);
                for (size_t j = 0; j < n; ++j) {
                    if (!is_zero(f[j]) && !is_zero(pmu[j])) overlap += f[j] * pmu[j] * data.psum_norm[j];
                }
                if (is_zero(overlap)) continue;
                const R& nn = norms.at(mu);
                if (is_zero(nn))
                    throw DegenerateParameterError("non-generic parameters: zero Macdonald norm");
                const R factor = overlap / nn;
                for (size_t j = 0; j < n; ++j) f[j] -= factor * pmu[j];
            }
            R norm(0);
            for (size_t j = 0; j < n; ++j) {
                if (!is_zero(f[j])) norm += f[j] * f[j] * data.psum_norm[j];
            }
            norms.emplace(lam, std::move(norm));
            done_coords.emplace(lam, std::move(f));
        }
        std::map<Partition, SymFunc<R>> out;
        for (auto& [lam, coords] : done_coords) {
            const int d = static_cast<int>(lam.weight());
            const auto& data = weight_data(d);
            WeightSlot& slot = weights_[d];
            const size_t n = slot.parts.size();
            SymFunc<R> f(Basis::Monomial);
            for (size_t j = 0; j < n; ++j) {
                if (is_zero(coords[j])) continue;
                for (size_t k = 0; k < n; ++k) {
                    if (!is_zero(data.p2m[j][k])) f.add(slot.parts[k], coords[j] * data.p2m[j][k]);
                }
            }
            out.emplace(lam, std::move(f));
        }
        return {std::move(out), std::move(norms)};
    }
};

// Skew Macdonald polynomial P_{lambda/mu} in nvars variables, returned in the
// m basis at parameters (q,t):
//   P_{lambda/mu} = sum_nu f^{lambda'}_{mu' nu'}(t,q) P_nu(x;q,t).
// engine_qt carries (q,t), engine_tq the swapped parameters.
template <class R>
SymFunc<R> skew_macdonald(MacdonaldEngine<R>& engine_qt, MacdonaldEngine<R>& engine_tq,
                          const Partition& lambda, const Partition& mu, int nvars) {
    SymFunc<R> out(Basis::Monomial);
    const long deg = lambda.weight() - mu.weight();
    if (deg < 0 || !contains(mu, lambda)) return out;
    const Partition lam_c = lambda.conjugate();
    const Partition mu_c = mu.conjugate();
    for (const Partition& nu : partitions_of(static_cast<int>(deg))) {
        if (nu.length() > nvars) continue;
        if (!contains(nu, lambda)) continue;
        R f = engine_tq.pieri_coefficient(lam_c, mu_c, nu.conjugate());
        if (is_zero(f)) continue;
        SymFunc<R> p = restrict_vars(engine_qt.macdonald_p(nu), nvars);
        p *= f;
        out += p;
    }
    return out;
}

}  // namespace supermac
