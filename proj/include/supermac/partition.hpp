#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "supermac/scalars.hpp"

namespace supermac {

// Weakly decreasing list of positive parts; trailing zeros are never stored,
// so partitions differing by a string of zeros compare equal.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // Comma separated parts, e.g. "3,2,1"; the empty string is the empty
    // partition.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long weight() const;
    bool empty() const { return parts_.empty(); }

    // Zero-padded part access, 0-based: part(i) = lambda_{i+1}.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
    }

    Partition conjugate() const;
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& x, const Partition& y) {
        return x.parts_ <=> y.parts_;
    }

  private:
    std::vector<int> parts_;
};

enum class Dominance { Less, Equal, Greater, Incomparable };

// Dominance comparison at fixed weight; throws InvalidInputError when the
// weights differ (the order is only defined weight by weight).
Dominance dominance_compare(const Partition& lhs, const Partition& rhs);

inline bool dominance_leq(const Partition& lhs, const Partition& rhs) {
    Dominance d = dominance_compare(lhs, rhs);
    return d == Dominance::Less || d == Dominance::Equal;
}

// Merge-and-sort union of part multisets.
Partition union_merge(const Partition& lhs, const Partition& rhs);

// Elementwise sum (lambda_i + mu_i).
Partition part_sum(const Partition& lhs, const Partition& rhs);

// inner_i <= outer_i for all i.
bool contains(const Partition& inner, const Partition& outer);

// (k, k, ..., k) with n parts.
Partition rectangle(int k, int n);

// z_lambda = prod_i i^{m_i} m_i! over the part multiplicities m_i.
long long z_lambda(const Partition& lambda);

// Fat hook membership: lambda_{n+1} <= m.
bool in_fat_hook(const Partition& lambda, int n, int m);

// Splits lambda containing the (m^n) rectangle into its east part
// (lambda_1 - m, ..., lambda_n - m) and south part (lambda_{n+1}, ...)'.
// Throws InvalidInputError when (m^n) is not contained in lambda.
std::pair<Partition, Partition> east_south(const Partition& lambda, int n, int m);

std::vector<Partition> partitions_of(int weight);
std::vector<Partition> partitions_up_to(int max_weight);

// b_lambda(q,t): cell product over (j,k) in the diagram of
// (1 - q^{arm} t^{leg+1}) / (1 - q^{arm+1} t^{leg}) with arm = lambda_j - k
// and leg = lambda'_k - j. Satisfies b_lambda(q,t) b_{lambda'}(t,q) = 1.
template <class R>
R b_factor(const Partition& lambda, const R& q, const R& t) {
    const Partition conj = lambda.conjugate();
    R result(1);
    for (int j = 1; j <= lambda.length(); ++j) {
        for (int k = 1; k <= lambda.part(j - 1); ++k) {
            const long arm = lambda.part(j - 1) - k;
            const long leg = conj.part(k - 1) - j;
            const R num = R(1) - pow_int(q, arm) * pow_int(t, leg + 1);
            const R den = R(1) - pow_int(q, arm + 1) * pow_int(t, leg);
            if (is_zero(den))
                throw DegenerateParameterError("b_lambda denominator vanishes at these (q,t)");
            result *= num / den;
        }
    }
    return result;
}

template <class R>
R b_factor(const Partition& lambda, const ParamSet<R>& ps) {
    return b_factor(lambda, ps.q, ps.t);
}

}  // namespace supermac
