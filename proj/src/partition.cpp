#include "supermac/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace supermac {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 0) throw InvalidInputError("partition parts must be nonnegative");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw InvalidInputError("cannot parse partition part '" + item + "'");
        }
        if (pos != item.size())
            throw InvalidInputError("cannot parse partition part '" + item + "'");
        parts.push_back(value);
    }
    return Partition(std::move(parts));
}

long Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (!parts_.empty()) {
        conj.resize(static_cast<size_t>(parts_.front()));
        for (int k = 1; k <= parts_.front(); ++k) {
            int count = 0;
            for (int p : parts_) {
                if (p >= k) ++count;
            }
            conj[static_cast<size_t>(k - 1)] = count;
        }
    }
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Dominance dominance_compare(const Partition& lhs, const Partition& rhs) {
    if (lhs.weight() != rhs.weight())
        throw InvalidInputError("dominance order is defined only at equal weight");
    if (lhs == rhs) return Dominance::Equal;
    const int len = std::max(lhs.length(), rhs.length());
    bool leq = true, geq = true;
    long sl = 0, sr = 0;
    for (int i = 0; i < len; ++i) {
        sl += lhs.part(i);
        sr += rhs.part(i);
        if (sl > sr) leq = false;
        if (sl < sr) geq = false;
    }
    if (leq) return Dominance::Less;
    if (geq) return Dominance::Greater;
    return Dominance::Incomparable;
}

Partition union_merge(const Partition& lhs, const Partition& rhs) {
    std::vector<int> parts = lhs.parts();
    parts.insert(parts.end(), rhs.parts().begin(), rhs.parts().end());
    return Partition(std::move(parts));
}

Partition part_sum(const Partition& lhs, const Partition& rhs) {
    const int len = std::max(lhs.length(), rhs.length());
    std::vector<int> parts(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) parts[static_cast<size_t>(i)] = lhs.part(i) + rhs.part(i);
    return Partition(std::move(parts));
}

bool contains(const Partition& inner, const Partition& outer) {
    for (int i = 0; i < inner.length(); ++i) {
        if (inner.part(i) > outer.part(i)) return false;
    }
    return true;
}

Partition rectangle(int k, int n) {
    if (k < 0 || n < 0) throw InvalidInputError("rectangle shape must be nonnegative");
    if (k == 0) return Partition();
    return Partition(std::vector<int>(static_cast<size_t>(n), k));
}

long long z_lambda(const Partition& lambda) {
    long long result = 1;
    int i = 0;
    while (i < lambda.length()) {
        int j = i;
        while (j < lambda.length() && lambda.part(j) == lambda.part(i)) ++j;
        const long long mult = j - i;
        for (long long f = 1; f <= mult; ++f) result *= lambda.part(i) * f;
        i = j;
    }
    return result;
}

bool in_fat_hook(const Partition& lambda, int n, int m) {
    if (n < 1 || m < 0) throw InvalidInputError("fat hook needs n >= 1, m >= 0");
    return lambda.part(n) <= m;
}

std::pair<Partition, Partition> east_south(const Partition& lambda, int n, int m) {
    if (!contains(rectangle(m, n), lambda) || !in_fat_hook(lambda, n, m))
        throw InvalidInputError("east/south split needs lambda_n >= m >= lambda_{n+1}");
    std::vector<int> east;
    for (int i = 0; i < n; ++i) {
        if (lambda.part(i) > m) east.push_back(lambda.part(i) - m);
    }
    std::vector<int> tail;
    for (int i = n; i < lambda.length(); ++i) tail.push_back(lambda.part(i));
    return {Partition(std::move(east)), Partition(std::move(tail)).conjugate()};
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& stack,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(stack));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        stack.push_back(p);
        emit_partitions(remaining - p, p, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int weight) {
    if (weight < 0) throw InvalidInputError("partition weight must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> stack;
    emit_partitions(weight, weight, stack, out);
    return out;
}

std::vector<Partition> partitions_up_to(int max_weight) {
    std::vector<Partition> out;
    for (int w = 0; w <= max_weight; ++w) {
        auto pw = partitions_of(w);
        out.insert(out.end(), pw.begin(), pw.end());
    }
    return out;
}

}  // namespace supermac
