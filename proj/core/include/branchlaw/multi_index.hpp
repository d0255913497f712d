// Multi-indices and partitions: the index combinatorics for the even
// symmetric polynomial algebra.
#pragma once

#include "branchlaw/rational.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace branchlaw {

// A list of nonnegative integer exponents of fixed length m.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
        for (int e : entries_)
            if (e < 0) throw std::invalid_argument("multi-index entries must be nonnegative");
    }
    MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}

    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }

    // |beta| = sum of entries.
    int weight() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

    bool operator==(const MultiIndex&) const = default;

private:
    std::vector<int> entries_;
};

// Weakly decreasing multi-index, zero-padded to length m: the canonical
// representative of a symmetric-group orbit.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    static Partition orbit_of(const MultiIndex& beta) {
        std::vector<int> p = beta.entries();
        std::sort(p.begin(), p.end(), std::greater<int>());
        return Partition(std::move(p));
    }

    int size() const { return static_cast<int>(parts_.size()); }
    int operator[](int i) const { return parts_[static_cast<size_t>(i)]; }
    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // All distinct rearrangements of the parts (each exactly once).
    std::vector<std::vector<int>> distinct_permutations() const {
        std::vector<int> cur = parts_;
        std::sort(cur.begin(), cur.end());
        std::vector<std::vector<int>> out;
        do {
            out.push_back(cur);
        } while (std::next_permutation(cur.begin(), cur.end()));
        return out;
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Orders partitions lexicographically descending, the fixed serialization
// order: for k=2, m=2 this yields (2,0) before (1,1).
struct DescLexLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                            a.parts().begin(), a.parts().end());
    }
};

// k!/prod(beta_i!), defined only when |beta| = k.
inline BigInt multinomial(int k, const MultiIndex& beta) {
    if (beta.weight() != k)
        throw std::invalid_argument("multinomial requires |beta| = k");
    BigInt r = factorial(k);
    for (int e : beta.entries()) r /= factorial(e);
    return r;
}

inline BigInt multinomial(int k, const Partition& lambda) {
    return multinomial(k, MultiIndex(lambda.parts()));
}

// prod_i (2 beta_i)!  (the factorial of the doubled multi-index).
inline BigInt even_factorial(const MultiIndex& beta) {
    BigInt r = 1;
    for (int e : beta.entries()) r *= factorial(2 * e);
    return r;
}

inline BigInt even_factorial(const Partition& lambda) {
    return even_factorial(MultiIndex(lambda.parts()));
}

// All partitions of k into at most m parts, zero-padded to length m, in
// descending lexicographic order.
inline std::vector<Partition> partitions_of(int k, int m) {
    if (k < 0) throw std::invalid_argument("partitions_of: k must be nonnegative");
    if (m < 1) throw std::invalid_argument("partitions_of: m must be positive");
    std::vector<Partition> out;
    std::vector<int> cur(static_cast<size_t>(m), 0);
    auto rec = [&](auto&& self, int pos, int remaining, int cap) -> void {
        if (pos == m) {
            if (remaining == 0) out.emplace_back(cur);
            return;
        }
        for (int part = std::min(cap, remaining); part >= 0; --part) {
            if (part == 0 && remaining > 0) break;  // later parts cannot exceed 0
            cur[static_cast<size_t>(pos)] = part;
            self(self, pos + 1, remaining - part, part);
        }
        cur[static_cast<size_t>(pos)] = 0;
    };
    rec(rec, 0, k, k);
    return out;
}

}  // namespace branchlaw
