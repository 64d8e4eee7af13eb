#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitharm/rational.hpp"

namespace orbitharm {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_.at(static_cast<size_t>(i)); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }

    /// Conjugate (transposed diagram) partition.
    Partition conjugate() const {
        if (parts_.empty()) return Partition();
        std::vector<int> c(static_cast<size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++c[static_cast<size_t>(j)];
        return Partition(std::move(c));
    }

    /// Part i (0-based) with zero padding past the end.
    int part_or_zero(int i) const {
        return i < num_parts() ? parts_[static_cast<size_t>(i)] : 0;
    }

    /// "[2,1]"; the empty partition prints "[]".
    std::string to_string() const {
        std::string s = "[";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

    static Partition from_string(const std::string& s) {
        if (s.size() < 2 || s.front() != '[' || s.back() != ']')
            throw std::invalid_argument("Partition: expected [a,b,...]");
        std::vector<int> parts;
        std::string body = s.substr(1, s.size() - 2);
        size_t pos = 0;
        while (pos < body.size()) {
            size_t comma = body.find(',', pos);
            std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            parts.push_back(std::stoi(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return Partition(std::move(parts));
    }

    // Ascending lexicographic: [1,1,1] < [2,1] < [3]. Dominance-comparable
    // partitions agree with this order, which the triangular solves rely on.
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return a.parts_ != b.parts_; }

private:
    std::vector<int> parts_;
};

/// All partitions of n in descending lexicographic order: (n) first, (1^n) last.
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
        if (remaining == 0) {
            out.emplace_back(Partition(cur));
            return;
        }
        for (int p = std::min(maxpart, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// Dominance order: lam <= mu iff every partial sum of lam is at most the
/// matching partial sum of mu (padding with zeros). Both must partition the
/// same n.
inline bool dominance_leq(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) throw std::invalid_argument("dominance_leq: different partition sizes");
    int k = std::max(lam.num_parts(), mu.num_parts());
    long sl = 0, sm = 0;
    for (int i = 0; i < k; ++i) {
        sl += lam.part_or_zero(i);
        sm += mu.part_or_zero(i);
        if (sl > sm) return false;
    }
    return true;
}

/// Centralizer order z_mu = prod_i i^{m_i} m_i! where m_i counts parts equal to i.
inline Rational z_of(const Partition& mu) {
    Rational z(1);
    int i = 0;
    while (i < mu.num_parts()) {
        int j = i;
        while (j < mu.num_parts() && mu.part(j) == mu.part(i)) ++j;
        int mult = j - i;
        z *= Rational(mu.part(i)).pow(static_cast<unsigned long>(mult));
        z *= Rational::factorial(static_cast<unsigned long>(mult));
        i = j;
    }
    return z;
}

/// n(mu) = sum_i (i-1) mu_i, the top cocharge degree for content mu.
inline int n_stat(const Partition& mu) {
    int s = 0;
    for (int i = 0; i < mu.num_parts(); ++i) s += i * mu.part(i);
    return s;
}

/// n! / (mu_1! mu_2! ...) — the size of the S_n orbit of a point whose
/// coordinate multiplicities are mu.
inline Rational orbit_size_of(const Partition& mu) {
    Rational r = Rational::factorial(static_cast<unsigned long>(mu.size()));
    for (int p : mu.parts()) r /= Rational::factorial(static_cast<unsigned long>(p));
    return r;
}

/// Canonical permutation of cycle type mu: cycles (1..mu_1)(mu_1+1..mu_1+mu_2)...
/// returned as a 0-based image vector.
inline std::vector<int> representative_of_cycle_type(const Partition& mu) {
    std::vector<int> w(static_cast<size_t>(mu.size()));
    int base = 0;
    for (int p : mu.parts()) {
        for (int j = 0; j < p; ++j)
            w[static_cast<size_t>(base + j)] = base + (j + 1) % p;
        base += p;
    }
    return w;
}

}  // namespace orbitharm
