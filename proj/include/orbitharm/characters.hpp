#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "orbitharm/partition.hpp"

namespace orbitharm {

namespace detail {

/// Beta-set of a partition: strictly decreasing first-column hook lengths
/// lam_i + (L - i) for a fixed length L.
inline std::vector<int> beta_set(const Partition& lam, int len) {
    std::vector<int> beta(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) beta[static_cast<size_t>(i)] = lam.part_or_zero(i) + (len - 1 - i);
    return beta;
}

inline Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    int len = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
        int p = beta[static_cast<size_t>(i)] - (len - 1 - i);
        if (p < 0) throw std::logic_error("partition_from_beta: negative part");
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

inline std::int64_t mn_rec(const Partition& lam, const std::vector<int>& mu, size_t idx) {
    if (idx == mu.size()) return lam.empty() ? 1 : 0;
    int k = mu[idx];
    // Removing a border strip of size k = moving some beta element down by k;
    // the sign exponent counts beta elements jumped over.
    std::vector<int> beta = beta_set(lam, std::max(lam.num_parts(), 1));
    std::int64_t total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - k;
        if (target < 0) continue;
        bool occupied = false;
        int height = 0;
        for (size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++height;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::int64_t sub = mn_rec(partition_from_beta(std::move(nb)), mu, idx + 1);
        total += (height % 2 == 0) ? sub : -sub;
    }
    return total;
}

}  // namespace detail

/// Irreducible S_n character value chi^lam(mu) by the Murnaghan-Nakayama rule
/// (border-strip removal with sign (-1)^height, run on beta-sets).
inline std::int64_t mn_character(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size())
        throw std::invalid_argument("mn_character: partitions of different n");
    return detail::mn_rec(lam, mu.parts(), 0);
}

/// Number of standard Young tableaux of shape lam, by corner-removal
/// recursion. chi^lam at the identity.
inline std::int64_t syt_count(const Partition& lam) {
    if (lam.empty()) return 1;
    std::int64_t total = 0;
    const auto& p = lam.parts();
    for (int i = 0; i < lam.num_parts(); ++i) {
        bool corner = (i + 1 == lam.num_parts()) || p[static_cast<size_t>(i) + 1] < p[static_cast<size_t>(i)];
        if (!corner) continue;
        std::vector<int> q = p;
        if (--q[static_cast<size_t>(i)] == 0) q.erase(q.begin() + i);
        total += syt_count(Partition(std::move(q)));
    }
    return total;
}

}  // namespace orbitharm
