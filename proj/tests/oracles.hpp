#pragma once

// Test-only oracles, kept independent of the implementation paths they check.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "orbitharm/partition.hpp"
#include "orbitharm/qpoly.hpp"
#include "orbitharm/rational.hpp"

namespace oracles {

using orbitharm::Partition;
using orbitharm::QPoly;
using orbitharm::Rational;

/// Number of tabloids of shape `shape` fixed by a permutation of cycle type
/// `cycle_type`: assignments of whole cycles to rows filling each row exactly.
inline std::int64_t tabloid_fixed_points(const Partition& shape, const Partition& cycle_type) {
    if (shape.size() != cycle_type.size())
        throw std::invalid_argument("tabloid_fixed_points: size mismatch");
    std::vector<int> caps = shape.parts();
    const std::vector<int>& cycles = cycle_type.parts();
    auto rec = [&](auto&& self, size_t idx) -> std::int64_t {
        if (idx == cycles.size()) return 1;
        std::int64_t total = 0;
        for (size_t r = 0; r < caps.size(); ++r) {
            if (caps[r] < cycles[idx]) continue;
            caps[r] -= cycles[idx];
            total += self(self, idx + 1);
            caps[r] += cycles[idx];
        }
        return total;
    };
    return rec(rec, 0);
}

/// Character table of S_n computed without Murnaghan-Nakayama: start from the
/// permutation characters of the tabloid modules and strip previously
/// extracted irreducibles by inner products. The extraction order (descending
/// lexicographic) refines dominance, which makes the Kostka triangularity
/// phi^lam = chi^lam + sum_{nu > lam} K chi^nu usable row by row.
inline std::map<Partition, std::map<Partition, Rational>> brute_character_table(int n) {
    std::vector<Partition> parts = orbitharm::partitions_of(n);
    auto inner = [&](const std::map<Partition, Rational>& f, const std::map<Partition, Rational>& g) {
        Rational s(0);
        for (const Partition& mu : parts) s += f.at(mu) * g.at(mu) / orbitharm::z_of(mu);
        return s;
    };
    std::map<Partition, std::map<Partition, Rational>> table;
    std::vector<Partition> done;
    for (const Partition& lam : parts) {
        std::map<Partition, Rational> row;
        for (const Partition& mu : parts)
            row[mu] = Rational(static_cast<long>(tabloid_fixed_points(lam, mu)));
        for (const Partition& nu : done) {
            Rational c = inner(row, table.at(nu));
            if (c.is_zero()) continue;
            for (const Partition& mu : parts) row[mu] -= c * table.at(nu).at(mu);
        }
        if (!(inner(row, row) == Rational(1)))
            throw std::logic_error("brute_character_table: extracted row is not irreducible");
        table.emplace(lam, std::move(row));
        done.push_back(lam);
    }
    return table;
}

/// [n]_q! = prod_k (1 + q + ... + q^{k-1}).
inline QPoly q_factorial(int n) {
    QPoly f = QPoly::constant(Rational(1));
    for (int k = 1; k <= n; ++k) {
        QPoly bracket;
        for (int i = 0; i < k; ++i) bracket.add(i, Rational(1));
        f = f * bracket;
    }
    return f;
}

}  // namespace oracles
