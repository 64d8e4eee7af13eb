#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "orbitharm/monomial.hpp"
#include "orbitharm/multipoly.hpp"

namespace orbitharm {

/// Canonical representation of an ideal: a reduced Groebner basis under a
/// fixed monomial order. Generators are monic, mutually tail-reduced, and
/// sorted by leading monomial descending, so two bases represent the same
/// ideal iff they are equal element-wise.
class GroebnerBasis {
public:
    GroebnerBasis(std::vector<MultiPoly> gens, MonomialOrder order, int nvars, bool reduced)
        : gens_(std::move(gens)), order_(order), nvars_(nvars), reduced_(reduced) {
        for (const auto& g : gens_)
            if (g.nvars() != nvars_) throw std::invalid_argument("GroebnerBasis: nvars mismatch");
    }

    const std::vector<MultiPoly>& generators() const { return gens_; }
    const MultiPoly& generator(size_t i) const { return gens_.at(i); }
    size_t size() const { return gens_.size(); }
    MonomialOrder order() const { return order_; }
    int nvars() const { return nvars_; }
    bool is_reduced() const { return reduced_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    bool is_homogeneous() const {
        for (const auto& g : gens_)
            if (!g.is_homogeneous()) return false;
        return true;
    }

    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
        return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.gens_ == b.gens_;
    }

private:
    std::vector<MultiPoly> gens_;
    MonomialOrder order_;
    int nvars_;
    bool reduced_;
};

/// Remainder and cofactors of a multivariate division:
/// input = sum_i cofactors[i] * generator_i + remainder, exactly, and no
/// monomial of the remainder is divisible by any generator's leading monomial.
struct NormalFormResult {
    MultiPoly remainder;
    std::vector<MultiPoly> cofactors;
};

namespace detail {

/// Division core. When cofactors != nullptr it must be pre-sized to gens.size().
inline MultiPoly divide_impl(const MultiPoly& f, const std::vector<MultiPoly>& gens,
                             std::vector<MultiPoly>* cofactors) {
    const int n = f.nvars();
    MultiPoly p = f;
    MultiPoly r(n);
    while (!p.is_zero()) {
        const Monomial& m = p.leading_monomial();
        const Rational& c = p.leading_coeff();
        bool hit = false;
        for (size_t i = 0; i < gens.size(); ++i) {
            const MultiPoly& g = gens[i];
            if (g.is_zero()) continue;
            if (!g.leading_monomial().divides(m)) continue;
            Monomial q = m.divide(g.leading_monomial());
            Rational factor = c / g.leading_coeff();
            p.sub_scaled(factor, q, g);
            if (cofactors) (*cofactors)[i].add_term(std::move(q), factor);
            hit = true;
            break;
        }
        if (!hit) {
            r.add_term(m, c);
            p.add_term(m, -c);
        }
    }
    return r;
}

}  // namespace detail

/// Remainder-only reduction against an arbitrary generator list.
inline MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& gens) {
    for (const auto& g : gens)
        if (!g.is_zero() && g.nvars() != f.nvars())
            throw std::invalid_argument("reduce: nvars mismatch");
    return detail::divide_impl(f, gens, nullptr);
}

inline NormalFormResult normal_form(const MultiPoly& f, const GroebnerBasis& G) {
    if (f.nvars() != G.nvars()) throw std::invalid_argument("normal_form: nvars mismatch");
    std::vector<MultiPoly> cofs(G.size(), MultiPoly(f.nvars()));
    MultiPoly r = detail::divide_impl(f, G.generators(), &cofs);
    return NormalFormResult{std::move(r), std::move(cofs)};
}

inline bool ideal_contains(const MultiPoly& f, const GroebnerBasis& G) {
    return reduce(f, G.generators()).is_zero();
}

inline MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
    Monomial L = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    MultiPoly s(f.nvars());
    s.sub_scaled(-f.leading_coeff().inverse(), L.divide(f.leading_monomial()), f);
    s.sub_scaled(g.leading_coeff().inverse(), L.divide(g.leading_monomial()), g);
    return s;
}

namespace detail {

inline void sort_by_leading_monomial_desc(std::vector<MultiPoly>& v) {
    std::sort(v.begin(), v.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return grevlex_cmp(a.leading_monomial(), b.leading_monomial()) > 0;
    });
}

/// Ideal-preserving interreduction: each generator is replaced by its full
/// remainder against the others until nothing changes (zero remainders are
/// dropped). Every replacement strictly decreases the polynomial in the
/// well-founded term order, so the loop terminates. On a Groebner basis the
/// fixpoint is the unique reduced basis.
inline std::vector<MultiPoly> interreduce(std::vector<MultiPoly> gens) {
    std::vector<MultiPoly> v;
    for (auto& g : gens)
        if (!g.is_zero()) v.push_back(g.monic());

    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < v.size();) {
            std::vector<MultiPoly> others;
            others.reserve(v.size() - 1);
            for (size_t j = 0; j < v.size(); ++j)
                if (j != i) others.push_back(v[j]);
            MultiPoly r = divide_impl(v[i], others, nullptr);
            if (r.is_zero()) {
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
            } else {
                MultiPoly m = r.monic();
                if (m != v[i]) {
                    v[i] = std::move(m);
                    changed = true;
                }
                ++i;
            }
        }
    }
    sort_by_leading_monomial_desc(v);
    return v;
}

}  // namespace detail

/// Buchberger's algorithm with the normal pair-selection strategy (smallest
/// lcm first) and the product and chain pruning criteria, followed by
/// interreduction. Returns the unique reduced Groebner basis; an all-zero
/// input yields the basis of the zero ideal (no generators).
inline GroebnerBasis buchberger(const std::vector<MultiPoly>& input, MonomialOrder order = {}) {
    if (input.empty()) throw std::invalid_argument("buchberger: empty generator list");
    const int n = input.front().nvars();
    for (const auto& g : input)
        if (g.nvars() != n) throw std::invalid_argument("buchberger: nvars mismatch");

    std::vector<MultiPoly> basis = detail::interreduce(input);
    if (basis.empty()) return GroebnerBasis({}, order, n, true);

    struct PairKey {
        int deg;
        Monomial lcm;
        size_t i, j;
        bool operator<(const PairKey& o) const {
            if (deg != o.deg) return deg < o.deg;
            int c = grevlex_cmp(lcm, o.lcm);
            if (c != 0) return c < 0;
            return std::tie(i, j) < std::tie(o.i, o.j);
        }
    };

    std::set<PairKey> queue;
    std::set<std::pair<size_t, size_t>> handled;
    auto push_pair = [&](size_t i, size_t j) {
        Monomial L = Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
        queue.insert(PairKey{L.degree(), std::move(L), i, j});
    };
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

    auto done = [&](size_t a, size_t b) {
        return handled.count({std::min(a, b), std::max(a, b)}) > 0;
    };

    while (!queue.empty()) {
        PairKey pk = *queue.begin();
        queue.erase(queue.begin());
        handled.insert({pk.i, pk.j});

        const Monomial& lma = basis[pk.i].leading_monomial();
        const Monomial& lmb = basis[pk.j].leading_monomial();
        // Product criterion: coprime leading monomials reduce to zero.
        if (pk.lcm.degree() == lma.degree() + lmb.degree() && pk.lcm == lma.times(lmb)) continue;
        // Chain criterion.
        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pk.i || k == pk.j) continue;
            if (basis[k].leading_monomial().divides(pk.lcm) && done(pk.i, k) && done(pk.j, k))
                chained = true;
        }
        if (chained) continue;

        MultiPoly r = detail::divide_impl(s_polynomial(basis[pk.i], basis[pk.j]), basis, nullptr);
        if (r.is_zero()) continue;
        basis.push_back(r.monic());
        size_t newi = basis.size() - 1;
        for (size_t k = 0; k < newi; ++k) push_pair(k, newi);
    }

    return GroebnerBasis(detail::interreduce(std::move(basis)), order, n, true);
}

/// Reduced basis of ideal(G) + ideal(extra).
inline GroebnerBasis ideal_sum(const GroebnerBasis& G, const std::vector<MultiPoly>& extra) {
    std::vector<MultiPoly> gens = G.generators();
    bool any = false;
    for (const auto& f : extra) {
        if (f.is_zero()) continue;
        if (f.nvars() != G.nvars()) throw std::invalid_argument("ideal_sum: nvars mismatch");
        gens.push_back(f);
        any = true;
    }
    if (!any) return G;
    if (gens.empty()) return GroebnerBasis({}, G.order(), G.nvars(), true);
    return buchberger(gens, G.order());
}

/// Reduced bases are unique per (ideal, order), so ideal equality is
/// element-wise basis equality. Comparing across different orders or variable
/// counts is refused rather than silently recomputed.
inline bool ideal_equal(const GroebnerBasis& G1, const GroebnerBasis& G2) {
    if (G1.order() != G2.order()) throw std::invalid_argument("ideal_equal: monomial order mismatch");
    if (G1.nvars() != G2.nvars()) throw std::invalid_argument("ideal_equal: nvars mismatch");
    if (!G1.is_reduced() || !G2.is_reduced())
        throw std::invalid_argument("ideal_equal: bases must be reduced");
    return G1.generators() == G2.generators();
}

/// Throws unless the quotient by ideal(G) is finite-dimensional, i.e. every
/// variable has a pure power among the leading monomials.
inline void ensure_finite_dimensional(const GroebnerBasis& G) {
    const int n = G.nvars();
    for (const auto& g : G.generators())
        if (g.leading_monomial().is_one()) return;  // unit ideal, zero ring
    for (int v = 0; v < n; ++v) {
        bool found = false;
        for (const auto& g : G.generators()) {
            const Monomial& lm = g.leading_monomial();
            if (lm.exponent(v) == 0) continue;
            bool pure = true;
            for (int u = 0; u < n && pure; ++u)
                if (u != v && lm.exponent(u) != 0) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found)
            throw std::domain_error("quotient not finite-dimensional: variable x" + std::to_string(v + 1) +
                                    " has no pure-power leading monomial");
    }
}

namespace detail {

template <typename Fn>
inline void for_each_monomial_of_degree(int nvars, int d, Fn&& fn) {
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == nvars - 1) {
            e[static_cast<size_t>(pos)] = remaining;
            fn(Monomial(e));
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            e[static_cast<size_t>(pos)] = k;
            self(self, pos + 1, remaining - k);
        }
    };
    if (nvars == 0) {
        if (d == 0) fn(Monomial(0));
        return;
    }
    rec(rec, 0, d);
}

}  // namespace detail

/// Degree-d monomials not divisible by any leading monomial of G, in
/// decreasing monomial order. These are a vector-space basis of the degree-d
/// slice of the quotient.
inline std::vector<Monomial> standard_monomials(const GroebnerBasis& G, int d) {
    if (d < 0) throw std::invalid_argument("standard_monomials: negative degree");
    ensure_finite_dimensional(G);
    std::vector<Monomial> out;
    detail::for_each_monomial_of_degree(G.nvars(), d, [&](const Monomial& m) {
        for (const auto& g : G.generators())
            if (g.leading_monomial().divides(m)) return;
        out.push_back(m);
    });
    std::sort(out.begin(), out.end(), GrevlexGreater{});
    return out;
}

namespace detail {

// For a zero-dimensional monomial staircase the per-degree counts hit zero
// once and stay zero, so stopping at the first zero is sound. The hard cap
// only guards against broken inputs.
inline std::vector<std::int64_t> standard_monomial_profile(const GroebnerBasis& G) {
    ensure_finite_dimensional(G);
    std::vector<std::int64_t> dims;
    for (int d = 0;; ++d) {
        auto count = static_cast<std::int64_t>(standard_monomials(G, d).size());
        if (count == 0) break;
        dims.push_back(count);
        if (d > 512) throw std::logic_error("standard monomial enumeration did not terminate");
    }
    return dims;
}

}  // namespace detail

/// Graded dimension vector (dim_0, dim_1, ...) of the quotient by a
/// homogeneous ideal, trailing zeros trimmed.
inline std::vector<std::int64_t> hilbert_function(const GroebnerBasis& G) {
    if (!G.is_homogeneous())
        throw std::invalid_argument("hilbert_function: ideal is not homogeneous");
    return detail::standard_monomial_profile(G);
}

/// Total number of standard monomials; equals the quotient's vector-space
/// dimension for any zero-dimensional ideal, homogeneous or not.
inline std::int64_t quotient_dimension(const GroebnerBasis& G) {
    std::int64_t total = 0;
    for (auto c : detail::standard_monomial_profile(G)) total += c;
    return total;
}

}  // namespace orbitharm
