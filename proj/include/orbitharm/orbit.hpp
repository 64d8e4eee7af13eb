#pragma once

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "orbitharm/groebner.hpp"
#include "orbitharm/monomial.hpp"
#include "orbitharm/multipoly.hpp"
#include "orbitharm/partition.hpp"
#include "orbitharm/points.hpp"

namespace orbitharm {

/// Reduced Groebner basis of the vanishing ideal I(Y) of a finite point set,
/// computed Buchberger-Moller style: monomials are enumerated in increasing
/// order and their evaluation vectors on Y are row-reduced exactly. A
/// dependent monomial m yields the basis element m - (combination of earlier
/// standard monomials); an independent one becomes a standard monomial. The
/// result is reduced by construction and the quotient dimension equals |Y|.
inline GroebnerBasis vanishing_ideal(const PointSet& Y, MonomialOrder order = {}) {
    if (Y.size() == 0) throw std::invalid_argument("vanishing_ideal: empty point set");
    const int n = Y.nvars();
    const size_t npts = Y.size();

    auto eval_vector = [&](const Monomial& m) {
        std::vector<Rational> v(npts);
        for (size_t p = 0; p < npts; ++p) {
            Rational x(1);
            for (int i = 0; i < n; ++i) {
                int e = m.exponent(i);
                if (e > 0) x *= Y.points()[p].coord(i).pow(static_cast<unsigned long>(e));
            }
            v[p] = std::move(x);
        }
        return v;
    };

    struct EchelonRow {
        std::vector<Rational> v;       // reduced evaluation vector
        size_t pivot;                  // first nonzero index of v
        std::vector<Rational> combo;   // v = sum_k combo[k] * eval(standard[k])
    };

    std::vector<Monomial> standard;       // standard monomials found so far
    std::vector<EchelonRow> rows;
    std::vector<MultiPoly> gens;
    std::set<Monomial, GrevlexLess> queue;
    queue.insert(Monomial::one(n));

    auto divisible_by_generator = [&](const Monomial& m) {
        for (const auto& g : gens)
            if (g.leading_monomial().divides(m)) return true;
        return false;
    };

    while (!queue.empty()) {
        Monomial m = *queue.begin();
        queue.erase(queue.begin());
        if (divisible_by_generator(m)) continue;

        std::vector<Rational> v = eval_vector(m);
        std::vector<Rational> combo(standard.size(), Rational(0));
        for (const auto& row : rows) {
            if (v[row.pivot].is_zero()) continue;
            Rational factor = v[row.pivot] / row.v[row.pivot];
            for (size_t k = 0; k < npts; ++k) v[k] -= factor * row.v[k];
            for (size_t k = 0; k < row.combo.size(); ++k) combo[k] += factor * row.combo[k];
        }
        size_t pivot = 0;
        while (pivot < npts && v[pivot].is_zero()) ++pivot;

        if (pivot == npts) {
            // eval(m) = sum combo[k] * eval(standard[k]): a basis element.
            MultiPoly g(n);
            g.add_term(m, Rational(1));
            for (size_t k = 0; k < standard.size(); ++k) g.add_term(standard[k], -combo[k]);
            gens.push_back(std::move(g));
        } else {
            // v = eval(m) - sum combo[k]*eval(standard[k]): record the row's
            // expansion over standard + {m}.
            std::vector<Rational> c(standard.size() + 1, Rational(0));
            for (size_t k = 0; k < combo.size(); ++k) c[k] = -combo[k];
            c.back() = Rational(1);
            rows.push_back(EchelonRow{std::move(v), pivot, std::move(c)});
            standard.push_back(m);
            for (int i = 0; i < n; ++i) queue.insert(m.times(Monomial::variable(n, i)));
        }
    }

    if (standard.size() != npts)
        throw std::logic_error("vanishing_ideal: standard monomial count does not match |Y|");
    detail::sort_by_leading_monomial_desc(gens);
    return GroebnerBasis(std::move(gens), order, n, true);
}

/// Reduced basis of the top-form ideal T = (top_form(f) : f in ideal(I)).
/// Under a degree-compatible order the top forms of a reduced basis are
/// themselves the reduced basis of T: leading monomials are preserved, so the
/// standard monomials (and hence all graded dimensions) agree.
inline GroebnerBasis associated_graded_ideal(const GroebnerBasis& I) {
    if (!I.order().degree_compatible())
        throw std::invalid_argument("associated_graded_ideal: order is not degree-compatible");
    if (!I.is_reduced())
        throw std::invalid_argument("associated_graded_ideal: input basis must be reduced");
    std::vector<MultiPoly> tops;
    tops.reserve(I.size());
    for (const auto& g : I.generators()) tops.push_back(g.top_form());
    return GroebnerBasis(detail::interreduce(std::move(tops)), I.order(), I.nvars(), true);
}

/// Constructive inverse of the top-form map: given homogeneous h in ideal(T)
/// with T = associated_graded_ideal(I), returns f in ideal(I) with
/// top_form(f) = h and deg f = deg h. Divides h by the top forms and recombines
/// the degree-matched cofactor slices with the original generators.
inline MultiPoly lift_top_form(const MultiPoly& h, const GroebnerBasis& I, const GroebnerBasis& T) {
    if (h.is_zero()) throw std::invalid_argument("lift_top_form: zero polynomial has no top form");
    if (!h.is_homogeneous()) throw std::invalid_argument("lift_top_form: input is not homogeneous");
    if (T.size() != I.size()) throw std::invalid_argument("lift_top_form: T does not match I");
    for (size_t i = 0; i < I.size(); ++i)
        if (T.generator(i) != I.generator(i).top_form())
            throw std::invalid_argument("lift_top_form: T is not the top-form basis of I");

    NormalFormResult nf = normal_form(h, T);
    if (!nf.remainder.is_zero())
        throw std::invalid_argument("lift_top_form: polynomial is not in the graded ideal");

    const int d = h.degree();
    MultiPoly f(h.nvars());
    for (size_t i = 0; i < I.size(); ++i) {
        const MultiPoly& gi = I.generator(i);
        MultiPoly slice = nf.cofactors[i].degree_component(d - gi.degree());
        if (!slice.is_zero()) f += slice * gi;
    }
    return f;
}

/// Generating set of the Tanisaki ideal I_lam: the partial elementary
/// symmetric polynomials e_r(x_S) over all subsets S of {1..n} with |S| = k
/// and k >= r > k - d_k(lam), where d_k(lam) is the partial sum of the last k
/// entries of the conjugate partition padded to length n.
inline std::vector<MultiPoly> tanisaki_generators(const Partition& lam) {
    const int n = lam.size();
    if (n < 1) throw std::invalid_argument("tanisaki_generators: partition of n >= 1 required");
    Partition conj = lam.conjugate();
    std::vector<int> dk(static_cast<size_t>(n) + 1, 0);
    for (int k = 1; k <= n; ++k) {
        int s = 0;
        for (int j = n - k; j < n; ++j) s += conj.part_or_zero(j);
        dk[static_cast<size_t>(k)] = s;
    }

    std::vector<MultiPoly> gens;
    std::vector<int> subset;
    auto rec = [&](auto&& self, int start, int k) -> void {
        if (static_cast<int>(subset.size()) == k) {
            for (int r = k - dk[static_cast<size_t>(k)] + 1; r <= k; ++r)
                if (r >= 1) gens.push_back(elementary_symmetric(n, r, subset));
            return;
        }
        for (int i = start; i < n; ++i) {
            subset.push_back(i);
            self(self, i + 1, k);
            subset.pop_back();
        }
    };
    for (int k = 1; k <= n; ++k) {
        if (dk[static_cast<size_t>(k)] <= 0) continue;
        subset.clear();
        rec(rec, 0, k);
    }
    return gens;
}

/// Point with coordinate multiplicities lam: value k-1 repeated lam_k times.
inline Point canonical_point(const Partition& lam) {
    std::vector<Rational> c;
    c.reserve(static_cast<size_t>(lam.size()));
    for (int k = 0; k < lam.num_parts(); ++k)
        for (int j = 0; j < lam.part(k); ++j) c.emplace_back(k);
    return Point(std::move(c));
}

}  // namespace orbitharm
