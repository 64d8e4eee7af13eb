#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitharm/groebner.hpp"
#include "orbitharm/partition.hpp"
#include "orbitharm/qpoly.hpp"
#include "orbitharm/symfunc.hpp"

namespace orbitharm {

/// Graded trace of the canonical permutation of cycle type mu acting on the
/// quotient by a homogeneous ideal: sum_d q^d tr(w | degree-d slice). The
/// matrix entries come from permuting each standard monomial and reducing to
/// normal form; only the diagonal coefficients are read off. Traces of these
/// actions are rational algebraic integers, so integrality is asserted.
inline QPoly graded_trace(const GroebnerBasis& T, const Partition& mu) {
    if (!T.is_homogeneous()) throw std::invalid_argument("graded_trace: ideal is not homogeneous");
    if (mu.size() != T.nvars()) throw std::invalid_argument("graded_trace: cycle type size != nvars");
    std::vector<int> w = representative_of_cycle_type(mu);
    QPoly tr;
    for (int d = 0;; ++d) {
        std::vector<Monomial> basis = standard_monomials(T, d);
        if (basis.empty()) break;
        Rational t(0);
        for (const Monomial& b : basis) {
            MultiPoly image = reduce(MultiPoly::term(b.permuted(w), Rational(1)), T.generators());
            t += image.coeff(b);
        }
        if (!t.is_integer()) throw std::logic_error("graded_trace: non-integer trace");
        if (!t.is_zero()) tr.add(d, t);
    }
    return tr;
}

/// Per-class graded traces of the quotient: entry (d, mu) is the trace of a
/// cycle-type-mu permutation on the degree-d slice. The identity column is
/// the Hilbert function.
class GradedCharacterTable {
public:
    GradedCharacterTable(int n, std::map<Partition, QPoly> classes)
        : n_(n), classes_(std::move(classes)) {}

    static GradedCharacterTable from_quotient(const GroebnerBasis& T) {
        std::map<Partition, QPoly> classes;
        for (const Partition& mu : partitions_of(T.nvars())) classes.emplace(mu, graded_trace(T, mu));
        return GradedCharacterTable(T.nvars(), std::move(classes));
    }

    int n() const { return n_; }
    const std::map<Partition, QPoly>& classes() const { return classes_; }

    QPoly trace(const Partition& mu) const {
        auto it = classes_.find(mu);
        if (it == classes_.end()) throw std::invalid_argument("GradedCharacterTable: unknown class");
        return it->second;
    }

    /// Identity-class column: the Hilbert series of the quotient.
    QPoly hilbert_series() const {
        std::vector<int> ones(static_cast<size_t>(n_), 1);
        return trace(Partition(std::move(ones)));
    }

private:
    int n_;
    std::map<Partition, QPoly> classes_;
};

/// Graded Frobenius characteristic in the power-sum basis:
/// Frob_q = sum_mu z_mu^{-1} (graded trace at mu) p_mu.
inline SymFuncExpr graded_frobenius(const GroebnerBasis& T) {
    const int n = T.nvars();
    SymFuncExpr out(n, Basis::p);
    for (const Partition& mu : partitions_of(n)) {
        QPoly t = graded_trace(T, mu);
        if (!t.is_zero()) out.add(mu, z_of(mu).inverse() * t);
    }
    return out;
}

inline SymFuncExpr graded_frobenius(const GradedCharacterTable& table) {
    SymFuncExpr out(table.n(), Basis::p);
    for (const auto& [mu, t] : table.classes())
        if (!t.is_zero()) out.add(mu, z_of(mu).inverse() * t);
    return out;
}

/// Frobenius characteristic in the Schur basis, with the representation-
/// theoretic sanity check that every coefficient lands in Z_{>=0}[q].
inline SymFuncExpr frobenius_schur(const GradedCharacterTable& table) {
    SymFuncExpr s = p_to_s(graded_frobenius(table));
    if (!s.has_nonnegative_integer_coeffs())
        throw std::logic_error("frobenius_schur: Schur coefficients are not in Z>=0[q]");
    return s;
}

inline SymFuncExpr frobenius_schur(const GroebnerBasis& T) {
    return frobenius_schur(GradedCharacterTable::from_quotient(T));
}

}  // namespace orbitharm
