#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "orbitharm/monomial.hpp"
#include "orbitharm/rational.hpp"

namespace orbitharm {

/// Multivariate polynomial over the exact rationals. Terms are kept in a map
/// sorted descending in grevlex, so the leading term is begin(). Zero
/// coefficients are never stored; two polynomials compare equal iff their
/// term maps do.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

    explicit MultiPoly(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw std::invalid_argument("MultiPoly: negative nvars");
    }

    static MultiPoly zero(int nvars) { return MultiPoly(nvars); }

    static MultiPoly constant(int nvars, Rational c) {
        MultiPoly p(nvars);
        p.add_term(Monomial::one(nvars), std::move(c));
        return p;
    }

    static MultiPoly term(Monomial m, Rational c) {
        MultiPoly p(m.nvars());
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    /// x_{i+1} (0-based i).
    static MultiPoly variable(int nvars, int i) {
        return term(Monomial::variable(nvars, i), Rational(1));
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Accumulates c on monomial m, erasing the entry if the sum vanishes.
    void add_term(Monomial m, const Rational& c) {
        if (c.is_zero()) return;
        if (m.nvars() != nvars_) throw std::invalid_argument("MultiPoly: monomial nvars mismatch");
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const Monomial& leading_monomial() const {
        require_nonzero("leading monomial");
        return terms_.begin()->first;
    }

    const Rational& leading_coeff() const {
        require_nonzero("leading coefficient");
        return terms_.begin()->second;
    }

    /// Total degree; the zero polynomial reports -1.
    int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    /// Sum of the terms of total degree exactly d (possibly zero).
    MultiPoly degree_component(int d) const {
        MultiPoly r(nvars_);
        for (const auto& [m, c] : terms_)
            if (m.degree() == d) r.terms_.emplace(m, c);
        return r;
    }

    /// Highest-degree homogeneous component.
    MultiPoly top_form() const {
        if (is_zero()) throw std::invalid_argument("top form of zero undefined");
        return degree_component(degree());
    }

    /// f(x_{w(1)},...,x_{w(n)}) for a 0-based permutation w. Satisfies
    /// apply_permutation(apply_permutation(f,u),v) = apply_permutation(f, v∘u)
    /// where (v∘u)(i) = v(u(i)).
    MultiPoly apply_permutation(const std::vector<int>& w) const {
        if (static_cast<int>(w.size()) != nvars_)
            throw std::invalid_argument("apply_permutation: permutation length != nvars");
        std::vector<bool> seen(w.size(), false);
        for (int x : w) {
            if (x < 0 || x >= nvars_ || seen[static_cast<size_t>(x)])
                throw std::invalid_argument("apply_permutation: not a permutation");
            seen[static_cast<size_t>(x)] = true;
        }
        MultiPoly r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m.permuted(w), c);
        return r;
    }

    Rational evaluate(const std::vector<Rational>& x) const {
        if (static_cast<int>(x.size()) != nvars_)
            throw std::invalid_argument("evaluate: wrong coordinate count");
        Rational total(0);
        for (const auto& [m, c] : terms_) {
            Rational v = c;
            for (int i = 0; i < nvars_; ++i) {
                int e = m.exponent(i);
                if (e > 0) v *= x[static_cast<size_t>(i)].pow(static_cast<unsigned long>(e));
            }
            total += v;
        }
        return total;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        require_same_nvars(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& o) {
        require_same_nvars(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    /// *this -= c * m * g. The workhorse of polynomial division.
    void sub_scaled(const Rational& c, const Monomial& m, const MultiPoly& g) {
        require_same_nvars(g);
        for (const auto& [mg, cg] : g.terms_) add_term(mg.times(m), -(c * cg));
    }

    MultiPoly operator-() const {
        MultiPoly r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.require_same_nvars(b);
        MultiPoly r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
        return r;
    }

    friend MultiPoly operator*(const Rational& c, const MultiPoly& p) {
        MultiPoly r(p.nvars_);
        if (c.is_zero()) return r;
        for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
        return r;
    }

    /// Scales to leading coefficient 1.
    MultiPoly monic() const {
        require_nonzero("monic");
        return leading_coeff().inverse() * *this;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

private:
    void require_same_nvars(const MultiPoly& o) const {
        if (o.nvars_ != nvars_) throw std::invalid_argument("MultiPoly: nvars mismatch");
    }
    void require_nonzero(const char* what) const {
        if (terms_.empty()) throw std::invalid_argument(std::string(what) + " of zero polynomial");
    }

    int nvars_;
    TermMap terms_;
};

/// Elementary symmetric polynomial e_r in the variables x_{i+1}, i in vars
/// (0-based indices into the ambient n variables).
inline MultiPoly elementary_symmetric(int nvars, int r, const std::vector<int>& vars) {
    if (r < 0 || r > static_cast<int>(vars.size()))
        throw std::invalid_argument("elementary_symmetric: r out of range");
    MultiPoly p(nvars);
    if (r == 0) return MultiPoly::constant(nvars, Rational(1));
    std::vector<int> idx(static_cast<size_t>(r));
    // iterate over r-subsets of vars
    auto rec = [&](auto&& self, size_t pos, size_t start) -> void {
        if (pos == idx.size()) {
            std::vector<int> e(static_cast<size_t>(nvars), 0);
            for (int v : idx) e.at(static_cast<size_t>(v)) = 1;
            p.add_term(Monomial(std::move(e)), Rational(1));
            return;
        }
        for (size_t i = start; i < vars.size(); ++i) {
            idx[pos] = vars[i];
            self(self, pos + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
    return p;
}

/// x_1 + ... + x_n.
inline MultiPoly coordinate_sum_poly(int nvars) {
    std::vector<int> all(static_cast<size_t>(nvars));
    for (int i = 0; i < nvars; ++i) all[static_cast<size_t>(i)] = i;
    return elementary_symmetric(nvars, 1, all);
}

}  // namespace orbitharm
