#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orbitharm/characters.hpp"
#include "orbitharm/partition.hpp"
#include "orbitharm/qpoly.hpp"

namespace orbitharm {

enum class Basis { p, s, h, Htilde };

inline std::string basis_name(Basis b) {
    switch (b) {
        case Basis::p: return "p";
        case Basis::s: return "s";
        case Basis::h: return "h";
        case Basis::Htilde: return "Htilde";
    }
    throw std::logic_error("basis_name: unknown basis");
}

/// Symbol used in the one-line human-readable form: p[2,1], s[2,1], H[2,1].
inline std::string basis_symbol(Basis b) {
    switch (b) {
        case Basis::p: return "p";
        case Basis::s: return "s";
        case Basis::h: return "h";
        case Basis::Htilde: return "H";
    }
    throw std::logic_error("basis_symbol: unknown basis");
}

/// Homogeneous degree-n symmetric function expressed in a named basis with
/// q-polynomial coefficients. Zero coefficients are never stored.
class SymFuncExpr {
public:
    SymFuncExpr(int n, Basis basis) : n_(n), basis_(basis) {
        if (n < 0) throw std::invalid_argument("SymFuncExpr: negative degree");
    }

    int n() const { return n_; }
    Basis basis() const { return basis_; }
    const std::map<Partition, QPoly>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    void add(const Partition& key, const QPoly& coeff) {
        if (coeff.is_zero()) return;
        if (key.size() != n_) throw std::invalid_argument("SymFuncExpr: key is not a partition of n");
        auto it = c_.find(key);
        if (it == c_.end()) {
            c_.emplace(key, coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    QPoly coeff(const Partition& key) const {
        auto it = c_.find(key);
        return it == c_.end() ? QPoly() : it->second;
    }

    SymFuncExpr& operator+=(const SymFuncExpr& o) {
        require_compatible(o);
        for (const auto& [k, v] : o.c_) add(k, v);
        return *this;
    }
    SymFuncExpr& operator-=(const SymFuncExpr& o) {
        require_compatible(o);
        for (const auto& [k, v] : o.c_) add(k, -v);
        return *this;
    }
    friend SymFuncExpr operator+(SymFuncExpr a, const SymFuncExpr& b) { a += b; return a; }
    friend SymFuncExpr operator-(SymFuncExpr a, const SymFuncExpr& b) { a -= b; return a; }

    /// Coefficient-wise multiplication by a q-polynomial.
    friend SymFuncExpr operator*(const QPoly& s, const SymFuncExpr& e) {
        SymFuncExpr r(e.n_, e.basis_);
        if (s.is_zero()) return r;
        for (const auto& [k, v] : e.c_) r.add(k, s * v);
        return r;
    }

    friend bool operator==(const SymFuncExpr& a, const SymFuncExpr& b) {
        return a.n_ == b.n_ && a.basis_ == b.basis_ && a.c_ == b.c_;
    }
    friend bool operator!=(const SymFuncExpr& a, const SymFuncExpr& b) { return !(a == b); }

    bool has_nonnegative_integer_coeffs() const {
        for (const auto& [k, v] : c_)
            if (!v.has_nonnegative_integer_coeffs()) return false;
        return true;
    }

    /// One-line form with terms in ascending partition order, e.g.
    /// "(q^2+q)*s[2,1] + (q^2+1)*s[3]"; coefficient 1 is omitted and a
    /// single-term coefficient needs no parentheses.
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        for (const auto& [k, v] : c_) {
            std::string vs = v.to_string();
            std::string sym = basis_symbol(basis_) + k.to_string();
            std::string term;
            if (vs == "1") {
                term = sym;
            } else {
                bool single = v.coeffs().size() == 1 && v.coeffs().begin()->second.sign() > 0;
                term = (single ? vs : "(" + vs + ")") + "*" + sym;
            }
            if (!out.empty()) out += " + ";
            out += term;
        }
        return out;
    }

private:
    void require_compatible(const SymFuncExpr& o) const {
        if (o.n_ != n_ || o.basis_ != basis_)
            throw std::invalid_argument("SymFuncExpr: degree or basis mismatch");
    }

    int n_;
    Basis basis_;
    std::map<Partition, QPoly> c_;
};

/// Classical change of basis via p_mu = sum_lam chi^lam(mu) s_lam: the s_lam
/// coefficient of sum_mu c_mu p_mu is sum_mu chi^lam(mu) c_mu.
inline SymFuncExpr p_to_s(const SymFuncExpr& expr) {
    if (expr.basis() != Basis::p) throw std::invalid_argument("p_to_s: expression not in p basis");
    SymFuncExpr out(expr.n(), Basis::s);
    for (const Partition& lam : partitions_of(expr.n())) {
        QPoly c;
        for (const auto& [mu, cmu] : expr.coeffs()) {
            std::int64_t chi = mn_character(lam, mu);
            if (chi != 0) c += Rational(static_cast<long>(chi)) * cmu;
        }
        out.add(lam, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Tableaux, charge, Kostka-Foulkes
// ---------------------------------------------------------------------------

using Tableau = std::vector<std::vector<int>>;

/// All semistandard tableaux of the given shape whose content is exactly
/// `content` (content[i] copies of the letter i+1). Rows weakly increase,
/// columns strictly increase.
inline std::vector<Tableau> semistandard_tableaux(const Partition& shape, const Partition& content) {
    std::vector<Tableau> out;
    if (shape.size() != content.size()) return out;
    const int rows = shape.num_parts();
    const int letters = content.num_parts();
    Tableau t(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r) t[static_cast<size_t>(r)].assign(static_cast<size_t>(shape.part(r)), 0);
    std::vector<int> used(static_cast<size_t>(letters), 0);

    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == rows) {
            out.push_back(t);
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == shape.part(r)) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[static_cast<size_t>(r)][static_cast<size_t>(c) - 1]);
        if (r > 0 && c < shape.part(r - 1)) lo = std::max(lo, t[static_cast<size_t>(r) - 1][static_cast<size_t>(c)] + 1);
        for (int v = lo; v <= letters; ++v) {
            if (used[static_cast<size_t>(v) - 1] >= content.part(v - 1)) continue;
            t[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            ++used[static_cast<size_t>(v) - 1];
            self(self, nr, nc);
            --used[static_cast<size_t>(v) - 1];
        }
    };
    if (rows == 0) {
        out.push_back(t);
        return out;
    }
    rec(rec, 0, 0);
    return out;
}

/// Reading word: rows bottom to top, each left to right.
inline std::vector<int> reading_word(const Tableau& t) {
    std::vector<int> w;
    for (auto it = t.rbegin(); it != t.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
}

/// Lascoux-Schutzenberger charge of a word with partition content.
///
/// Standard subwords are extracted scanning right to left (wrapping
/// cyclically): take the first 1, then the first 2 to its left, and so on.
/// Each extracted subword, kept in original word order, is scored by indices:
/// letter 1 has index 0, and letter r+1 gets the index of r plus one exactly
/// when r+1 sits to the right of r. The charge is the total over subwords.
inline int charge(const std::vector<int>& word) {
    if (word.empty()) return 0;
    int maxletter = 0;
    for (int x : word) {
        if (x < 1) throw std::invalid_argument("charge: letters must be positive");
        maxletter = std::max(maxletter, x);
    }
    std::vector<int> content(static_cast<size_t>(maxletter), 0);
    for (int x : word) ++content[static_cast<size_t>(x) - 1];
    for (size_t i = 1; i < content.size(); ++i)
        if (content[i] > content[i - 1])
            throw std::invalid_argument("charge: content is not a partition");

    std::vector<bool> removed(word.size(), false);
    size_t remaining = word.size();
    int total = 0;
    while (remaining > 0) {
        int biggest = 0;
        for (size_t i = 0; i < word.size(); ++i)
            if (!removed[i]) biggest = std::max(biggest, word[i]);

        std::vector<size_t> picked;
        // scan cursor moves right-to-left over live positions, wrapping
        size_t cursor = word.size();
        auto prev_live = [&](size_t from) {
            size_t i = from;
            for (size_t step = 0; step < word.size(); ++step) {
                i = (i == 0) ? word.size() - 1 : i - 1;
                if (!removed[i]) return i;
            }
            throw std::logic_error("charge: no live position");
        };
        for (int want = 1; want <= biggest; ++want) {
            size_t i = cursor;
            size_t guard = 0;
            do {
                i = prev_live(i);
                if (++guard > word.size() + 1) throw std::logic_error("charge: letter not found");
            } while (word[i] != want ||
                     std::find(picked.begin(), picked.end(), i) != picked.end());
            picked.push_back(i);
            cursor = i;
        }
        std::sort(picked.begin(), picked.end());
        // picked now lists the standard subword in original word order
        std::vector<size_t> pos_of(static_cast<size_t>(biggest) + 1);
        for (size_t k = 0; k < picked.size(); ++k)
            pos_of[static_cast<size_t>(word[picked[k]])] = picked[k];
        int index = 0;
        for (int r = 2; r <= biggest; ++r) {
            if (pos_of[static_cast<size_t>(r)] > pos_of[static_cast<size_t>(r) - 1]) ++index;
            total += index;
        }
        for (size_t i : picked) {
            removed[i] = true;
            --remaining;
        }
    }
    return total;
}

/// Kostka-Foulkes polynomial K_{lam,mu}(q): charge generating function over
/// semistandard tableaux of shape lam and content mu. Zero when lam does not
/// dominate mu (no tableaux exist).
inline QPoly kostka_foulkes(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size())
        throw std::invalid_argument("kostka_foulkes: partitions of different n");
    QPoly k;
    for (const Tableau& t : semistandard_tableaux(lam, mu))
        k += QPoly::q_power(charge(reading_word(t)));
    return k;
}

/// Modified Hall-Littlewood function in the Schur basis:
/// Htilde_mu = sum_lam Ktilde_{lam,mu}(q) s_lam with
/// Ktilde_{lam,mu}(q) = q^{n(mu)} K_{lam,mu}(1/q), the cocharge generating
/// function.
inline SymFuncExpr htilde_in_schur(const Partition& mu) {
    const int n = mu.size();
    SymFuncExpr out(n, Basis::s);
    const int N = n_stat(mu);
    for (const Partition& lam : partitions_of(n)) {
        QPoly k = kostka_foulkes(lam, mu);
        if (!k.is_zero()) out.add(lam, k.reversed(N));
    }
    return out;
}

/// Complete homogeneous h_mu in the Schur basis (Kostka numbers).
inline SymFuncExpr h_in_schur(const Partition& mu) {
    const int n = mu.size();
    SymFuncExpr out(n, Basis::s);
    for (const Partition& lam : partitions_of(n)) {
        auto count = static_cast<long>(semistandard_tableaux(lam, mu).size());
        if (count != 0) out.add(lam, QPoly::constant(Rational(count)));
    }
    return out;
}

/// Inverts the unitriangular Ktilde matrix: writes a Schur expression in the
/// Htilde basis. Partitions are eliminated bottom-up (ascending order refines
/// dominance); the diagonal entry is the single power q^{n(mu)}, so each step
/// is an exact division whose failure means the input is outside the
/// integral Htilde span.
inline SymFuncExpr s_to_htilde(const SymFuncExpr& expr) {
    if (expr.basis() != Basis::s) throw std::invalid_argument("s_to_htilde: expression not in s basis");
    const int n = expr.n();
    SymFuncExpr residual = expr;
    SymFuncExpr out(n, Basis::Htilde);
    std::vector<Partition> parts = partitions_of(n);
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        const Partition& mu = *it;
        QPoly c = residual.coeff(mu);
        if (c.is_zero()) continue;
        QPoly a;
        try {
            a = c.divided_by_q_power(n_stat(mu));
        } catch (const std::domain_error&) {
            throw std::domain_error("s_to_htilde: coefficient of H" + mu.to_string() +
                                    " is not a polynomial in q");
        }
        out.add(mu, a);
        residual -= a * htilde_in_schur(mu);
    }
    if (!residual.is_zero()) throw std::logic_error("s_to_htilde: solve left a nonzero residual");
    return out;
}

/// Round-trip companion of s_to_htilde.
inline SymFuncExpr htilde_to_s(const SymFuncExpr& expr) {
    if (expr.basis() != Basis::Htilde)
        throw std::invalid_argument("htilde_to_s: expression not in Htilde basis");
    SymFuncExpr out(expr.n(), Basis::s);
    for (const auto& [mu, c] : expr.coeffs()) out += c * htilde_in_schur(mu);
    return out;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

/// Parses the one-line human form produced by SymFuncExpr::to_string.
inline SymFuncExpr parse_symfunc(const std::string& s, int n, Basis basis) {
    SymFuncExpr out(n, basis);
    if (s == "0") return out;
    const std::string sym = basis_symbol(basis);
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(" + ", pos);
        std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        QPoly coeff = QPoly::constant(Rational(1));
        size_t star = term.rfind("*" + sym + "[");
        std::string key = term;
        if (star != std::string::npos) {
            std::string cs = term.substr(0, star);
            if (cs.size() >= 2 && cs.front() == '(' && cs.back() == ')') cs = cs.substr(1, cs.size() - 2);
            coeff = parse_qpoly(cs);
            key = term.substr(star + 1);
        }
        if (key.rfind(sym + "[", 0) != 0)
            throw std::invalid_argument("parse_symfunc: malformed term '" + term + "'");
        out.add(Partition::from_string(key.substr(sym.size())), coeff);
        pos = (next == std::string::npos) ? s.size() : next + 3;
    }
    return out;
}

}  // namespace orbitharm
