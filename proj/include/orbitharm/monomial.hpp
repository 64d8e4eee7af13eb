#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitharm {

/// Power product x_1^e_1 * ... * x_n^e_n. The exponent vector length is the
/// ambient variable count and is fixed for the lifetime of the value.
class Monomial {
public:
    explicit Monomial(int nvars) : e_(static_cast<size_t>(check_nvars(nvars)), 0), deg_(0) {}

    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
        for (int x : e_)
            if (x < 0) throw std::invalid_argument("Monomial: negative exponent");
        deg_ = std::accumulate(e_.begin(), e_.end(), 0);
    }

    static Monomial one(int nvars) { return Monomial(nvars); }

    /// x_{i+1} as a monomial (i is 0-based).
    static Monomial variable(int nvars, int i) {
        Monomial m(nvars);
        m.e_.at(static_cast<size_t>(i)) = 1;
        m.deg_ = 1;
        return m;
    }

    int nvars() const { return static_cast<int>(e_.size()); }
    int degree() const { return deg_; }
    int exponent(int i) const { return e_.at(static_cast<size_t>(i)); }
    const std::vector<int>& exponents() const { return e_; }
    bool is_one() const { return deg_ == 0; }

    Monomial times(const Monomial& o) const {
        require_same_nvars(o);
        Monomial r(*this);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        r.deg_ = deg_ + o.deg_;
        return r;
    }

    bool divides(const Monomial& o) const {
        require_same_nvars(o);
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    /// Exact quotient *this / o; throws when o does not divide *this.
    Monomial divide(const Monomial& o) const {
        require_same_nvars(o);
        Monomial r(*this);
        for (size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] -= o.e_[i];
            if (r.e_[i] < 0) throw std::invalid_argument("Monomial: non-exact division");
        }
        r.deg_ = deg_ - o.deg_;
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        a.require_same_nvars(b);
        std::vector<int> e(a.e_.size());
        for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.e_[i], b.e_[i]);
        return Monomial(std::move(e));
    }

    /// Substitution x_i -> x_{w(i)} with w a 0-based permutation.
    Monomial permuted(const std::vector<int>& w) const {
        if (static_cast<int>(w.size()) != nvars())
            throw std::invalid_argument("Monomial: permutation length != nvars");
        std::vector<int> e(e_.size(), 0);
        for (size_t i = 0; i < e_.size(); ++i) e.at(static_cast<size_t>(w[i])) = e_[i];
        return Monomial(std::move(e));
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

private:
    static int check_nvars(int n) {
        if (n < 0) throw std::invalid_argument("Monomial: negative nvars");
        return n;
    }
    void require_same_nvars(const Monomial& o) const {
        if (o.nvars() != nvars()) throw std::invalid_argument("Monomial: nvars mismatch");
    }

    std::vector<int> e_;
    int deg_;
};

/// Degree-reverse-lexicographic order with variable priority x_1 > ... > x_n.
/// Degree-compatible, so leading monomials survive passage to top forms.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("grevlex_cmp: nvars mismatch");
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.nvars() - 1; i >= 0; --i) {
        int d = a.exponent(i) - b.exponent(i);
        if (d != 0) return d > 0 ? -1 : 1;  // larger trailing exponent loses
    }
    return 0;
}

/// Monomial order descriptor. Only grevlex is implemented; the field exists so
/// that basis objects carry their order and mismatches can be detected.
struct MonomialOrder {
    enum class Kind { grevlex };
    Kind kind = Kind::grevlex;

    bool degree_compatible() const { return true; }
    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) { return a.kind == b.kind; }
    friend bool operator!=(const MonomialOrder& a, const MonomialOrder& b) { return a.kind != b.kind; }
};

inline std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder&) {
    int c = grevlex_cmp(a, b);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_cmp(a, b) > 0; }
};

struct GrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_cmp(a, b) < 0; }
};

inline std::string monomial_to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string s;
    for (int i = 0; i < m.nvars(); ++i) {
        int e = m.exponent(i);
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

}  // namespace orbitharm
