#pragma once

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "orbitharm/rational.hpp"

namespace orbitharm {

/// Sparse polynomial in the grading variable q with rational coefficients.
/// Intermediate basis solves pass through rationals; integrality and
/// nonnegativity are asserted at module boundaries, not baked into the type.
class QPoly {
public:
    QPoly() = default;

    static QPoly constant(Rational c) {
        QPoly p;
        p.add(0, std::move(c));
        return p;
    }

    static QPoly q_power(int k, Rational c = Rational(1)) {
        QPoly p;
        p.add(k, std::move(c));
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
    const std::map<int, Rational>& coeffs() const { return c_; }

    Rational coeff(int k) const {
        auto it = c_.find(k);
        return it == c_.end() ? Rational(0) : it->second;
    }

    void add(int k, const Rational& c) {
        if (c.is_zero()) return;
        if (k < 0) throw std::invalid_argument("QPoly: negative exponent");
        auto it = c_.find(k);
        if (it == c_.end()) {
            c_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    QPoly& operator+=(const QPoly& o) {
        for (const auto& [k, c] : o.c_) add(k, c);
        return *this;
    }
    QPoly& operator-=(const QPoly& o) {
        for (const auto& [k, c] : o.c_) add(k, -c);
        return *this;
    }
    friend QPoly operator+(QPoly a, const QPoly& b) { a += b; return a; }
    friend QPoly operator-(QPoly a, const QPoly& b) { a -= b; return a; }
    QPoly operator-() const {
        QPoly r;
        for (const auto& [k, c] : c_) r.c_.emplace(k, -c);
        return r;
    }

    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        QPoly r;
        for (const auto& [ka, ca] : a.c_)
            for (const auto& [kb, cb] : b.c_) r.add(ka + kb, ca * cb);
        return r;
    }

    friend QPoly operator*(const Rational& s, const QPoly& p) {
        QPoly r;
        if (s.is_zero()) return r;
        for (const auto& [k, c] : p.c_) r.c_.emplace(k, s * c);
        return r;
    }

    /// Multiplication by q^k.
    QPoly shifted(int k) const {
        QPoly r;
        for (const auto& [e, c] : c_) {
            if (e + k < 0) throw std::domain_error("QPoly: shift below q^0");
            r.c_.emplace(e + k, c);
        }
        return r;
    }

    /// Exact division by q^k; throws when some term has exponent < k.
    QPoly divided_by_q_power(int k) const { return shifted(-k); }

    /// q^N * p(1/q); requires deg(p) <= N.
    QPoly reversed(int N) const {
        QPoly r;
        for (const auto& [e, c] : c_) {
            if (e > N) throw std::domain_error("QPoly: reversal bound below degree");
            r.c_.emplace(N - e, c);
        }
        return r;
    }

    Rational evaluate_at_one() const {
        Rational s(0);
        for (const auto& [k, c] : c_) s += c;
        return s;
    }

    bool has_integer_coeffs() const {
        for (const auto& [k, c] : c_)
            if (!c.is_integer()) return false;
        return true;
    }

    bool has_nonnegative_integer_coeffs() const {
        for (const auto& [k, c] : c_)
            if (!c.is_integer() || c.sign() < 0) return false;
        return true;
    }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return a.c_ != b.c_; }

    /// Compact text form, e.g. "q^2-q" or "3*q^2+2*q+1". Descending powers by
    /// default; ascending matches the character-table wire format.
    std::string to_string(bool ascending = false) const {
        if (c_.empty()) return "0";
        std::string out;
        auto emit = [&](int k, const Rational& c) {
            std::string mag;
            Rational a = c.sign() < 0 ? -c : c;
            if (k == 0) {
                mag = a.to_string();
            } else {
                std::string qs = k == 1 ? "q" : "q^" + std::to_string(k);
                mag = a.is_one() ? qs : a.to_string() + "*" + qs;
            }
            if (out.empty()) {
                out = (c.sign() < 0 ? "-" : "") + mag;
            } else {
                out += (c.sign() < 0 ? "-" : "+") + mag;
            }
        };
        if (ascending) {
            for (const auto& [k, c] : c_) emit(k, c);
        } else {
            for (auto it = c_.rbegin(); it != c_.rend(); ++it) emit(it->first, it->second);
        }
        return out;
    }

private:
    std::map<int, Rational> c_;
};

/// Parses sums of c, q^k, and c*q^k terms in any order, e.g. "1+2*q+3*q^2",
/// "q^2-q", "-1/2*q+3".
inline QPoly parse_qpoly(const std::string& s) {
    QPoly p;
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    auto fail = [&](const std::string& msg) -> void {
        throw std::invalid_argument("qpoly parse error at " + std::to_string(i + 1) + ": " + msg);
    };
    skip_ws();
    if (i == s.size()) fail("empty input");
    bool first = true;
    while (true) {
        skip_ws();
        if (i == s.size()) break;
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        skip_ws();
        Rational coef(1);
        bool have_coef = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            std::string num = s.substr(i, j - i);
            i = j;
            skip_ws();
            if (i < s.size() && s[i] == '/') {
                ++i;
                skip_ws();
                size_t k = i;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                if (k == i) fail("expected denominator");
                num += "/" + s.substr(i, k - i);
                i = k;
            }
            coef = Rational::from_string(num);
            have_coef = true;
        }
        int expnt = 0;
        bool have_q = false;
        skip_ws();
        if (have_coef && i < s.size() && s[i] == '*') {
            ++i;
            skip_ws();
            if (i >= s.size() || s[i] != 'q') fail("expected q after '*'");
        }
        if (i < s.size() && s[i] == 'q') {
            ++i;
            have_q = true;
            expnt = 1;
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip_ws();
                size_t j = i;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                if (j == i) fail("expected exponent");
                expnt = std::stoi(s.substr(i, j - i));
                i = j;
            }
        }
        if (!have_coef && !have_q) fail("expected term");
        p.add(expnt, sign < 0 ? -coef : coef);
        first = false;
    }
    return p;
}

}  // namespace orbitharm
