#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitharm/multipoly.hpp"

namespace orbitharm {

/// Renders a polynomial in the CLI text grammar: terms descending in grevlex,
/// rational coefficients as p/q, explicit '*' between factors. Examples:
/// "x1 + x2 - 1", "x2^2 - x2", "3/2*x1^2*x2".
inline std::string poly_to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        Rational a = c.sign() < 0 ? -c : c;
        std::string body;
        if (m.is_one()) {
            body = a.to_string();
        } else if (a.is_one()) {
            body = monomial_to_string(m);
        } else {
            body = a.to_string() + "*" + monomial_to_string(m);
        }
        if (out.empty()) {
            out = (c.sign() < 0 ? "-" : "") + body;
        } else {
            out += (c.sign() < 0 ? " - " : " + ") + body;
        }
    }
    return out;
}

namespace detail {

class PolyParser {
public:
    PolyParser(const std::string& src, int nvars) : s_(src), nvars_(nvars) {}

    MultiPoly run() {
        MultiPoly total(nvars_);
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (true) {
            skip_ws();
            if (at_end()) break;
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -1;
                ++i_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-' between terms");
            }
            auto [mon, coef] = parse_term();
            total.add_term(mon, sign < 0 ? -coef : coef);
            first = false;
        }
        return total;
    }

private:
    bool at_end() const { return i_ >= s_.size(); }
    char peek() const { return s_[i_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++i_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("polynomial parse error at 1:" + std::to_string(i_ + 1) + ": " + msg);
    }

    std::string read_digits() {
        size_t j = i_;
        while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
        if (j == i_) fail("expected digits");
        std::string d = s_.substr(i_, j - i_);
        i_ = j;
        return d;
    }

    // factor := rational | 'x' INT ['^' INT]
    // term   := factor ('*' factor)*
    std::pair<Monomial, Rational> parse_term() {
        std::vector<int> exps(static_cast<size_t>(nvars_), 0);
        Rational coef(1);
        bool more = true;
        while (more) {
            skip_ws();
            if (at_end()) fail("unexpected end of term");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                std::string num = read_digits();
                skip_ws();
                if (!at_end() && peek() == '/') {
                    ++i_;
                    skip_ws();
                    num += "/" + read_digits();
                }
                coef *= Rational::from_string(num);
            } else if (peek() == 'x') {
                ++i_;
                if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                    fail("expected variable index after 'x'");
                int idx = std::stoi(read_digits());
                if (idx < 1 || idx > nvars_)
                    fail("variable x" + std::to_string(idx) + " out of range (n=" + std::to_string(nvars_) + ")");
                int e = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    ++i_;
                    skip_ws();
                    e = std::stoi(read_digits());
                    if (e < 0) fail("negative exponent");
                }
                exps[static_cast<size_t>(idx - 1)] += e;
            } else {
                fail("expected coefficient or variable");
            }
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++i_;
            } else {
                more = false;  // juxtaposition is not accepted; next must be +/-/end
            }
        }
        return {Monomial(std::move(exps)), coef};
    }

    const std::string& s_;
    int nvars_;
    size_t i_ = 0;
};

}  // namespace detail

/// Parses the CLI polynomial grammar: sums of terms c*x1^a1*...*xn^an with
/// rational c. Arbitrary whitespace is allowed; juxtaposition without '*' is
/// rejected.
inline MultiPoly parse_poly(const std::string& s, int nvars) {
    return detail::PolyParser(s, nvars).run();
}

}  // namespace orbitharm
