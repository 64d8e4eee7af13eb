#include "doctest.h"

#include <random>
#include <sstream>

#include "orbitharm/monomial.hpp"
#include "orbitharm/multipoly.hpp"
#include "orbitharm/poly_io.hpp"
#include "orbitharm/rational.hpp"

#include "test_util.hpp"

using namespace orbitharm;

namespace {

MultiPoly P(const std::string& s, int nvars) { return parse_poly(s, nvars); }

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, -2).denominator() == 2);
    CHECK(Rational(3, 6).to_string() == "1/2");
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational::from_string("-7/21") == Rational(-1, 3));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(1, 3).pow(3) == Rational(1, 27));
    CHECK(Rational(-2, 3).pow(2) == Rational(4, 9));
}

TEST_CASE("rational round-trips on randomized big inputs") {
    std::mt19937 rng(20240801);
    std::uniform_int_distribution<int> digit('0', '9');
    auto big = [&](int len) {
        std::string s = "1";
        for (int i = 0; i < len; ++i) s += static_cast<char>(digit(rng));
        return s;
    };
    for (int trial = 0; trial < 200; ++trial) {
        Rational a = Rational::from_string(big(30) + "/" + big(25));
        Rational c = Rational::from_string("-" + big(28) + "/" + big(30));
        CHECK((a + c) - c == a);
        CHECK((a * c) / c == a);
    }
}

TEST_CASE("grevlex comparison") {
    Monomial x1 = Monomial::variable(2, 0);
    Monomial x2 = Monomial::variable(2, 1);
    MonomialOrder ord;
    CHECK(compare_monomials(x1, x2, ord) == std::strong_ordering::greater);
    CHECK(compare_monomials(x1, x1.times(x1), ord) == std::strong_ordering::less);
    CHECK(compare_monomials(x1, x1, ord) == std::strong_ordering::equal);

    // n=3: equal degree, so reversed exponent vectors decide: x2^2 > x1*x3
    Monomial x1x3({1, 0, 1});
    Monomial x2sq({0, 2, 0});
    CHECK(compare_monomials(x1x3, x2sq, ord) == std::strong_ordering::less);

    CHECK_THROWS_AS(grevlex_cmp(x1, Monomial::variable(3, 0)), std::invalid_argument);
}

TEST_CASE("grevlex is degree-compatible on random monomials") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        Monomial a = testutil::random_monomial(rng, 4, 5);
        Monomial b = testutil::random_monomial(rng, 4, 5);
        if (a.degree() < b.degree()) CHECK(grevlex_cmp(a, b) < 0);
        if (grevlex_cmp(a, b) == 0) CHECK(a == b);
    }
}

TEST_CASE("degree_component picks out exact total degree") {
    CHECK(P("x1^2 + x1 + 1", 2).degree_component(1) == P("x1", 2));
    CHECK(MultiPoly::zero(2).degree_component(3).is_zero());
    // (x1+x2-1)*x1 expanded by hand: x1^2 + x1*x2 - x1
    MultiPoly f = P("x1 + x2 - 1", 2) * P("x1", 2);
    CHECK(f == P("x1^2 + x1*x2 - x1", 2));
    CHECK(f.degree_component(2) == P("x1^2 + x1*x2", 2));
}

TEST_CASE("top_form") {
    CHECK(P("x1 + x2 - 1", 2).top_form() == P("x1 + x2", 2));
    CHECK(P("x1*x2", 2).top_form() == P("x1*x2", 2));
    CHECK(P("x2^2 - x2", 2).top_form() == P("x2^2", 2));
    CHECK_THROWS_WITH_AS(MultiPoly::zero(2).top_form(), "top form of zero undefined",
                         std::invalid_argument);
}

TEST_CASE("top form properties on random polynomials") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        MultiPoly f = testutil::random_nonzero_poly(rng, 3);
        MultiPoly g = testutil::random_nonzero_poly(rng, 3);
        CHECK(f.top_form().is_homogeneous());
        CHECK(f.top_form().degree() == f.degree());
        CHECK((f * g).top_form() == f.top_form() * g.top_form());
        // leading monomial of f equals that of its top form
        CHECK(f.leading_monomial() == f.top_form().leading_monomial());
    }
}

TEST_CASE("apply_permutation") {
    std::vector<int> swap01{1, 0};
    CHECK(P("x1", 2).apply_permutation(swap01) == P("x2", 2));
    CHECK(P("x1 + x2", 2).apply_permutation(swap01) == P("x1 + x2", 2));

    // 3-cycle 1->2->3->1
    std::vector<int> cyc{1, 2, 0};
    CHECK(P("x1^2*x2", 3).apply_permutation(cyc) == P("x2^2*x3", 3));

    CHECK_THROWS_AS(P("x1", 2).apply_permutation({0}), std::invalid_argument);
    CHECK_THROWS_AS(P("x1", 2).apply_permutation({0, 0}), std::invalid_argument);
}

TEST_CASE("permutation action composes and is linear") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        MultiPoly f = testutil::random_poly(rng, 4);
        MultiPoly g = testutil::random_poly(rng, 4);
        std::vector<int> u = testutil::random_permutation(rng, 4);
        std::vector<int> v = testutil::random_permutation(rng, 4);
        std::vector<int> vu(4);
        for (int i = 0; i < 4; ++i) vu[static_cast<size_t>(i)] = v[static_cast<size_t>(u[static_cast<size_t>(i)])];
        CHECK(f.apply_permutation(u).apply_permutation(v) == f.apply_permutation(vu));
        CHECK((f + g).apply_permutation(u) == f.apply_permutation(u) + g.apply_permutation(u));
        if (!f.is_zero()) CHECK(f.apply_permutation(u).degree() == f.degree());
    }
}

TEST_CASE("polynomial text grammar round-trips") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 150; ++trial) {
        MultiPoly f = testutil::random_poly(rng, 3);
        CHECK(parse_poly(poly_to_string(f), 3) == f);
    }
}

TEST_CASE("polynomial parser accepts whitespace, rejects juxtaposition") {
    CHECK(P("  3/2 * x1 ^ 2 * x2  -  x2 ", 2) == P("3/2*x1^2*x2 - x2", 2));
    CHECK(P("-x1 + 2", 2) == P("2 - x1", 2));
    CHECK_THROWS_AS(P("2x1", 2), std::invalid_argument);
    CHECK_THROWS_AS(P("x1x2", 2), std::invalid_argument);
    CHECK_THROWS_AS(P("x3", 2), std::invalid_argument);
    CHECK_THROWS_AS(P("", 2), std::invalid_argument);
    CHECK_THROWS_AS(P("x1 +", 2), std::invalid_argument);
    // column information is carried in the message
    try {
        P("x1 @ x2", 2);
        CHECK(false);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("1:4") != std::string::npos);
    }
}

TEST_CASE("term storage keeps leading term at the front") {
    MultiPoly f = P("x2^2 - x2 + x1 + 1", 2);
    CHECK(f.leading_monomial() == Monomial({0, 2}));
    CHECK(f.terms().begin()->first == f.leading_monomial());
    CHECK(f.coeff(Monomial::one(2)) == Rational(1));
    CHECK(f.coeff(Monomial({5, 0})) == Rational(0));
}

TEST_CASE("evaluation is exact") {
    MultiPoly f = P("x1^2*x2 - 1/2", 2);
    CHECK(f.evaluate({Rational(1, 2), Rational(2)}) == Rational(0));
    CHECK(f.evaluate({Rational(3), Rational(1, 3)}) == Rational(5, 2));
}

TEST_CASE("elementary symmetric polynomials") {
    CHECK(elementary_symmetric(3, 1, {0, 1, 2}) == P("x1 + x2 + x3", 3));
    CHECK(elementary_symmetric(3, 2, {0, 1, 2}) == P("x1*x2 + x1*x3 + x2*x3", 3));
    CHECK(elementary_symmetric(3, 2, {0, 2}) == P("x1*x3", 3));
    CHECK(coordinate_sum_poly(2) == P("x1 + x2", 2));
}
