#include "doctest.h"

#include <random>
#include <thread>

#include "orbitharm/frobenius.hpp"
#include "orbitharm/orbit.hpp"
#include "orbitharm/poly_io.hpp"
#include "orbitharm/report.hpp"

#include "test_util.hpp"

using namespace orbitharm;

namespace {

QPoly qp(const std::string& s) { return parse_qpoly(s); }

Point pt(std::initializer_list<long> xs) {
    std::vector<Rational> c;
    for (long x : xs) c.emplace_back(x);
    return Point(std::move(c));
}

GroebnerBasis paper_example_quotient() {
    return associated_graded_ideal(
        vanishing_ideal(PointSet::orbit_union({pt({0, 0, 4}), pt({1, 1, 2})})));
}

/// Trace computed with an arbitrary permutation w, bypassing the canonical
/// class representative; used to check the class-function property.
QPoly trace_with_permutation(const GroebnerBasis& T, const std::vector<int>& w) {
    QPoly tr;
    for (int d = 0;; ++d) {
        std::vector<Monomial> basis = standard_monomials(T, d);
        if (basis.empty()) break;
        Rational t(0);
        for (const Monomial& b : basis)
            t += reduce(MultiPoly::term(b.permuted(w), Rational(1)), T.generators()).coeff(b);
        if (!t.is_zero()) tr.add(d, t);
    }
    return tr;
}

Partition cycle_type_of(const std::vector<int>& w) {
    std::vector<bool> seen(w.size(), false);
    std::vector<int> cycles;
    for (size_t i = 0; i < w.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(w[j]);
            ++len;
        }
        cycles.push_back(len);
    }
    std::sort(cycles.begin(), cycles.end(), std::greater<int>());
    return Partition(std::move(cycles));
}

}  // namespace

TEST_CASE("graded_trace worked examples") {
    GroebnerBasis T = buchberger({parse_poly("x1 + x2", 2), parse_poly("x2^2", 2)});

    SUBCASE("identity trace is the Hilbert series") {
        CHECK(graded_trace(T, Partition({1, 1})) == qp("q+1"));
    }
    SUBCASE("transposition negates the degree-1 slice") {
        CHECK(graded_trace(T, Partition({2})) == qp("1") - qp("q"));
    }
    SUBCASE("paper example identity column is 1+2q+3q^2") {
        CHECK(graded_trace(paper_example_quotient(), Partition({1, 1, 1})) == qp("3*q^2+2*q+1"));
    }
    SUBCASE("input validation") {
        CHECK_THROWS_AS(graded_trace(buchberger({parse_poly("x1 - 1", 2)}), Partition({2})),
                        std::invalid_argument);
        CHECK_THROWS_AS(graded_trace(T, Partition({3})), std::invalid_argument);
    }
}

TEST_CASE("graded_trace is a class function") {
    std::mt19937 rng(909);
    GroebnerBasis T = paper_example_quotient();
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<int> w = testutil::random_permutation(rng, 3);
        CHECK(trace_with_permutation(T, w) == graded_trace(T, cycle_type_of(w)));
    }
}

TEST_CASE("graded character table invariants") {
    GradedCharacterTable table = GradedCharacterTable::from_quotient(paper_example_quotient());
    CHECK(table.hilbert_series() == qp("3*q^2+2*q+1"));
    // wire format matches the published grammar
    Json j = character_table_to_json(table);
    CHECK(j.at("n") == 3);
    CHECK(j.at("classes").at("[1,1,1]") == "1+2*q+3*q^2");
    CHECK(parse_qpoly(j.at("classes").at("[2,1]").get<std::string>()) == table.trace(Partition({2, 1})));
}

TEST_CASE("graded_frobenius worked examples") {
    SUBCASE("a single reduced point carries the trivial representation") {
        for (int n = 2; n <= 4; ++n) {
            std::vector<MultiPoly> vars;
            for (int i = 0; i < n; ++i) vars.push_back(MultiPoly::variable(n, i));
            GroebnerBasis T = buchberger(vars);
            SymFuncExpr frob = graded_frobenius(T);
            for (const Partition& mu : partitions_of(n))
                CHECK(frob.coeff(mu) == z_of(mu).inverse() * QPoly::constant(Rational(1)));
            SymFuncExpr s = p_to_s(frob);
            SymFuncExpr expected(n, Basis::s);
            expected.add(Partition({n}), qp("1"));
            CHECK(s == expected);
        }
    }
    SUBCASE("S_2 coinvariants in the p basis") {
        GroebnerBasis T = buchberger({parse_poly("x1 + x2", 2), parse_poly("x2^2", 2)});
        SymFuncExpr frob = graded_frobenius(T);
        CHECK(frob.coeff(Partition({1, 1})) == Rational(1, 2) * qp("q+1"));
        CHECK(frob.coeff(Partition({2})) == Rational(1, 2) * (qp("1") - qp("q")));
    }
    SUBCASE("paper example in the s basis") {
        SymFuncExpr s = frobenius_schur(paper_example_quotient());
        CHECK(s.coeff(Partition({3})) == qp("q^2+1"));
        CHECK(s.coeff(Partition({2, 1})) == qp("q^2+q"));
        CHECK(s.coeff(Partition({1, 1, 1})).is_zero());
    }
}

TEST_CASE("q=1 specialization counts points") {
    std::vector<std::vector<Point>> cases = {
        {pt({0, 0, 4}), pt({1, 1, 2})}, {pt({0, 1, 2})}, {pt({0, 0, 1}), pt({5, 5, 5})}, {pt({4, 4})}};
    for (const auto& seeds : cases) {
        PointSet Y = PointSet::orbit_union(seeds);
        SymFuncExpr s = frobenius_schur(associated_graded_ideal(vanishing_ideal(Y)));
        // total dimension = sum over lam of coeff(1) * f^lam
        Rational total(0);
        for (const auto& [lam, c] : s.coeffs())
            total += c.evaluate_at_one() * Rational(static_cast<long>(syt_count(lam)));
        CHECK(total == Rational(static_cast<long>(Y.size())));
    }
}

TEST_CASE("degree-0 slice of a single orbit is the trivial representation") {
    for (const Point& p : {pt({0, 1, 2}), pt({0, 0, 3}), pt({2, 2})}) {
        SymFuncExpr s = frobenius_schur(associated_graded_ideal(vanishing_ideal(PointSet::orbit_union({p}))));
        int n = p.nvars();
        for (const auto& [lam, c] : s.coeffs())
            CHECK(c.coeff(0) == (lam == Partition({n}) ? Rational(1) : Rational(0)));
    }
}

TEST_CASE("independent pipelines can run on concurrent threads") {
    SymFuncExpr a(3, Basis::s), b(4, Basis::s);
    std::thread t1([&] { a = frobenius_schur(paper_example_quotient()); });
    std::thread t2([&] {
        b = frobenius_schur(
            associated_graded_ideal(vanishing_ideal(PointSet::orbit_union({pt({0, 0, 1, 1})}))));
    });
    t1.join();
    t2.join();
    CHECK(a.coeff(Partition({3})) == qp("q^2+1"));
    CHECK(b.coeff(Partition({4})).coeff(0) == Rational(1));
}
