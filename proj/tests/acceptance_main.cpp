// Acceptance suite: exercises the full pipeline end to end and prints one
// pass/fail line per criterion. Everything is exact arithmetic, so every
// comparison below is equality — there are no tolerances to tune.
//
// Usage: acceptance [--slow]   (--slow adds the n=5 single-orbit sweep)

#include <chrono>
#include <cstring>
#include <exception>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "orbitharm/report.hpp"

#include "oracles.hpp"

using namespace orbitharm;

namespace {

int failures = 0;

void criterion(int id, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << ". " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++failures;
}

QPoly qp(const std::string& s) { return parse_qpoly(s); }

// --- criterion 1: the equal-sums example, bit-exact -------------------------

bool equal_sums_example() {
    RunReport r = cmd_frob(parse_point_list("0,0,4;1,1,2"));
    SymFuncExpr expected_s(3, Basis::s);
    expected_s.add(Partition({3}), qp("q^2+1"));
    expected_s.add(Partition({2, 1}), qp("q^2+q"));
    SymFuncExpr expected_h(3, Basis::Htilde);
    expected_h.add(Partition({2, 1}), qp("q+1"));
    expected_h.add(Partition({3}), qp("q^2-q"));
    return r.frob_s.has_value() && *r.frob_s == expected_s && r.frob_H.has_value() &&
           *r.frob_H == expected_h && r.hilbert == std::vector<std::int64_t>{1, 2, 3};
}

// --- criterion 2: single-orbit sweep ----------------------------------------

bool single_orbit_sweep(const std::vector<int>& ns) {
    for (int n : ns)
        if (!cmd_verify_gp(n).all_pass()) return false;
    return true;
}

// --- criteria 3 and 4: two-orbit sweep and the ideal lemma suite -------------

struct PairInstance {
    Partition lam, mu;
    Point p, q;
};

std::vector<PairInstance> comparable_pairs(int n) {
    std::vector<PairInstance> out;
    std::vector<Partition> parts = partitions_of(n);
    for (const Partition& lam : parts) {
        for (const Partition& mu : parts) {
            if (lam == mu || !dominance_leq(lam, mu)) continue;
            Point p = canonical_point(lam);
            // shift mu's coordinate values until the sums differ
            for (long shift = 0;; ++shift) {
                std::vector<Rational> c;
                for (int k = 0; k < mu.num_parts(); ++k)
                    for (int j = 0; j < mu.part(k); ++j) c.emplace_back(shift + k);
                Point q(std::move(c));
                if (!(q.coordinate_sum() == p.coordinate_sum())) {
                    out.push_back(PairInstance{lam, mu, p, q});
                    break;
                }
            }
        }
    }
    return out;
}

bool two_orbit_sweep(const std::vector<PairInstance>& instances) {
    for (const PairInstance& inst : instances) {
        OrbitPipeline whole = run_orbit_pipeline({inst.p, inst.q});
        OrbitPipeline first = run_orbit_pipeline({inst.p});
        OrbitPipeline second = run_orbit_pipeline({inst.q});
        SymFuncExpr expected = htilde_in_schur(inst.lam) + QPoly::q_power(1) * htilde_in_schur(inst.mu);
        if (whole.frob_s != expected) return false;
        QPoly lhs, rhs;
        for (size_t d = 0; d < whole.hilbert.size(); ++d)
            lhs.add(static_cast<int>(d), Rational(static_cast<long>(whole.hilbert[d])));
        for (size_t d = 0; d < first.hilbert.size(); ++d)
            rhs.add(static_cast<int>(d), Rational(static_cast<long>(first.hilbert[d])));
        for (size_t d = 0; d < second.hilbert.size(); ++d)
            rhs.add(static_cast<int>(d) + 1, Rational(static_cast<long>(second.hilbert[d])));
        if (lhs != rhs) return false;
    }
    return true;
}

MultiPoly random_homogeneous_member(const GroebnerBasis& T, std::mt19937& rng) {
    int mindeg = T.generator(0).degree();
    for (const auto& g : T.generators()) mindeg = std::min(mindeg, g.degree());
    std::uniform_int_distribution<int> bump(0, 2);
    std::uniform_int_distribution<int> coefnum(-3, 3);
    std::uniform_int_distribution<int> pickvar(0, T.nvars() - 1);
    for (;;) {
        int d = mindeg + bump(rng);
        MultiPoly h(T.nvars());
        for (const auto& g : T.generators()) {
            if (g.degree() > d) continue;
            Rational c(coefnum(rng));
            if (c.is_zero()) continue;
            std::vector<int> e(static_cast<size_t>(T.nvars()), 0);
            for (int k = 0; k < d - g.degree(); ++k) ++e[static_cast<size_t>(pickvar(rng))];
            h += c * (MultiPoly::term(Monomial(std::move(e)), Rational(1)) * g);
        }
        if (!h.is_zero()) return h;
    }
}

bool lemma_suite(const std::vector<PairInstance>& instances) {
    std::mt19937 rng(987654321);
    for (const PairInstance& inst : instances) {
        const int n = inst.p.nvars();
        PointSet Y = PointSet::orbit_union({inst.p, inst.q});
        GroebnerBasis IY = vanishing_ideal(Y);
        GroebnerBasis TY = associated_graded_ideal(IY);
        MultiPoly e1 = coordinate_sum_poly(n);

        // product containment: T(<Q>) * (x1+...+xn) inside T(Y)
        GroebnerBasis TQ = associated_graded_ideal(vanishing_ideal(PointSet::orbit_union({inst.q})));
        for (const auto& g : TQ.generators())
            if (!ideal_contains(g * e1, TY)) return false;

        // sum equality: T(<P>) = T(Y) + (x1+...+xn)
        GroebnerBasis TP = associated_graded_ideal(vanishing_ideal(PointSet::orbit_union({inst.p})));
        if (!ideal_equal(TP, ideal_sum(TY, {e1}))) return false;

        // top-form lifts: 100 randomized homogeneous members of T(Y)
        for (int trial = 0; trial < 100; ++trial) {
            MultiPoly h = random_homogeneous_member(TY, rng);
            MultiPoly f = lift_top_form(h, IY, TY);
            if (f.top_form() != h) return false;
            if (f.degree() != h.degree()) return false;
            if (!ideal_contains(f, IY)) return false;
        }
    }
    return true;
}

// --- criterion 5: property suites -------------------------------------------

bool character_orthogonality() {
    for (int n = 1; n <= 6; ++n) {
        std::vector<Partition> parts = partitions_of(n);
        for (const Partition& lam : parts)
            for (const Partition& nu : parts) {
                Rational s(0);
                for (const Partition& mu : parts)
                    s += Rational(static_cast<long>(mn_character(lam, mu))) *
                         Rational(static_cast<long>(mn_character(nu, mu))) / z_of(mu);
                if (!(s == (lam == nu ? Rational(1) : Rational(0)))) return false;
            }
    }
    return true;
}

bool kostka_unitriangularity() {
    for (int n = 1; n <= 6; ++n) {
        std::vector<Partition> parts = partitions_of(n);
        for (const Partition& lam : parts)
            for (const Partition& mu : parts) {
                QPoly k = kostka_foulkes(lam, mu);
                if (lam == mu && !(k == qp("1"))) return false;
                if (!dominance_leq(mu, lam) && !k.is_zero()) return false;
            }
    }
    return true;
}

bool randomized_dimension_counts() {
    std::mt19937 rng(123456);
    // small coordinate pools force repeated values, keeping orbits desk-sized
    const std::vector<Rational> pool = {Rational(0), Rational(1), Rational(2), Rational(1, 2),
                                        Rational(-1)};
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        size_t pool_size = std::max<size_t>(2, static_cast<size_t>(n) - 1);
        int nseeds = 1 + static_cast<int>(rng() % 2);
        std::vector<Point> seeds;
        for (int s = 0; s < nseeds; ++s) {
            std::vector<Rational> c;
            for (int i = 0; i < n; ++i) c.push_back(pool[rng() % pool_size]);
            seeds.emplace_back(std::move(c));
        }
        PointSet Y = PointSet::orbit_union(seeds);
        GroebnerBasis T = associated_graded_ideal(vanishing_ideal(Y));
        std::int64_t total = 0;
        for (auto d : hilbert_function(T)) total += d;
        if (total != static_cast<std::int64_t>(Y.size())) return false;
        // every computed Frobenius must be Schur-positive over Z[q];
        // frobenius_schur throws if not
        try {
            frobenius_schur(T);
        } catch (const std::exception&) {
            return false;
        }
    }
    return true;
}

bool htilde_round_trip() {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& mu : partitions_of(n)) {
            SymFuncExpr unit(n, Basis::Htilde);
            unit.add(mu, qp("1"));
            if (s_to_htilde(htilde_in_schur(mu)) != unit) return false;
        }
    return true;
}

// --- criterion 6: coinvariant sanity -----------------------------------------

bool coinvariant_sanity() {
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> ones(static_cast<size_t>(n), 1);
        Partition column(std::move(ones));
        GroebnerBasis G = buchberger(tanisaki_generators(column));
        std::vector<std::int64_t> h = hilbert_function(G);
        QPoly series;
        for (size_t d = 0; d < h.size(); ++d) series.add(static_cast<int>(d), Rational(static_cast<long>(h[d])));
        if (series != oracles::q_factorial(n)) return false;
        Rational total(0);
        for (auto d : h) total += Rational(static_cast<long>(d));
        if (!(total == Rational::factorial(static_cast<unsigned long>(n)))) return false;
        // the Hall-Littlewood side at q=1 carries the same dimension
        Rational dim(0);
        for (const auto& [lam, c] : htilde_in_schur(column).coeffs())
            dim += c.evaluate_at_one() * Rational(static_cast<long>(syt_count(lam)));
        if (!(dim == Rational::factorial(static_cast<unsigned long>(n)))) return false;
    }
    return true;
}

template <typename Fn>
bool guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        std::cerr << "  exception: " << e.what() << "\n";
        return false;
    }
}

}  // namespace

int main(int argc, char** argv) {
    bool slow = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--slow") == 0) slow = true;

    auto t0 = std::chrono::steady_clock::now();

    criterion(1, "equal-sums example: s- and H-expansions, bit-exact", guarded(equal_sums_example));

    std::vector<int> ns = {2, 3, 4};
    if (slow) ns.push_back(5);
    criterion(2, "single-orbit sweep: top-form ideal = Tanisaki ideal, Frob_q = H[lambda]",
              guarded([&] { return single_orbit_sweep(ns); }),
              slow ? "n=2..5" : "n=2..4");

    std::vector<PairInstance> instances;
    for (int n : {2, 3, 4})
        for (const PairInstance& inst : comparable_pairs(n)) instances.push_back(inst);
    criterion(3, "two-orbit sweep: Frob_q = H[lambda] + q*H[mu] and Hilbert additivity",
              guarded([&] { return two_orbit_sweep(instances); }),
              std::to_string(instances.size()) + " comparable pairs, n=2..4");

    criterion(4, "ideal lemma suite: product containment, sum equality, 100 top-form lifts per pair",
              guarded([&] { return lemma_suite(instances); }));

    bool prop = guarded(character_orthogonality) && guarded(kostka_unitriangularity) &&
                guarded(randomized_dimension_counts) && guarded(htilde_round_trip);
    criterion(5, "property suites: orthogonality, unitriangularity, 50 randomized dimension counts, "
                 "Schur positivity, basis round-trip", prop);

    criterion(6, "coinvariant sanity: Hilbert series [n]_q! and dimension n! for n <= 5",
              guarded(coinvariant_sanity));

    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria FAILED")
              << " in " << dt << "s" << std::endl;
    return failures == 0 ? 0 : 1;
}
