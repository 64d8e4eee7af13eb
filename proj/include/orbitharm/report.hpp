#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "orbitharm/frobenius.hpp"
#include "orbitharm/groebner.hpp"
#include "orbitharm/orbit.hpp"
#include "orbitharm/parallel.hpp"
#include "orbitharm/partition.hpp"
#include "orbitharm/points.hpp"
#include "orbitharm/poly_io.hpp"
#include "orbitharm/symfunc.hpp"

namespace orbitharm {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Input grammar: points separated by ';', coordinates by ',', rational
// coordinates as p/q or integers. Example: "0,0,4;1,1,2".
// ---------------------------------------------------------------------------

namespace detail {

class PointListParser {
public:
    explicit PointListParser(const std::string& s) : s_(s) {}

    std::vector<Point> run() {
        std::vector<Point> pts;
        skip_ws();
        if (at_end()) fail("empty point list");
        while (true) {
            pts.push_back(parse_point());
            skip_ws();
            if (at_end()) break;
            if (peek() != ';') fail("expected ';' between points");
            ++i_;
        }
        return pts;
    }

private:
    bool at_end() const { return i_ >= s_.size(); }
    char peek() const { return s_[i_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++i_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("point list parse error at 1:" + std::to_string(i_ + 1) + ": " + msg);
    }

    Rational parse_rational() {
        skip_ws();
        size_t start = i_;
        if (!at_end() && (peek() == '+' || peek() == '-')) ++i_;
        size_t digits = i_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
        if (i_ == digits) fail("expected a rational coordinate");
        if (!at_end() && peek() == '/') {
            ++i_;
            size_t den = i_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
            if (i_ == den) fail("expected denominator digits");
        }
        return Rational::from_string(s_.substr(start, i_ - start));
    }

    Point parse_point() {
        std::vector<Rational> coords;
        coords.push_back(parse_rational());
        while (true) {
            skip_ws();
            if (at_end() || peek() == ';') break;
            if (peek() != ',') fail("expected ',' between coordinates");
            ++i_;
            coords.push_back(parse_rational());
        }
        return Point(std::move(coords));
    }

    const std::string& s_;
    size_t i_ = 0;
};

}  // namespace detail

inline std::vector<Point> parse_point_list(const std::string& s) {
    return detail::PointListParser(s).run();
}

// ---------------------------------------------------------------------------
// Run reports
// ---------------------------------------------------------------------------

struct Verdict {
    std::string name;
    bool pass;
    std::string detail;
};

/// Result of a check evaluated outside its theorem's hypotheses: reported,
/// never asserted, and excluded from the exit status.
struct Observation {
    std::string name;
    bool holds;
    std::string detail;
};

struct GpEntry {
    Partition lam;
    bool ideal_ok;
    bool frob_ok;
    std::vector<std::int64_t> hilbert;
};

struct RunReport {
    std::string command;
    int n = 0;
    std::vector<Point> seeds;
    std::int64_t orbit_size = 0;
    std::vector<Partition> seed_partitions;
    std::vector<Rational> seed_sums;
    std::string dominance;  // "lambda<mu", "lambda=mu", "incomparable", or ""
    std::optional<bool> hyp_distinct_sums;
    std::optional<bool> hyp_comparable;
    std::optional<bool> degenerate_single_orbit;
    std::vector<std::int64_t> hilbert;
    std::optional<SymFuncExpr> frob_s;
    std::optional<SymFuncExpr> frob_H;
    std::string frob_H_note;  // set when the Htilde expansion is unavailable
    std::optional<GradedCharacterTable> characters;
    std::string which;                    // groebner subcommand variant
    std::vector<std::string> generators;  // groebner subcommand output
    std::vector<GpEntry> gp_entries;
    std::vector<Observation> observations;
    std::vector<Verdict> verdicts;
    std::optional<std::string> timestamp;

    bool all_pass() const {
        for (const auto& v : verdicts)
            if (!v.pass) return false;
        return true;
    }
};

// ---------------------------------------------------------------------------
// Pipeline
// ---------------------------------------------------------------------------

struct OrbitPipeline {
    PointSet Y;
    GroebnerBasis vanishing;
    GroebnerBasis graded;
    std::vector<std::int64_t> hilbert;
    GradedCharacterTable table;
    SymFuncExpr frob_s;
};

/// orbit_union -> vanishing_ideal -> associated_graded_ideal -> characters ->
/// Frobenius in the Schur basis.
inline OrbitPipeline run_orbit_pipeline(const std::vector<Point>& seeds, int max_n = 7) {
    PointSet Y = PointSet::orbit_union(seeds, max_n);
    GroebnerBasis I = vanishing_ideal(Y);
    GroebnerBasis T = associated_graded_ideal(I);
    std::vector<std::int64_t> h = hilbert_function(T);
    GradedCharacterTable table = GradedCharacterTable::from_quotient(T);
    SymFuncExpr fs = frobenius_schur(table);
    return OrbitPipeline{std::move(Y), std::move(I), std::move(T), std::move(h), std::move(table),
                         std::move(fs)};
}

namespace detail {

inline void fill_seed_info(RunReport& r, const std::vector<Point>& seeds) {
    r.seeds = seeds;
    r.n = seeds.front().nvars();
    for (const auto& p : seeds) {
        r.seed_partitions.push_back(p.multiplicity_partition());
        r.seed_sums.push_back(p.coordinate_sum());
    }
    if (seeds.size() == 2) {
        bool pq = dominance_leq(r.seed_partitions[0], r.seed_partitions[1]);
        bool qp = dominance_leq(r.seed_partitions[1], r.seed_partitions[0]);
        r.hyp_comparable = pq || qp;
        if (pq && qp)
            r.dominance = "lambda=mu";
        else if (pq)
            r.dominance = "lambda<mu";
        else if (qp)
            r.dominance = "mu<lambda";
        else
            r.dominance = "incomparable";
        r.hyp_distinct_sums = !(r.seed_sums[0] == r.seed_sums[1]);
    }
}

/// Attaches the Htilde expansion when it exists; the equal-sums regime can in
/// principle leave the s-expansion outside the integral Htilde span, in which
/// case the report carries the reason instead.
inline void fill_htilde(RunReport& r, const SymFuncExpr& frob_s) {
    try {
        r.frob_H = s_to_htilde(frob_s);
    } catch (const std::domain_error& e) {
        r.frob_H_note = e.what();
    }
}

inline QPoly hilbert_to_qpoly(const std::vector<std::int64_t>& dims) {
    QPoly p;
    for (size_t d = 0; d < dims.size(); ++d) p.add(static_cast<int>(d), Rational(static_cast<long>(dims[d])));
    return p;
}

}  // namespace detail

/// Full pipeline report for one or two seed orbits; computation only, no
/// verdicts.
inline RunReport cmd_frob(const std::vector<Point>& seeds, int max_n = 7) {
    if (seeds.empty() || seeds.size() > 2)
        throw std::invalid_argument("frob: expected 1 or 2 seed points");
    RunReport r;
    r.command = "frob";
    detail::fill_seed_info(r, seeds);
    OrbitPipeline pipe = run_orbit_pipeline(seeds, max_n);
    if (seeds.size() == 2) {
        PointSet orbitP = PointSet::orbit_union({seeds[0]}, max_n);
        r.degenerate_single_orbit = orbitP.contains(seeds[1]);
    }
    r.orbit_size = static_cast<std::int64_t>(pipe.Y.size());
    r.hilbert = pipe.hilbert;
    r.frob_s = pipe.frob_s;
    r.characters = pipe.table;
    detail::fill_htilde(r, pipe.frob_s);
    return r;
}

/// Two-orbit decomposition check: when the multiplicity partitions are
/// comparable and the coordinate sums differ, asserts
/// Frob_q = Htilde_lambda + q Htilde_mu together with Hilbert-series
/// additivity. Outside those hypotheses the same comparisons are computed and
/// reported as observations. Seeds in a single orbit degenerate to the
/// single-orbit identity Frob_q = Htilde_lambda.
inline RunReport cmd_verify_main(const std::vector<Point>& seeds_in, int max_n = 7) {
    if (seeds_in.size() != 2) throw std::invalid_argument("verify-main: expected exactly 2 seed points");
    std::vector<Point> seeds = seeds_in;
    {
        Partition a = seeds[0].multiplicity_partition();
        Partition b = seeds[1].multiplicity_partition();
        // report the dominance-smaller partition as lambda
        if (dominance_leq(b, a) && !dominance_leq(a, b)) std::swap(seeds[0], seeds[1]);
    }
    RunReport r;
    r.command = "verify-main";
    detail::fill_seed_info(r, seeds);

    OrbitPipeline pipe = run_orbit_pipeline(seeds, max_n);
    r.orbit_size = static_cast<std::int64_t>(pipe.Y.size());
    r.hilbert = pipe.hilbert;
    r.frob_s = pipe.frob_s;
    r.characters = pipe.table;
    detail::fill_htilde(r, pipe.frob_s);

    const Partition& lam = r.seed_partitions[0];
    const Partition& mu = r.seed_partitions[1];

    PointSet orbitP = PointSet::orbit_union({seeds[0]}, max_n);
    bool degenerate = orbitP.contains(seeds[1]);
    r.degenerate_single_orbit = degenerate;

    if (degenerate) {
        bool ok = pipe.frob_s == htilde_in_schur(lam);
        r.verdicts.push_back(Verdict{"single_orbit_hall_littlewood", ok,
                                     "duplicate orbit collapses to Frob_q = H" + lam.to_string()});
        return r;
    }

    OrbitPipeline pipeP = run_orbit_pipeline({seeds[0]}, max_n);
    OrbitPipeline pipeQ = run_orbit_pipeline({seeds[1]}, max_n);

    SymFuncExpr expected = htilde_in_schur(lam) + QPoly::q_power(1) * htilde_in_schur(mu);
    bool decomposition = pipe.frob_s == expected;

    QPoly lhs = detail::hilbert_to_qpoly(pipe.hilbert);
    QPoly rhs = detail::hilbert_to_qpoly(pipeP.hilbert) + detail::hilbert_to_qpoly(pipeQ.hilbert).shifted(1);
    bool additivity = lhs == rhs;

    std::string decomposition_detail = "Frob_q vs H" + lam.to_string() + " + q*H" + mu.to_string();
    std::string additivity_detail = "dim_q quotient(Y) vs dim_q R_lambda + q*dim_q R_mu";

    bool hypotheses = r.hyp_comparable.value() && r.hyp_distinct_sums.value();
    if (hypotheses) {
        r.verdicts.push_back(Verdict{"two_orbit_decomposition", decomposition, decomposition_detail});
        r.verdicts.push_back(Verdict{"hilbert_additivity", additivity, additivity_detail});
    } else {
        r.observations.push_back(Observation{"two_orbit_decomposition", decomposition,
                                             decomposition_detail + " (outside theorem hypotheses)"});
        r.observations.push_back(Observation{"hilbert_additivity", additivity,
                                             additivity_detail + " (outside theorem hypotheses)"});
    }
    return r;
}

/// Single-orbit sweep over all partitions of n: the top-form ideal of the
/// canonical orbit must equal the Tanisaki ideal, and the graded Frobenius
/// must equal the modified Hall-Littlewood function.
inline RunReport cmd_verify_gp(int n, int max_n = 7) {
    if (n < 2 || n > max_n)
        throw std::invalid_argument("verify-gp: n must be between 2 and " + std::to_string(max_n));
    RunReport r;
    r.command = "verify-gp";
    r.n = n;
    std::vector<Partition> parts = partitions_of(n);
    r.gp_entries.resize(parts.size(), GpEntry{Partition(), false, false, {}});
    parallel_for_index(parts.size(), env_thread_count(), [&](size_t i) {
        const Partition& lam = parts[i];
        OrbitPipeline pipe = run_orbit_pipeline({canonical_point(lam)}, max_n);
        GroebnerBasis tan = buchberger(tanisaki_generators(lam), pipe.graded.order());
        bool ideal_ok = ideal_equal(pipe.graded, tan);
        bool frob_ok = pipe.frob_s == htilde_in_schur(lam);
        r.gp_entries[i] = GpEntry{lam, ideal_ok, frob_ok, pipe.hilbert};
    });
    for (const GpEntry& e : r.gp_entries) {
        r.verdicts.push_back(Verdict{
            "lambda=" + e.lam.to_string(), e.ideal_ok && e.frob_ok,
            std::string("tanisaki_ideal_equality ") + (e.ideal_ok ? "pass" : "FAIL") +
                ", frobenius_matches_hall_littlewood " + (e.frob_ok ? "pass" : "FAIL")});
    }
    return r;
}

/// Reduced-basis dump (vanishing or graded), one generator per line sorted by
/// leading monomial descending, plus the standard-monomial dimension profile.
inline RunReport cmd_groebner(const std::vector<Point>& seeds, const std::string& which, int max_n = 7) {
    if (which != "vanishing" && which != "graded")
        throw std::invalid_argument("groebner: 'which' must be vanishing or graded");
    RunReport r;
    r.command = "groebner";
    r.which = which;
    detail::fill_seed_info(r, seeds);
    PointSet Y = PointSet::orbit_union(seeds, max_n);
    r.orbit_size = static_cast<std::int64_t>(Y.size());
    GroebnerBasis I = vanishing_ideal(Y);
    GroebnerBasis G = which == "graded" ? associated_graded_ideal(I) : I;
    for (const auto& g : G.generators()) r.generators.push_back(poly_to_string(g));
    r.hilbert = detail::standard_monomial_profile(G);
    return r;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

inline Json symfunc_to_json(const SymFuncExpr& e) {
    Json terms = Json::object();
    for (const auto& [k, v] : e.coeffs()) terms[k.to_string()] = v.to_string();
    return Json{{"basis", basis_name(e.basis())}, {"n", e.n()}, {"terms", terms}};
}

inline SymFuncExpr symfunc_from_json(const Json& j) {
    Basis b;
    std::string bn = j.at("basis").get<std::string>();
    if (bn == "p") b = Basis::p;
    else if (bn == "s") b = Basis::s;
    else if (bn == "h") b = Basis::h;
    else if (bn == "Htilde") b = Basis::Htilde;
    else throw std::invalid_argument("symfunc_from_json: unknown basis " + bn);
    SymFuncExpr e(j.at("n").get<int>(), b);
    for (const auto& [k, v] : j.at("terms").items())
        e.add(Partition::from_string(k), parse_qpoly(v.get<std::string>()));
    return e;
}

/// {"n":3,"classes":{"[1,1,1]":"1+2*q+3*q^2",...}} — ascending q powers.
inline Json character_table_to_json(const GradedCharacterTable& t) {
    Json classes = Json::object();
    for (const auto& [mu, tr] : t.classes()) classes[mu.to_string()] = tr.to_string(/*ascending=*/true);
    return Json{{"n", t.n()}, {"classes", classes}};
}

inline Json partition_to_json(const Partition& p) {
    Json a = Json::array();
    for (int x : p.parts()) a.push_back(x);
    return a;
}

inline Json report_to_json(const RunReport& r) {
    Json j;
    j["command"] = r.command;
    j["n"] = r.n;
    if (r.timestamp) j["timestamp"] = *r.timestamp;
    if (!r.seeds.empty()) {
        Json pts = Json::array();
        for (const auto& p : r.seeds) pts.push_back(p.to_string());
        j["points"] = pts;
        Json mp = Json::array();
        for (const auto& p : r.seed_partitions) mp.push_back(partition_to_json(p));
        j["multiplicity_partitions"] = mp;
        Json sums = Json::array();
        for (const auto& s : r.seed_sums) sums.push_back(s.to_string());
        j["coordinate_sums"] = sums;
        j["orbit_size"] = r.orbit_size;
    }
    if (!r.dominance.empty()) j["dominance"] = r.dominance;
    if (r.hyp_comparable || r.hyp_distinct_sums) {
        Json h = Json::object();
        if (r.hyp_distinct_sums) h["distinct_sums"] = *r.hyp_distinct_sums;
        if (r.hyp_comparable) h["comparable"] = *r.hyp_comparable;
        j["hypotheses"] = h;
    }
    if (r.degenerate_single_orbit) j["degenerate_single_orbit"] = *r.degenerate_single_orbit;
    if (!r.which.empty()) j["which"] = r.which;
    if (!r.generators.empty()) j["generators"] = r.generators;
    if (!r.hilbert.empty()) j["hilbert"] = r.hilbert;
    if (r.frob_s || r.frob_H) {
        Json f = Json::object();
        if (r.frob_s) f["s"] = symfunc_to_json(*r.frob_s);
        if (r.frob_H) f["Htilde"] = symfunc_to_json(*r.frob_H);
        if (!r.frob_H_note.empty()) f["Htilde_note"] = r.frob_H_note;
        j["frobenius"] = f;
    }
    if (r.characters) j["character_table"] = character_table_to_json(*r.characters);
    if (!r.gp_entries.empty()) {
        Json res = Json::array();
        for (const auto& e : r.gp_entries) {
            Json je;
            je["lambda"] = partition_to_json(e.lam);
            je["tanisaki_ideal_equality"] = e.ideal_ok;
            je["frobenius_matches_hall_littlewood"] = e.frob_ok;
            je["hilbert"] = e.hilbert;
            res.push_back(je);
        }
        j["results"] = res;
    }
    if (!r.observations.empty()) {
        Json obs = Json::array();
        for (const auto& o : r.observations)
            obs.push_back(Json{{"name", o.name}, {"holds", o.holds}, {"detail", o.detail}});
        j["observations"] = obs;
    }
    Json vs = Json::array();
    for (const auto& v : r.verdicts)
        vs.push_back(Json{{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
    j["verdicts"] = vs;
    j["all_pass"] = r.all_pass();
    return j;
}

inline std::string render_text(const RunReport& r) {
    std::ostringstream out;
    out << "command: " << r.command << "\n";
    out << "n: " << r.n << "\n";
    if (r.timestamp) out << "timestamp: " << *r.timestamp << "\n";
    if (!r.seeds.empty()) {
        out << "seed points: ";
        for (size_t i = 0; i < r.seeds.size(); ++i) out << (i ? " ; " : "") << r.seeds[i].to_string();
        out << "\n";
        out << "multiplicity partitions: ";
        for (size_t i = 0; i < r.seed_partitions.size(); ++i)
            out << (i ? " ; " : "") << r.seed_partitions[i].to_string();
        out << "\n";
        out << "coordinate sums: ";
        for (size_t i = 0; i < r.seed_sums.size(); ++i) out << (i ? " ; " : "") << r.seed_sums[i].to_string();
        out << "\n";
        out << "orbit size: " << r.orbit_size << "\n";
    }
    if (!r.dominance.empty()) out << "dominance: " << r.dominance << "\n";
    if (r.hyp_distinct_sums || r.hyp_comparable) {
        out << "hypotheses:";
        if (r.hyp_distinct_sums) out << " distinct_sums=" << (*r.hyp_distinct_sums ? "yes" : "no");
        if (r.hyp_comparable) out << " comparable=" << (*r.hyp_comparable ? "yes" : "no");
        out << "\n";
    }
    if (r.degenerate_single_orbit && *r.degenerate_single_orbit)
        out << "note: seeds lie in a single orbit (deduplicated)\n";
    if (!r.which.empty()) out << "which: " << r.which << "\n";
    if (!r.generators.empty()) {
        out << "generators:\n";
        for (const auto& g : r.generators) out << g << "\n";
    }
    if (!r.hilbert.empty()) {
        out << "hilbert:";
        for (auto d : r.hilbert) out << " " << d;
        out << "\n";
    }
    if (r.frob_s) out << "frobenius (s): " << r.frob_s->to_string() << "\n";
    if (r.frob_H) out << "frobenius (H): " << r.frob_H->to_string() << "\n";
    if (!r.frob_H_note.empty()) out << "frobenius (H): unavailable: " << r.frob_H_note << "\n";
    if (r.characters) {
        out << "graded character table:\n";
        for (const auto& [mu, tr] : r.characters->classes())
            out << "  " << mu.to_string() << ": " << tr.to_string(/*ascending=*/true) << "\n";
    }
    if (!r.gp_entries.empty()) {
        out << "results:\n";
        for (const auto& e : r.gp_entries) {
            out << "  lambda=" << e.lam.to_string() << ": tanisaki_ideal_equality "
                << (e.ideal_ok ? "pass" : "FAIL") << ", frobenius_matches_hall_littlewood "
                << (e.frob_ok ? "pass" : "FAIL") << ", hilbert:";
            for (auto d : e.hilbert) out << " " << d;
            out << "\n";
        }
    }
    if (!r.observations.empty()) {
        out << "observations:\n";
        for (const auto& o : r.observations)
            out << "  [" << (o.holds ? "HOLDS" : "FAILS") << "] " << o.name << ": " << o.detail << "\n";
    }
    if (!r.verdicts.empty()) {
        out << "verdicts:\n";
        for (const auto& v : r.verdicts)
            out << "  [" << (v.pass ? "PASS" : "FAIL") << "] " << v.name << ": " << v.detail << "\n";
        out << "overall: " << (r.all_pass() ? "PASS" : "FAIL") << "\n";
    }
    return out.str();
}

}  // namespace orbitharm
