// Command-line front end: parses point lists, runs the orbit-harmonics
// pipeline, and emits expansions and verification reports in text or JSON.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "orbitharm/report.hpp"

namespace {

std::string iso8601_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

int emit(orbitharm::RunReport report, bool json, bool timestamps) {
    if (timestamps) report.timestamp = iso8601_now();
    if (json) {
        std::cout << orbitharm::report_to_json(report).dump(2) << "\n";
    } else {
        std::cout << orbitharm::render_text(report);
    }
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbit harmonics of unions of symmetric-group orbits"};
    app.require_subcommand(1);

    bool json = false;
    bool timestamps = false;
    int max_n = 7;
    std::string order = "grevlex";
    app.add_flag("--json", json, "emit the report as JSON");
    app.add_flag("--timestamps", timestamps, "include a timestamp in the report");
    app.add_option("--max-n", max_n, "largest admissible number of coordinates")->capture_default_str();
    app.add_option("--order", order, "monomial order (only grevlex is available)")
        ->check(CLI::IsMember({"grevlex"}))
        ->capture_default_str();

    std::string frob_points;
    auto* frob = app.add_subcommand("frob", "graded Frobenius characteristic of the orbit-union quotient");
    frob->add_option("points", frob_points, "one or two seed points, e.g. \"0,0,4;1,1,2\"")->required();

    std::string vm_points;
    auto* vmain = app.add_subcommand(
        "verify-main", "check the two-orbit decomposition Frob_q = H[lambda] + q*H[mu]");
    vmain->add_option("points", vm_points, "exactly two seed points")->required();

    int gp_n = 0;
    auto* vgp = app.add_subcommand(
        "verify-gp", "sweep all partitions of n: top-form ideal = Tanisaki ideal, Frob_q = H[lambda]");
    vgp->add_option("n", gp_n, "number of coordinates (2 <= n <= max-n)")->required();

    std::string gb_points;
    std::string which = "vanishing";
    auto* gb = app.add_subcommand("groebner", "dump a reduced basis and its dimension profile");
    gb->add_option("points", gb_points, "seed points")->required();
    gb->add_option("--which", which, "vanishing | graded")
        ->check(CLI::IsMember({"vanishing", "graded"}))
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*frob) return emit(orbitharm::cmd_frob(orbitharm::parse_point_list(frob_points), max_n), json, timestamps);
        if (*vmain)
            return emit(orbitharm::cmd_verify_main(orbitharm::parse_point_list(vm_points), max_n), json,
                        timestamps);
        if (*vgp) return emit(orbitharm::cmd_verify_gp(gp_n, max_n), json, timestamps);
        if (*gb)
            return emit(orbitharm::cmd_groebner(orbitharm::parse_point_list(gb_points), which, max_n), json,
                        timestamps);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
