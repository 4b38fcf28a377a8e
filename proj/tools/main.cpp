#include "pluecker/curve.hpp"
#include "pluecker/derivation.hpp"
#include "pluecker/json_io.hpp"
#include "pluecker/plot.hpp"
#include "pluecker/solver.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <thread>

namespace {

using namespace pluecker;
using json = nlohmann::ordered_json;
using pluecker::io::report_json;
using derivation::DerivationReport;
using numeric::PlaneCurve;
using numeric::SolverConfig;
using polyring::FormalPoly;
using polyring::make_rational;
using polyring::Rational;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;     // identity failure or internal error
constexpr int kExitInputError = 2;  // parse errors, bad ranges, I/O
constexpr int kExitMismatch = 3;    // oracle count disagrees with the formula

void print_report_text(const DerivationReport& report) {
    std::printf("tangency cycles\n");
    std::printf("  phi_x   = %s\n", report.phi_x.str().c_str());
    std::printf("  phi_x3  = %s\n", report.phi_x3.str().c_str());
    std::printf("  phi1    = %s\n", report.phi1.str().c_str());
    std::printf("  phi2    = %s\n", report.phi2.str().c_str());
    std::printf("  lambda_2p1_p2 = %s\n", report.lambda_2p1_p2.str().c_str());
    std::printf("intermediate integrals\n");
    for (const auto& [name, value] : report.intermediate_integrals)
        std::printf("  %-22s = %s\n", name.c_str(), value.str().c_str());
    std::printf("ordered double-tangency integral\n");
    std::printf("  lambda_2p1_2p2 = %s = %s\n", report.lambda_2p1_2p2_integral.str().c_str(),
                polyring::factored_str(report.lambda_factors).c_str());
    std::printf("bitangent count (mark order divided out)\n");
    std::printf("  N_B(d) = %s\n", report.bitangent_count.str().c_str());
    std::printf("  N_B(2) = %lld, N_B(3) = %lld, N_B(4) = %lld, N_B(5) = %lld\n",
                polyring::to_long(report.bitangent_count.evaluate(make_rational(2))),
                polyring::to_long(report.bitangent_count.evaluate(make_rational(3))),
                polyring::to_long(report.bitangent_count.evaluate(make_rational(4))),
                polyring::to_long(report.bitangent_count.evaluate(make_rational(5))));
    std::printf("flex count\n");
    std::printf("  %s; at d=3: %lld, at d=4: %lld\n", report.flex_count.str().c_str(),
                polyring::to_long(report.flex_count.evaluate(make_rational(3))),
                polyring::to_long(report.flex_count.evaluate(make_rational(4))));
}

struct SolveFlags {
    std::uint64_t seed = 1;
    long starts = 0;
    double tol_residual = 1e-10;
    double dedup = 1e-6;
    int workers = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--seed", seed, "Seed for the multistart RNG")->envname("PLUECKER_SEED");
        cmd->add_option("--starts", starts, "Newton start count (0: 400 per expected solution)")
            ->envname("PLUECKER_STARTS");
        cmd->add_option("--tol-residual", tol_residual, "Residual acceptance tolerance")
            ->envname("PLUECKER_TOL_RESIDUAL");
        cmd->add_option("--dedup", dedup, "Dedup distance in the dual plane")
            ->envname("PLUECKER_DEDUP");
        cmd->add_option("--workers", workers, "Worker threads (0: hardware)")
            ->envname("PLUECKER_WORKERS");
    }

    SolverConfig config() const {
        SolverConfig cfg;
        cfg.seed = seed;
        cfg.start_count = starts;
        cfg.residual_tolerance = tol_residual;
        cfg.dedup_distance = dedup;
        return cfg;
    }

    int effective_workers() const {
        if (workers > 0) return workers;
        const unsigned hw = std::thread::hardware_concurrency();
        return static_cast<int>(std::clamp(hw, 1u, 8u));
    }
};

PlaneCurve parse_or_exit(const std::string& text) {
    try {
        return PlaneCurve::parse(text);
    } catch (const numeric::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        std::exit(kExitInputError);
    }
}

long expected_bitangents(int degree) {
    if (degree < 2) return 0;
    return polyring::to_long(derivation::bitangent_count_at(degree));
}

long expected_flexes(int degree) {
    if (degree < 3) return 0;
    return polyring::to_long(derivation::flex_count_at(degree));
}

bool parse_window(const std::string& spec, numeric::PlotOptions& opts) {
    std::vector<double> vals;
    std::string token;
    for (std::size_t i = 0; i <= spec.size(); ++i) {
        if (i == spec.size() || spec[i] == ',') {
            if (!token.empty()) {
                try {
                    vals.push_back(std::stod(token));
                } catch (...) {
                    return false;
                }
                token.clear();
            }
        } else {
            token += spec[i];
        }
    }
    if (vals.size() == 2) {
        if (vals[0] >= vals[1]) return false;
        opts.xmin = opts.ymin = vals[0];
        opts.xmax = opts.ymax = vals[1];
        return true;
    }
    if (vals.size() == 4) {
        if (vals[0] >= vals[1] || vals[2] >= vals[3]) return false;
        opts.xmin = vals[0];
        opts.xmax = vals[1];
        opts.ymin = vals[2];
        opts.ymax = vals[3];
        return true;
    }
    return false;
}

int run_identities() {
    bool all_ok = true;
    for (const auto& [name, holds] : io::identity_checks()) {
        std::printf("%s  %s\n", holds ? "pass" : "FAIL", name.c_str());
        all_ok = all_ok && holds;
    }
    return all_ok ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bitangents and flexes of plane curves: exact intersection-theory"
                 " derivation with a floating-point multistart oracle"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format: text or json (svg for plot)")
        ->envname("PLUECKER_FORMAT");

    auto* cmd_derive = app.add_subcommand("derive", "Run the symbolic derivation of N_B(d)");

    auto* cmd_table = app.add_subcommand("table", "Tabulate bitangent and flex counts");
    int d_min = 2, d_max = 10;
    cmd_table->add_option("d_min", d_min, "Lowest degree")->required();
    cmd_table->add_option("d_max", d_max, "Highest degree")->required();

    SolveFlags bit_flags, flex_flags, plot_flags;
    std::string bit_curve, flex_curve, plot_curve;
    auto* cmd_bit = app.add_subcommand("bitangents", "Count bitangents of an explicit curve");
    cmd_bit->add_option("curve", bit_curve, "Homogeneous polynomial in x, y, z")->required();
    bit_flags.attach(cmd_bit);

    auto* cmd_flex = app.add_subcommand("flexes", "Count flexes of an explicit curve");
    cmd_flex->add_option("curve", flex_curve, "Homogeneous polynomial in x, y, z")->required();
    flex_flags.attach(cmd_flex);

    auto* cmd_ident = app.add_subcommand("identities", "Check the modeled ring identities");

    auto* cmd_plot = app.add_subcommand("plot", "Render the real curve and its real bitangents");
    std::string out_path, window_spec;
    cmd_plot->add_option("curve", plot_curve, "Homogeneous polynomial in x, y, z")->required();
    cmd_plot->add_option("--out", out_path, "Output SVG path")->envname("PLUECKER_OUT");
    cmd_plot->add_option("--window", window_spec, "Window: 'lo,hi' or 'x0,x1,y0,y1'")
        ->envname("PLUECKER_WINDOW");
    plot_flags.attach(cmd_plot);

    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);
    const bool json_out = format == "json";
    if (format != "text" && format != "json" && format != "svg") {
        std::fprintf(stderr, "error: unknown format '%s'\n", format.c_str());
        return kExitInputError;
    }
    if (format == "svg" && !cmd_plot->parsed()) {
        std::fprintf(stderr, "error: svg output is only available for plot\n");
        return kExitInputError;
    }
    if (cmd_plot->parsed() && json_out) {
        std::fprintf(stderr, "error: plot emits svg (or a text summary), not json\n");
        return kExitInputError;
    }

    try {
        if (cmd_derive->parsed()) {
            const DerivationReport report = derivation::derivation_report();
            if (json_out)
                std::printf("%s\n", report_json(report).dump(2).c_str());
            else
                print_report_text(report);
            return kExitOk;
        }

        if (cmd_table->parsed()) {
            if (!(2 <= d_min && d_min <= d_max && d_max <= 50)) {
                std::fprintf(stderr, "error: need 2 <= d_min <= d_max <= 50\n");
                return kExitInputError;
            }
            if (json_out) {
                json rows = json::array();
                for (int d = d_min; d <= d_max; ++d)
                    rows.push_back({{"d", d},
                                    {"bitangents", expected_bitangents(d)},
                                    {"flexes", expected_flexes(d)}});
                std::printf("%s\n", json(rows).dump(2).c_str());
            } else {
                std::printf("%4s %12s %8s\n", "d", "bitangents", "flexes");
                for (int d = d_min; d <= d_max; ++d)
                    std::printf("%4d %12ld %8ld\n", d, expected_bitangents(d), expected_flexes(d));
            }
            return kExitOk;
        }

        if (cmd_bit->parsed()) {
            const PlaneCurve curve = parse_or_exit(bit_curve);
            const long expected = expected_bitangents(curve.degree());
            const auto solutions = numeric::find_bitangents(
                curve, bit_flags.config(), expected, bit_flags.effective_workers());
            const long found = static_cast<long>(solutions.size());
            if (json_out) {
                std::printf("%s\n",
                            io::bitangents_json(curve.degree(), expected, solutions).dump(2).c_str());
            } else {
                std::printf("degree %d: found %ld bitangents, expected %ld: %s\n", curve.degree(),
                            found, expected, found == expected ? "agrees" : "MISMATCH");
                for (const auto& s : solutions)
                    std::printf("  dual (%.12g%+.12gi : %.12g%+.12gi : %.12g%+.12gi)%s\n",
                                s.line.dual[0].real(), s.line.dual[0].imag(),
                                s.line.dual[1].real(), s.line.dual[1].imag(),
                                s.line.dual[2].real(), s.line.dual[2].imag(),
                                s.is_real ? "  [real]" : "");
            }
            if (found != expected) {
                std::fprintf(stderr,
                             "warning: count disagrees with the formula; the curve may not be "
                             "generic (or raise --starts)\n");
                return kExitMismatch;
            }
            return kExitOk;
        }

        if (cmd_flex->parsed()) {
            const PlaneCurve curve = parse_or_exit(flex_curve);
            const long expected = expected_flexes(curve.degree());
            const auto solutions = numeric::find_flexes(curve, flex_flags.config(), expected,
                                                        flex_flags.effective_workers());
            const long found = static_cast<long>(solutions.size());
            if (json_out) {
                std::printf("%s\n",
                            io::flexes_json(curve.degree(), expected, solutions).dump(2).c_str());
            } else {
                std::printf("degree %d: found %ld flexes, expected %ld: %s\n", curve.degree(),
                            found, expected, found == expected ? "agrees" : "MISMATCH");
            }
            if (found != expected) {
                std::fprintf(stderr,
                             "warning: count disagrees with the formula; the curve may not be "
                             "generic (or raise --starts)\n");
                return kExitMismatch;
            }
            return kExitOk;
        }

        if (cmd_ident->parsed()) return run_identities();

        if (cmd_plot->parsed()) {
            const PlaneCurve curve = parse_or_exit(plot_curve);
            numeric::PlotOptions opts;
            if (!window_spec.empty() && !parse_window(window_spec, opts)) {
                std::fprintf(stderr, "error: bad --window '%s'\n", window_spec.c_str());
                return kExitInputError;
            }
            const long expected = expected_bitangents(curve.degree());
            const auto solutions = numeric::find_bitangents(
                curve, plot_flags.config(), expected, plot_flags.effective_workers());
            numeric::PlotInfo info;
            const std::string svg = numeric::render_plot_svg(curve, solutions, opts, &info);
            if (info.contour_segments == 0)
                std::fprintf(stderr, "warning: no real branch of the curve in the window\n");
            // Plot emits svg unless a text summary was explicitly requested.
            if (app.count("--format") > 0 && format == "text") {
                std::printf("window [%g, %g] x [%g, %g]: %d contour segments, %d real "
                            "bitangents drawn\n",
                            opts.xmin, opts.xmax, opts.ymin, opts.ymax, info.contour_segments,
                            info.lines_drawn);
                return kExitOk;
            }
            if (out_path.empty()) {
                std::fputs(svg.c_str(), stdout);
                return kExitOk;
            }
            std::ofstream file(out_path, std::ios::binary);
            if (!file) {
                std::fprintf(stderr, "error: cannot open '%s'\n", out_path.c_str());
                return kExitInputError;
            }
            file << svg;
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitFailure;
    }
    return kExitOk;
}
