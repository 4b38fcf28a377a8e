#include <doctest.h>

#include "pluecker/solver.hpp"

#include <algorithm>

using namespace pluecker::numeric;

namespace {

SolverConfig quick_config(std::uint64_t seed = 1) {
    SolverConfig cfg;
    cfg.seed = seed;
    return cfg;
}

} // namespace

TEST_CASE("conics have no bitangents") {
    const PlaneCurve conic = PlaneCurve::parse("x^2 + y^2 - z^2");
    SolverConfig cfg = quick_config();
    cfg.start_count = 500;
    RunStats stats;
    const auto solutions = find_bitangents(conic, cfg, std::nullopt, 1, &stats);
    CHECK(solutions.empty());
    CHECK(stats.starts == 500);
}

TEST_CASE("smooth cubics have no bitangents but nine flexes") {
    const PlaneCurve cubic = PlaneCurve::parse("x^3 + y^3 + z^3 - 2*x*y*z");
    SolverConfig cfg = quick_config(3);
    cfg.start_count = 800;
    CHECK(find_bitangents(cubic, cfg).empty());

    cfg.start_count = 0;
    const auto flexes = find_flexes(cubic, cfg, 9);
    CHECK(flexes.size() == 9);
    for (const auto& f : flexes) CHECK(f.residual < 1e-9);
}

TEST_CASE("conic flexes are empty") {
    const PlaneCurve conic = PlaneCurve::parse("x^2 + y^2 - z^2");
    SolverConfig cfg = quick_config(5);
    cfg.start_count = 300;
    CHECK(find_flexes(conic, cfg).empty());
}

TEST_CASE("a generic quartic has 28 bitangents and 24 flexes") {
    const PlaneCurve quartic = PlaneCurve::random(4, 12345);
    SolverConfig cfg = quick_config(2);
    RunStats stats;
    const auto bitangents = find_bitangents(quartic, cfg, 28, 4, &stats);
    CHECK(bitangents.size() == 28);
    for (const auto& s : bitangents) {
        CHECK(s.residual < 1e-9);
        // Frame-normalized contact parameters stay separated.
        CHECK(std::abs(s.t1 - s.t2) > 1e-6);
        // Dual coordinates annihilate both frame points.
        const Complex da = s.line.dual[0] * s.line.a[0] + s.line.dual[1] * s.line.a[1] +
                           s.line.dual[2] * s.line.a[2];
        const Complex db = s.line.dual[0] * s.line.b[0] + s.line.dual[1] * s.line.b[1] +
                           s.line.dual[2] * s.line.b[2];
        CHECK(std::abs(da) < 1e-10);
        CHECK(std::abs(db) < 1e-10);
    }
    const auto flexes = find_flexes(quartic, cfg, 24, 4);
    CHECK(flexes.size() == 24);
}

TEST_CASE("hyperflex tangents are not counted as bitangents") {
    // x^4 + y^4 + z^4 carries twelve lines with a single contact of order
    // four; its separated-bitangent count is 16, not the generic 28, and
    // its twelve flexes are distinct points of multiplicity two.
    const PlaneCurve fermat = PlaneCurve::parse("x^4 + y^4 + z^4");
    SolverConfig cfg = quick_config(1);
    RunStats stats;
    const auto bits = find_bitangents(fermat, cfg, 28, 4, &stats);
    CHECK(bits.size() == 16);
    // Higher-order contacts die on the separation cut or, when the contact
    // parameters land farther apart, on the second-derivative certificate.
    CHECK(stats.rejected_separation + stats.rejected_contact > 0);
    const int real_lines =
        static_cast<int>(std::count_if(bits.begin(), bits.end(), [](const auto& s) { return s.is_real; }));
    CHECK(real_lines == 4);  // z = ax + by with a, b in {1,-1}
    CHECK(find_flexes(fermat, cfg, 24, 4).size() == 12);
}

TEST_CASE("determinism across worker widths") {
    const PlaneCurve quartic = PlaneCurve::random(4, 777);
    SolverConfig cfg = quick_config(99);
    cfg.start_count = 3000;
    const auto one = find_bitangents(quartic, cfg, std::nullopt, 1);
    const auto four = find_bitangents(quartic, cfg, std::nullopt, 4);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].line.dual == four[i].line.dual);
        CHECK(one[i].t1 == four[i].t1);
        CHECK(one[i].t2 == four[i].t2);
        CHECK(one[i].residual == four[i].residual);
    }
}

TEST_CASE("swap symmetry: the reversed contact pair polishes to the same line") {
    const PlaneCurve quartic = PlaneCurve::random(4, 12345);
    SolverConfig cfg = quick_config(2);
    cfg.start_count = 4000;
    const auto solutions = find_bitangents(quartic, cfg, std::nullopt, 4);
    REQUIRE(!solutions.empty());
    const Vec3c chart{0.36, Complex(0.48, 0.1), -0.8};
    for (const auto& s : solutions) {
        const auto swapped = bitangent_from_start(quartic, cfg, s.line.a, s.line.b, chart, 0.0,
                                                  0.0, s.t2, s.t1);
        REQUIRE(swapped.has_value());
        CHECK(chordal_distance(swapped->line.dual, s.line.dual) < cfg.dedup_distance);
    }
}

TEST_CASE("chart independence: different seeds find the same lines") {
    const PlaneCurve quartic = PlaneCurve::random(4, 31);
    SolverConfig a = quick_config(1), b = quick_config(2);
    const auto run_a = find_bitangents(quartic, a, 28, 4);
    const auto run_b = find_bitangents(quartic, b, 28, 4);
    REQUIRE(run_a.size() == 28);
    REQUIRE(run_b.size() == 28);
    for (const auto& sa : run_a) {
        const bool matched = std::any_of(run_b.begin(), run_b.end(), [&](const auto& sb) {
            return chordal_distance(sa.line.dual, sb.line.dual) < a.dedup_distance;
        });
        CHECK(matched);
    }
}

TEST_CASE("honest mode hits the start cap on a conic") {
    const PlaneCurve conic = PlaneCurve::parse("x^2 + 2*y^2 - z^2");
    SolverConfig cfg = quick_config(11);
    RunStats stats;
    const auto solutions = find_bitangents(conic, cfg, std::nullopt, 4, &stats);
    CHECK(solutions.empty());
    CHECK(stats.starts == 3200);  // 200 * d^4 caps out before the stall rule
    CHECK_FALSE(stats.stalled);
}

TEST_CASE("honest mode stalls out on a cubic") {
    const PlaneCurve cubic = PlaneCurve::parse("x^3 + y^3 + z^3 - 2*x*y*z");
    SolverConfig cfg = quick_config(17);
    RunStats stats;
    const auto solutions = find_bitangents(cubic, cfg, std::nullopt, 4, &stats);
    CHECK(solutions.empty());
    CHECK(stats.stalled);
    CHECK(stats.starts == 5000);  // 50 consecutive empty batches of 100
}
