#pragma once

#include "pluecker/curve.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace pluecker::numeric {

using Vec3c = std::array<Complex, 3>;

/// Two points spanning a line in P^2 plus its dual coordinates, normalized
/// so the maximum-modulus dual coordinate is exactly 1.
struct LineFrame {
    Vec3c a{};
    Vec3c b{};
    Vec3c dual{};
};

/// One bitangent line: the frame, the two contact parameters (contact
/// points are a + t*b with |a| = |b| = 1), and the certified residual of
/// the four defining equations re-evaluated from the exact coefficients.
struct TangencySolution {
    LineFrame line;
    Complex t1{}, t2{};
    double residual = 0.0;
    bool is_real = false;
};

struct FlexSolution {
    Vec3c point{};  // max-modulus coordinate normalized to 1
    double residual = 0.0;
    bool is_real = false;
};

struct SolverConfig {
    long start_count = 0;  // 0: derive from the expected count, or run honest batches
    int max_iterations = 100;
    double step_tolerance = 1e-12;
    double residual_tolerance = 1e-10;
    double dedup_distance = 1e-6;  // chordal metric on the dual plane
    // Minimum |t1 - t2| in the normalized frame. Within eps^(1/3) ~ 5e-6 of
    // an inflection contact the whole system evaluates below the double
    // noise floor, so pseudo-solutions survive every residual test there;
    // the separation cut must clear that ball.
    double separation_tolerance = 1e-4;
    std::uint64_t seed = 1;
};

/// Imaginary-part tolerance used for the is_real flags on solutions.
inline constexpr double kRealTolerance = 1e-6;

struct RunStats {
    long starts = 0;
    long converged = 0;
    long accepted = 0;
    long no_converge = 0;
    long singular_jacobian = 0;
    long rejected_residual = 0;
    long rejected_frame = 0;
    long rejected_separation = 0;
    long rejected_contact = 0;
    long rejected_certification = 0;
    bool stalled = false;  // honest mode stopped by the no-new-solutions rule
};

/// All bitangents of the curve by damped Newton iteration from random
/// starts, deduplicated in dual coordinates, each certified against the
/// exact coefficients. `expected` (from an external count) only sizes the
/// start sweep at 400 starts per expected solution; when absent the solver
/// runs batches of 100 starts and stops after 50 consecutive batches that
/// produce nothing new. Results are deterministic in (curve, config),
/// independent of the worker count.
std::vector<TangencySolution> find_bitangents(const PlaneCurve& curve,
                                              const SolverConfig& config,
                                              std::optional<long> expected = std::nullopt,
                                              int workers = 1, RunStats* stats = nullptr);

/// All inflection points: common zeros of the curve and its Hessian
/// determinant, found the same way over random affine charts of P^2.
std::vector<FlexSolution> find_flexes(const PlaneCurve& curve, const SolverConfig& config,
                                      std::optional<long> expected = std::nullopt,
                                      int workers = 1, RunStats* stats = nullptr);

/// Coefficients of f(a + t b), degree low to high, computed freshly from
/// the exact rational coefficients. Throws if the frame is degenerate or
/// the restriction vanishes identically (the line lies inside the curve).
std::vector<Complex> restrict_to_line(const PlaneCurve& curve, const Vec3c& a, const Vec3c& b);

/// One damped-Newton run from an explicit start: the line is charted as
/// (a0 + u*c0, b0 + v*c0) and the iteration begins at (u, v, t1, t2).
/// Empty unless the run converges to an accepted bitangent. Exposed for
/// the swap-symmetry and convergence properties.
std::optional<TangencySolution> bitangent_from_start(const PlaneCurve& curve,
                                                     const SolverConfig& config, const Vec3c& a0,
                                                     const Vec3c& b0, const Vec3c& c0, Complex u,
                                                     Complex v, Complex t1, Complex t2);

/// True iff some global phase rotation makes every imaginary part < tol.
bool phase_realizable(const Vec3c& v, double tol);

/// Chordal metric on P^2: |u x v| / (|u| |v|).
double chordal_distance(const Vec3c& u, const Vec3c& v);

/// Real representative of a phase-realizable projective vector.
std::array<double, 3> real_representative(const Vec3c& v);

} // namespace pluecker::numeric
