#include "pluecker/solver.hpp"

#include "pluecker/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

namespace pluecker::numeric {

namespace {

// ---------------------------------------------------------------------------
// Complex 3-vector helpers (bilinear dot, no conjugation).

Complex dot(const Vec3c& u, const Vec3c& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

Vec3c cross(const Vec3c& u, const Vec3c& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

double norm2(const Vec3c& u) {
    return std::sqrt(std::norm(u[0]) + std::norm(u[1]) + std::norm(u[2]));
}

Vec3c scaled(const Vec3c& u, Complex c) { return {u[0] * c, u[1] * c, u[2] * c}; }

Vec3c add(const Vec3c& u, const Vec3c& v) { return {u[0] + v[0], u[1] + v[1], u[2] + v[2]}; }

int argmax_modulus(const Vec3c& u) {
    int best = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(u[i]) > std::abs(u[best])) best = i;
    return best;
}

/// Scale so the maximum-modulus coordinate is exactly 1.
Vec3c normalize_projective(const Vec3c& u) { return scaled(u, 1.0 / u[argmax_modulus(u)]); }

Vec3c random_unit(Rng& rng) {
    Vec3c v{rng.complex_gaussian(), rng.complex_gaussian(), rng.complex_gaussian()};
    return scaled(v, 1.0 / norm2(v));
}

// ---------------------------------------------------------------------------
// Term-list evaluation of the curve and its partials.

struct Term {
    int e[3];
    Complex c;
};

struct TermPoly {
    std::vector<Term> terms;

    Complex eval(const std::array<std::vector<Complex>, 3>& powers) const {
        Complex acc = 0.0;
        for (const Term& t : terms) acc += t.c * powers[0][t.e[0]] * powers[1][t.e[1]] * powers[2][t.e[2]];
        return acc;
    }

    TermPoly derivative(int axis) const {
        TermPoly out;
        for (const Term& t : terms) {
            if (t.e[axis] == 0) continue;
            Term s = t;
            s.c *= static_cast<double>(t.e[axis]);
            --s.e[axis];
            out.terms.push_back(s);
        }
        return out;
    }
};

using Mat3 = std::array<std::array<Complex, 3>, 3>;

struct CurveEval {
    int degree = 0;
    TermPoly f;
    std::array<TermPoly, 3> grad;
    std::array<std::array<TermPoly, 3>, 3> hess;
    std::array<std::array<std::array<TermPoly, 3>, 3>, 3> third;

    static CurveEval build(const PlaneCurve& curve) {
        CurveEval ce;
        ce.degree = curve.degree();
        // Scale to unit max coefficient so residual tolerances are
        // independent of the input's normalization.
        double max_abs = 0.0;
        for (const auto& [m, c] : curve.terms())
            max_abs = std::max(max_abs, std::abs(polyring::to_double(c)));
        for (const auto& [m, c] : curve.terms())
            ce.f.terms.push_back(Term{{m.x, m.y, m.z}, Complex(polyring::to_double(c) / max_abs)});
        for (int a = 0; a < 3; ++a) {
            ce.grad[a] = ce.f.derivative(a);
            for (int b = 0; b < 3; ++b) {
                ce.hess[a][b] = ce.grad[a].derivative(b);
                for (int c2 = 0; c2 < 3; ++c2) ce.third[a][b][c2] = ce.hess[a][b].derivative(c2);
            }
        }
        return ce;
    }

    std::array<std::vector<Complex>, 3> powers(const Vec3c& p) const {
        std::array<std::vector<Complex>, 3> out;
        for (int a = 0; a < 3; ++a) {
            out[a].resize(degree + 1);
            out[a][0] = 1.0;
            for (int k = 1; k <= degree; ++k) out[a][k] = out[a][k - 1] * p[a];
        }
        return out;
    }

    Complex value(const std::array<std::vector<Complex>, 3>& pw) const { return f.eval(pw); }

    Vec3c gradient(const std::array<std::vector<Complex>, 3>& pw) const {
        return {grad[0].eval(pw), grad[1].eval(pw), grad[2].eval(pw)};
    }

    Mat3 hessian(const std::array<std::vector<Complex>, 3>& pw) const {
        Mat3 h;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) h[a][b] = hess[a][b].eval(pw);
        return h;
    }
};

Complex det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 adjugate(const Mat3& m) {
    Mat3 a;
    a[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    a[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
    a[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
    a[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
    a[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
    a[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
    a[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
    a[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
    a[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return a;
}

Vec3c mat_vec(const Mat3& m, const Vec3c& v) {
    return {dot(m[0], v), dot(m[1], v), dot(m[2], v)};
}

/// Gaussian elimination with partial pivoting; false on a vanishing pivot.
template <int N>
bool solve_linear(std::array<std::array<Complex, N>, N> a, std::array<Complex, N>& b) {
    for (int col = 0; col < N; ++col) {
        int pivot = col;
        for (int r = col + 1; r < N; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (std::abs(a[pivot][col]) < 1e-300) return false;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (int r = col + 1; r < N; ++r) {
            const Complex factor = a[r][col] / a[col][col];
            for (int c = col; c < N; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    for (int r = N - 1; r >= 0; --r) {
        for (int c = r + 1; c < N; ++c) b[r] -= a[r][c] * b[c];
        b[r] /= a[r][r];
    }
    return true;
}

// ---------------------------------------------------------------------------
// Damped Newton driver shared by both systems.

enum class Outcome : std::uint8_t {
    kNoConverge,
    kSingular,
    kResidual,
    kFrame,
    kSeparation,
    kDegenerateContact,
    kCertification,
    kAccepted,
};

/// Lower bound on |p''(t_i)| relative to the restriction's coefficient
/// scale. An ordinary bitangent has a nondegenerate double root at each
/// contact; pseudo-solutions inside the noise ball of a contact of order
/// three or more carry a vanishing second derivative instead.
constexpr double kContactNondegeneracy = 1e-5;

template <int N, class System>
Outcome damped_newton(const System& system, std::array<Complex, N>& z, const SolverConfig& cfg) {
    std::array<Complex, N> f;
    system.eval(z, f);
    double res = 0.0;
    for (const Complex& v : f) res = std::max(res, std::abs(v));
    for (int iter = 0; iter < cfg.max_iterations; ++iter) {
        if (res == 0.0) return Outcome::kAccepted;
        std::array<std::array<Complex, N>, N> jac;
        system.jacobian(z, jac);
        std::array<Complex, N> step = f;
        if (!solve_linear<N>(jac, step)) return Outcome::kSingular;
        double lambda = 1.0;
        bool moved = false;
        std::array<Complex, N> z_new, f_new;
        double res_new = 0.0;
        for (int halving = 0; halving <= 20; ++halving) {
            for (int i = 0; i < N; ++i) z_new[i] = z[i] - lambda * step[i];
            system.eval(z_new, f_new);
            res_new = 0.0;
            for (const Complex& v : f_new) res_new = std::max(res_new, std::abs(v));
            if (res_new < res) {
                moved = true;
                break;
            }
            lambda *= 0.5;
        }
        if (!moved) return Outcome::kNoConverge;
        double applied = 0.0;
        for (int i = 0; i < N; ++i) applied = std::max(applied, lambda * std::abs(step[i]));
        z = z_new;
        f = f_new;
        res = res_new;
        if (applied < cfg.step_tolerance)
            return res <= cfg.residual_tolerance ? Outcome::kAccepted : Outcome::kResidual;
    }
    return Outcome::kNoConverge;
}

// ---------------------------------------------------------------------------
// Bitangent system: unknowns (u, v, t1, t2); the line runs through
// a0 + u*c0 and b0 + v*c0.

struct BitangentSystem {
    const CurveEval& ce;
    Vec3c a0, b0, c0;

    Vec3c point_a(const std::array<Complex, 4>& z) const { return add(a0, scaled(c0, z[0])); }
    Vec3c point_b(const std::array<Complex, 4>& z) const { return add(b0, scaled(c0, z[1])); }

    void eval(const std::array<Complex, 4>& z, std::array<Complex, 4>& f) const {
        const Vec3c a = point_a(z), b = point_b(z);
        for (int half = 0; half < 2; ++half) {
            const Complex t = z[2 + half];
            const auto pw = ce.powers(add(a, scaled(b, t)));
            f[2 * half] = ce.value(pw);
            f[2 * half + 1] = dot(ce.gradient(pw), b);
        }
    }

    void jacobian(const std::array<Complex, 4>& z, std::array<std::array<Complex, 4>, 4>& jac) const {
        const Vec3c a = point_a(z), b = point_b(z);
        for (auto& row : jac) row.fill(0.0);
        for (int half = 0; half < 2; ++half) {
            const Complex t = z[2 + half];
            const auto pw = ce.powers(add(a, scaled(b, t)));
            const Vec3c g = ce.gradient(pw);
            const Mat3 h = ce.hessian(pw);
            const Complex g_c0 = dot(g, c0);
            const Complex g_b = dot(g, b);
            const Complex hc0_b = dot(mat_vec(h, c0), b);
            const Complex hb_b = dot(mat_vec(h, b), b);
            auto& value_row = jac[2 * half];
            auto& tangent_row = jac[2 * half + 1];
            value_row[0] = g_c0;
            value_row[1] = t * g_c0;
            value_row[2 + half] = g_b;
            tangent_row[0] = hc0_b;
            tangent_row[1] = t * hc0_b + g_c0;
            tangent_row[2 + half] = hb_b;
        }
    }
};

struct BitangentCandidate {
    Vec3c dual;
    Vec3c a, b;  // unit norm
    Complex t1, t2;
    double residual;
};

/// Coefficients of f(a + t b) by binomial expansion of every term.
std::vector<Complex> restrict_terms(const TermPoly& poly, int degree, const Vec3c& a,
                                    const Vec3c& b) {
    std::vector<Complex> out(degree + 1, Complex(0.0));
    std::vector<Complex> partial, factor, next;
    for (const Term& term : poly.terms) {
        partial.assign(1, term.c);
        for (int axis = 0; axis < 3; ++axis) {
            const int n = term.e[axis];
            factor.assign(n + 1, Complex(0.0));
            // (a + t b)^n along this axis
            Complex binom = 1.0;
            for (int m = 0; m <= n; ++m) {
                Complex val = binom;
                for (int q = 0; q < n - m; ++q) val *= a[axis];
                for (int q = 0; q < m; ++q) val *= b[axis];
                factor[m] = val;
                binom *= static_cast<double>(n - m) / static_cast<double>(m + 1);
            }
            next.assign(partial.size() + n, Complex(0.0));
            for (std::size_t i = 0; i < partial.size(); ++i)
                for (int m = 0; m <= n; ++m) next[i + m] += partial[i] * factor[m];
            partial = next;
        }
        for (std::size_t i = 0; i < partial.size(); ++i) out[i] += partial[i];
    }
    return out;
}

Complex eval_poly(const std::vector<Complex>& coeffs, Complex t) {
    Complex acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::vector<Complex> derivative_poly(const std::vector<Complex>& coeffs) {
    std::vector<Complex> out;
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        out.push_back(coeffs[i] * static_cast<double>(i));
    return out;
}

struct StartResult {
    Outcome outcome = Outcome::kNoConverge;
    bool has_candidate = false;
    BitangentCandidate candidate;
};

StartResult bitangent_run(const CurveEval& ce, const SolverConfig& cfg,
                          const BitangentSystem& system, std::array<Complex, 4> z) {
    StartResult result;
    result.outcome = damped_newton<4>(system, z, cfg);
    if (result.outcome != Outcome::kAccepted) return result;

    const Vec3c a = system.point_a(z), b = system.point_b(z);
    const double na = norm2(a), nb = norm2(b);
    const Vec3c n = cross(a, b);
    if (na < 1e-12 || nb < 1e-12 || norm2(n) / (na * nb) <= 1e-8) {
        result.outcome = Outcome::kFrame;
        return result;
    }
    // Frame-normalized contact parameters: |a| = |b| = 1.
    const Vec3c a_hat = scaled(a, 1.0 / na), b_hat = scaled(b, 1.0 / nb);
    Complex t1 = z[2] * (nb / na), t2 = z[3] * (nb / na);
    if (std::abs(t1 - t2) < cfg.separation_tolerance) {
        result.outcome = Outcome::kSeparation;
        return result;
    }
    if (std::make_pair(t2.real(), t2.imag()) < std::make_pair(t1.real(), t1.imag()))
        std::swap(t1, t2);

    // Certify against a fresh restriction of the exact coefficients.
    const std::vector<Complex> p = restrict_terms(ce.f, ce.degree, a_hat, b_hat);
    const std::vector<Complex> dp = derivative_poly(p);
    const double certified =
        std::max(std::max(std::abs(eval_poly(p, t1)), std::abs(eval_poly(dp, t1))),
                 std::max(std::abs(eval_poly(p, t2)), std::abs(eval_poly(dp, t2))));
    if (certified > 10.0 * cfg.residual_tolerance) {
        result.outcome = Outcome::kCertification;
        return result;
    }
    const std::vector<Complex> ddp = derivative_poly(dp);
    double scale = 0.0;
    for (const Complex& coeff : p) scale = std::max(scale, std::abs(coeff));
    if (std::min(std::abs(eval_poly(ddp, t1)), std::abs(eval_poly(ddp, t2))) <
        kContactNondegeneracy * scale) {
        result.outcome = Outcome::kDegenerateContact;
        return result;
    }
    result.has_candidate = true;
    result.candidate =
        BitangentCandidate{normalize_projective(n), a_hat, b_hat, t1, t2, certified};
    return result;
}

StartResult bitangent_start(const CurveEval& ce, const SolverConfig& cfg, std::uint64_t index) {
    Rng rng(cfg.seed ^ index);
    const BitangentSystem system{ce, random_unit(rng), random_unit(rng), random_unit(rng)};
    const std::array<Complex, 4> z{rng.complex_gaussian(), rng.complex_gaussian(),
                                   rng.complex_gaussian(), rng.complex_gaussian()};
    return bitangent_run(ce, cfg, system, z);
}

TangencySolution to_solution(const BitangentCandidate& c) {
    TangencySolution s;
    s.line = LineFrame{c.a, c.b, c.dual};
    s.t1 = c.t1;
    s.t2 = c.t2;
    s.residual = c.residual;
    s.is_real = phase_realizable(c.dual, kRealTolerance);
    return s;
}

// ---------------------------------------------------------------------------
// Flex system: unknowns (s, w); the point is n0 + s*n1 + w*n2.

struct FlexSystem {
    const CurveEval& ce;
    Vec3c n0, n1, n2;

    Vec3c point(const std::array<Complex, 2>& z) const {
        return add(n0, add(scaled(n1, z[0]), scaled(n2, z[1])));
    }

    void eval(const std::array<Complex, 2>& z, std::array<Complex, 2>& f) const {
        const auto pw = ce.powers(point(z));
        f[0] = ce.value(pw);
        f[1] = det3(ce.hessian(pw));
    }

    void jacobian(const std::array<Complex, 2>& z, std::array<std::array<Complex, 2>, 2>& jac) const {
        const auto pw = ce.powers(point(z));
        const Vec3c g = ce.gradient(pw);
        const Mat3 h = ce.hessian(pw);
        const Mat3 adj = adjugate(h);
        // d(det H) along axis a is tr(adj(H) * dH/dx_a).
        Vec3c ddet;
        for (int a = 0; a < 3; ++a) {
            Complex trace = 0.0;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) trace += adj[i][j] * ce.third[j][i][a].eval(pw);
            ddet[a] = trace;
        }
        jac[0][0] = dot(g, n1);
        jac[0][1] = dot(g, n2);
        jac[1][0] = dot(ddet, n1);
        jac[1][1] = dot(ddet, n2);
    }
};

struct FlexCandidate {
    Vec3c point;
    double residual;
};

struct FlexStartResult {
    Outcome outcome = Outcome::kNoConverge;
    bool has_candidate = false;
    FlexCandidate candidate;
};

FlexStartResult flex_start(const CurveEval& ce, const SolverConfig& cfg, std::uint64_t index) {
    FlexStartResult result;
    Rng rng(cfg.seed ^ index);
    FlexSystem system{ce, random_unit(rng), random_unit(rng), random_unit(rng)};
    std::array<Complex, 2> z{rng.complex_gaussian(), rng.complex_gaussian()};
    result.outcome = damped_newton<2>(system, z, cfg);
    if (result.outcome != Outcome::kAccepted) return result;

    Vec3c p = system.point(z);
    const double np = norm2(p);
    if (np < 1e-12) {
        result.outcome = Outcome::kFrame;
        return result;
    }
    p = scaled(p, 1.0 / np);
    const auto pw = ce.powers(p);
    const double certified = std::max(std::abs(ce.value(pw)), std::abs(det3(ce.hessian(pw))));
    if (certified > 10.0 * cfg.residual_tolerance) {
        result.outcome = Outcome::kCertification;
        return result;
    }
    result.has_candidate = true;
    result.candidate = FlexCandidate{normalize_projective(p), certified};
    return result;
}

// ---------------------------------------------------------------------------
// Deterministic scheduling and merging.

void parallel_for(std::uint64_t begin, std::uint64_t end, int workers,
                  const std::function<void(std::uint64_t)>& body) {
    if (workers <= 1 || end - begin < 2) {
        for (std::uint64_t i = begin; i < end; ++i) body(i);
        return;
    }
    std::atomic<std::uint64_t> cursor{begin};
    auto run = [&] {
        constexpr std::uint64_t kChunk = 8;
        while (true) {
            const std::uint64_t lo = cursor.fetch_add(kChunk);
            if (lo >= end) return;
            const std::uint64_t hi = std::min(lo + kChunk, end);
            for (std::uint64_t i = lo; i < hi; ++i) body(i);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
}

void tally(RunStats& stats, Outcome outcome) {
    switch (outcome) {
        case Outcome::kNoConverge: ++stats.no_converge; break;
        case Outcome::kSingular: ++stats.singular_jacobian; break;
        case Outcome::kResidual: ++stats.rejected_residual; break;
        case Outcome::kFrame: ++stats.rejected_frame; ++stats.converged; break;
        case Outcome::kSeparation: ++stats.rejected_separation; ++stats.converged; break;
        case Outcome::kDegenerateContact: ++stats.rejected_contact; ++stats.converged; break;
        case Outcome::kCertification: ++stats.rejected_certification; ++stats.converged; break;
        case Outcome::kAccepted: ++stats.accepted; ++stats.converged; break;
    }
}

std::array<double, 16> bitangent_sort_key(const BitangentCandidate& c) {
    std::array<double, 16> key{};
    int k = 0;
    auto put = [&](Complex v) {
        // Rounded leading keys keep the order stable; exact values break ties.
        key[k] = std::round(v.real() * 1e9);
        key[k + 8] = v.real();
        ++k;
        key[k] = std::round(v.imag() * 1e9);
        key[k + 8] = v.imag();
        ++k;
    };
    for (const Complex& v : c.dual) put(v);
    put(c.t1);
    return key;
}

/// Order-independent stall detector for honest mode: counts dedup classes
/// as candidates stream in.
template <class Candidate>
struct IncrementalClusters {
    double distance;
    std::function<double(const Candidate&, const Candidate&)> metric;
    std::vector<Candidate> reps;

    bool add(const Candidate& c) {
        for (Candidate& rep : reps) {
            if (metric(c, rep) < distance) {
                if (c.residual < rep.residual) rep = c;
                return false;
            }
        }
        reps.push_back(c);
        return true;
    }
};

template <class Candidate, class Key>
std::vector<Candidate> dedup(const std::vector<Candidate>& candidates, double distance,
                             const Key& key_of,
                             const std::function<double(const Candidate&, const Candidate&)>& metric) {
    std::vector<const Candidate*> sorted;
    sorted.reserve(candidates.size());
    for (const auto& c : candidates) sorted.push_back(&c);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [&](const Candidate* x, const Candidate* y) { return key_of(*x) < key_of(*y); });
    std::vector<Candidate> reps;
    for (const Candidate* c : sorted) {
        bool merged = false;
        for (Candidate& rep : reps) {
            if (metric(*c, rep) < distance) {
                if (c->residual < rep.residual) rep = *c;
                merged = true;
                break;
            }
        }
        if (!merged) reps.push_back(*c);
    }
    std::stable_sort(reps.begin(), reps.end(),
                     [&](const Candidate& x, const Candidate& y) { return key_of(x) < key_of(y); });
    return reps;
}

} // namespace

double chordal_distance(const Vec3c& u, const Vec3c& v) {
    return norm2(cross(u, v)) / (norm2(u) * norm2(v));
}

bool phase_realizable(const Vec3c& v, double tol) {
    const double scale = std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
    if (scale == 0.0) return true;
    const Complex pivot = v[argmax_modulus(v)];
    const Complex phase = std::conj(pivot) / std::abs(pivot);
    for (const Complex& c : v)
        if (std::abs((c * phase).imag()) / scale >= tol) return false;
    return true;
}

std::array<double, 3> real_representative(const Vec3c& v) {
    const Complex pivot = v[argmax_modulus(v)];
    const Complex phase = std::conj(pivot) / std::abs(pivot);
    return {(v[0] * phase).real(), (v[1] * phase).real(), (v[2] * phase).real()};
}

std::vector<Complex> restrict_to_line(const PlaneCurve& curve, const Vec3c& a, const Vec3c& b) {
    const double na = norm2(a), nb = norm2(b);
    if (na < 1e-12 || nb < 1e-12 || norm2(cross(a, b)) / (na * nb) <= 1e-8)
        throw std::invalid_argument("degenerate frame: the two points do not span a line");
    TermPoly poly;
    for (const auto& [m, c] : curve.terms())
        poly.terms.push_back(Term{{m.x, m.y, m.z}, Complex(polyring::to_double(c))});
    std::vector<Complex> out = restrict_terms(poly, curve.degree(), a, b);
    double max_abs = 0.0, scale = 0.0;
    for (const auto& [m, c] : curve.terms())
        scale = std::max(scale, std::abs(polyring::to_double(c)));
    for (const Complex& c : out) max_abs = std::max(max_abs, std::abs(c));
    const double frame_scale = std::pow(std::max(na, nb), curve.degree());
    if (max_abs <= 1e-12 * scale * frame_scale)
        throw std::domain_error("the line lies inside the curve: restriction is identically zero");
    return out;
}

std::optional<TangencySolution> bitangent_from_start(const PlaneCurve& curve,
                                                     const SolverConfig& config, const Vec3c& a0,
                                                     const Vec3c& b0, const Vec3c& c0, Complex u,
                                                     Complex v, Complex t1, Complex t2) {
    const CurveEval ce = CurveEval::build(curve);
    const BitangentSystem system{ce, a0, b0, c0};
    const StartResult result = bitangent_run(ce, config, system, {u, v, t1, t2});
    if (!result.has_candidate) return std::nullopt;
    return to_solution(result.candidate);
}

std::vector<TangencySolution> find_bitangents(const PlaneCurve& curve, const SolverConfig& config,
                                              std::optional<long> expected, int workers,
                                              RunStats* stats) {
    const CurveEval ce = CurveEval::build(curve);
    RunStats local_stats;
    std::vector<BitangentCandidate> candidates;

    const auto metric = [](const BitangentCandidate& x, const BitangentCandidate& y) {
        return chordal_distance(x.dual, y.dual);
    };
    auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<StartResult> results(end - begin);
        parallel_for(begin, end, workers,
                     [&](std::uint64_t i) { results[i - begin] = bitangent_start(ce, config, i); });
        for (const StartResult& r : results) {
            ++local_stats.starts;
            tally(local_stats, r.outcome);
            if (r.has_candidate) candidates.push_back(r.candidate);
        }
    };

    if (config.start_count > 0 || expected.has_value()) {
        const long total = config.start_count > 0
                               ? config.start_count
                               : 400 * std::max<long>(*expected, 1);
        run_range(0, static_cast<std::uint64_t>(total));
    } else {
        // Honest mode: no target count; run batches until nothing new shows up.
        const long d = curve.degree();
        const long cap = 200 * d * d * d * d;
        constexpr long kBatch = 100;
        constexpr int kStallBatches = 50;
        IncrementalClusters<BitangentCandidate> clusters{config.dedup_distance, metric, {}};
        long done = 0;
        int quiet = 0;
        std::size_t fed = 0;
        while (done < cap && quiet < kStallBatches) {
            run_range(done, std::min<long>(done + kBatch, cap));
            done = std::min<long>(done + kBatch, cap);
            bool fresh = false;
            for (; fed < candidates.size(); ++fed)
                if (clusters.add(candidates[fed])) fresh = true;
            quiet = fresh ? 0 : quiet + 1;
        }
        local_stats.stalled = quiet >= kStallBatches;
    }

    const std::vector<BitangentCandidate> reps =
        dedup<BitangentCandidate>(candidates, config.dedup_distance, bitangent_sort_key, metric);
    std::vector<TangencySolution> out;
    out.reserve(reps.size());
    for (const BitangentCandidate& c : reps) out.push_back(to_solution(c));
    if (stats) *stats = local_stats;
    return out;
}

std::vector<FlexSolution> find_flexes(const PlaneCurve& curve, const SolverConfig& config,
                                      std::optional<long> expected, int workers, RunStats* stats) {
    const CurveEval ce = CurveEval::build(curve);
    RunStats local_stats;
    std::vector<FlexCandidate> candidates;

    const auto key_of = [](const FlexCandidate& c) {
        std::array<double, 12> key{};
        int k = 0;
        for (const Complex& v : c.point) {
            key[k] = std::round(v.real() * 1e9);
            key[k + 6] = v.real();
            ++k;
            key[k] = std::round(v.imag() * 1e9);
            key[k + 6] = v.imag();
            ++k;
        }
        return key;
    };
    const auto metric = [](const FlexCandidate& x, const FlexCandidate& y) {
        return chordal_distance(x.point, y.point);
    };
    auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<FlexStartResult> results(end - begin);
        parallel_for(begin, end, workers,
                     [&](std::uint64_t i) { results[i - begin] = flex_start(ce, config, i); });
        for (const FlexStartResult& r : results) {
            ++local_stats.starts;
            tally(local_stats, r.outcome);
            if (r.has_candidate) candidates.push_back(r.candidate);
        }
    };

    if (config.start_count > 0 || expected.has_value()) {
        const long total = config.start_count > 0
                               ? config.start_count
                               : 400 * std::max<long>(*expected, 1);
        run_range(0, static_cast<std::uint64_t>(total));
    } else {
        const long d = curve.degree();
        const long cap = 1200 * d * d;
        constexpr long kBatch = 100;
        constexpr int kStallBatches = 50;
        IncrementalClusters<FlexCandidate> clusters{config.dedup_distance, metric, {}};
        long done = 0;
        int quiet = 0;
        std::size_t fed = 0;
        while (done < cap && quiet < kStallBatches) {
            run_range(done, std::min<long>(done + kBatch, cap));
            done = std::min<long>(done + kBatch, cap);
            bool fresh = false;
            for (; fed < candidates.size(); ++fed)
                if (clusters.add(candidates[fed])) fresh = true;
            quiet = fresh ? 0 : quiet + 1;
        }
        local_stats.stalled = quiet >= kStallBatches;
    }

    const std::vector<FlexCandidate> reps =
        dedup<FlexCandidate>(candidates, config.dedup_distance, key_of, metric);
    std::vector<FlexSolution> out;
    out.reserve(reps.size());
    for (const FlexCandidate& c : reps)
        out.push_back(FlexSolution{c.point, c.residual, phase_realizable(c.point, kRealTolerance)});
    if (stats) *stats = local_stats;
    return out;
}

} // namespace pluecker::numeric
