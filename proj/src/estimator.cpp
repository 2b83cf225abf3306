// estimator.cpp

#include "gapforge/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace gapforge::est {

namespace {

using lie::LieAlgebraBasis;

constexpr int kOuterIters = 60;
constexpr int kLineSearchCap = 50;
// Salts keeping the random streams of group starts and sphere pairs apart.
constexpr std::uint64_t kStartSalt = 0x51a7;
constexpr std::uint64_t kPairSalt = 0xb0a7;

std::mt19937_64 derived_rng(std::uint64_t seed, std::uint64_t salt, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

enum class Objective { abs, re };

double value_of(Complex w, Objective obj) {
    return obj == Objective::abs ? std::abs(w) : w.real();
}

struct AscentOut {
    double abs_v = 0.0;
    double re_v = 0.0;
    Matrix g;
    long evals = 0;
    bool converged = false;
};

// Backtracking gradient ascent of the chosen overlap objective along the
// group, moving z = gX by exponentials of algebra directions. The gradient
// coefficient along L is Re(<Lz,Y> rho) with rho the phase alignment (1 for
// the Re objective).
AscentOut ascend(const LieAlgebraBasis& basis, const Vector& x, const Vector& y, Matrix g,
                 Objective obj, const OptimizerConfig& cfg) {
    const int m = basis.dim();
    AscentOut out;
    Vector z = g * x;
    z.normalize();
    Complex w = num::hermitian_inner(z, y);
    double val = value_of(w, obj);
    out.evals = 1;

    std::vector<double> gamma(static_cast<size_t>(m));
    Matrix dir(basis.n, basis.n);
    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        Complex rho(1.0, 0.0);
        if (obj == Objective::abs) {
            const double aw = std::abs(w);
            if (aw > 1e-14) rho = std::conj(w) / aw;
        }
        double gn2 = 0.0;
        for (int k = 0; k < m; ++k) {
            const Complex dw =
                num::hermitian_inner(basis.elements[static_cast<size_t>(k)] * z, y);
            gamma[static_cast<size_t>(k)] = (dw * rho).real();
            gn2 += gamma[static_cast<size_t>(k)] * gamma[static_cast<size_t>(k)];
        }
        const double gn = std::sqrt(gn2);
        if (gn < cfg.conv_tol) {
            out.converged = true;
            break;
        }

        dir.setZero();
        for (int k = 0; k < m; ++k)
            dir += (gamma[static_cast<size_t>(k)] / gn) * basis.elements[static_cast<size_t>(k)];

        double s = cfg.step_init;
        bool accepted = false;
        for (int ls = 0; ls < kLineSearchCap && s > 1e-15; ++ls, s *= cfg.step_shrink) {
            const Matrix u = num::expm_skew(dir, s);
            Vector z2 = u * z;
            z2.normalize();
            const Complex w2 = num::hermitian_inner(z2, y);
            ++out.evals;
            if (value_of(w2, obj) > val + 1e-4 * s * gn) {
                g = u * g;
                z = std::move(z2);
                w = w2;
                val = value_of(w, obj);
                accepted = true;
                break;
            }
        }
        if (!accepted) break;
    }

    out.abs_v = std::abs(w);
    out.re_v = w.real();
    out.g = std::move(g);
    return out;
}

struct SolveOut {
    double abs_max = 0.0;
    double re_max = -std::numeric_limits<double>::infinity();
    Matrix g_abs;
    Matrix g_re;
    long evals = 0;
    bool conv_abs = false;
    bool conv_re = false;
};

// Multistart driver: identity start, cfg.starts - 1 random group starts,
// then any warm starts the caller carries over. Every ascent endpoint
// lower-bounds both sups, so both tracks are fed from all runs.
SolveOut solve(const LieAlgebraBasis& basis, const Vector& x, const Vector& y,
               const OptimizerConfig& cfg, bool do_abs, bool do_re,
               const std::vector<Matrix>& warm_starts) {
    SolveOut out;
    const int m = basis.dim();

    std::vector<Matrix> starts;
    starts.reserve(static_cast<size_t>(cfg.starts) + warm_starts.size());
    starts.push_back(Matrix::Identity(basis.n, basis.n));
    for (int k = 1; k < cfg.starts; ++k) {
        std::mt19937_64 rng = derived_rng(cfg.seed, kStartSalt, static_cast<std::uint64_t>(k));
        std::normal_distribution<double> normal(0.0, 1.0);
        Matrix delta = Matrix::Zero(basis.n, basis.n);
        for (int j = 0; j < m; ++j) delta += normal(rng) * basis.elements[static_cast<size_t>(j)];
        starts.push_back(num::expm_skew(delta, 1.0));
    }
    for (const Matrix& g : warm_starts) starts.push_back(g);

    const auto feed = [&](const AscentOut& a, Objective obj) {
        out.evals += a.evals;
        if (a.abs_v > out.abs_max || out.g_abs.size() == 0) {
            out.abs_max = a.abs_v;
            out.g_abs = a.g;
            if (obj == Objective::abs) out.conv_abs = a.converged;
        }
        if (a.re_v > out.re_max || out.g_re.size() == 0) {
            out.re_max = a.re_v;
            out.g_re = a.g;
            if (obj == Objective::re) out.conv_re = a.converged;
        }
    };

    for (const Matrix& g0 : starts) {
        if (do_abs) feed(ascend(basis, x, y, g0, Objective::abs, cfg), Objective::abs);
        if (do_re) feed(ascend(basis, x, y, g0, Objective::re, cfg), Objective::re);
    }
    return out;
}

void validate_pair(const LieAlgebraBasis& basis, const Vector& x, const Vector& y,
                   const char* what) {
    if (basis.dim() == 0) throw std::invalid_argument(std::string(what) + ": empty basis");
    if (!basis.closed) throw std::invalid_argument(std::string(what) + ": basis is not closed");
    if (x.size() != basis.n || y.size() != basis.n)
        throw std::invalid_argument(std::string(what) + ": pair dimension mismatch");
    if (std::abs(x.norm() - 1.0) > 1e-10 || std::abs(y.norm() - 1.0) > 1e-10)
        throw std::invalid_argument(std::string(what) + ": unit vectors required");
}

// Start pairs for the outer sphere search: a deterministic pool built from
// standard basis vectors (the shapes witness pairs take), then random pairs.
std::vector<std::pair<Vector, Vector>> start_pairs(int n, const OptimizerConfig& cfg) {
    const Complex imag(0.0, 1.0);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<std::pair<Vector, Vector>> canonical;
    Vector e0 = Vector::Zero(n);
    e0(0) = 1.0;
    for (int j = 1; j < n; ++j) {
        Vector y = Vector::Zero(n);
        y(0) = inv_sqrt2;
        y(j) = inv_sqrt2;
        canonical.emplace_back(e0, y);
    }
    for (int j = 1; j < n; ++j) {
        Vector y = Vector::Zero(n);
        y(j) = 1.0;
        canonical.emplace_back(e0, y);
    }
    for (int j = 0; j < n; ++j) {
        Vector y = Vector::Zero(n);
        y(j) = imag;
        canonical.emplace_back(e0, y);
    }

    std::vector<std::pair<Vector, Vector>> pairs;
    const size_t want = static_cast<size_t>(cfg.starts);
    const size_t ncanon = std::min(canonical.size(), want - want / 2);
    for (size_t i = 0; i < ncanon; ++i) pairs.push_back(canonical[i]);
    for (size_t i = pairs.size(); i < want; ++i) {
        std::mt19937_64 rng = derived_rng(cfg.seed, kPairSalt, i);
        Vector x = num::random_unit_vector(n, rng);
        Vector y = num::random_unit_vector(n, rng);
        pairs.emplace_back(std::move(x), std::move(y));
    }
    return pairs;
}

Vector tangent_part(const Vector& grad, const Vector& at) {
    return grad - num::hermitian_inner(grad, at).real() * at;
}

}  // namespace

void OptimizerConfig::validate() const {
    if (starts < 1) throw std::invalid_argument("OptimizerConfig: starts must be at least 1");
    if (max_iters < 1) throw std::invalid_argument("OptimizerConfig: max_iters must be at least 1");
    if (!(step_init > 0.0)) throw std::invalid_argument("OptimizerConfig: step_init must be positive");
    if (!(step_shrink > 0.0 && step_shrink < 1.0))
        throw std::invalid_argument("OptimizerConfig: step_shrink must lie in (0, 1)");
    if (!(conv_tol > 0.0)) throw std::invalid_argument("OptimizerConfig: conv_tol must be positive");
}

OverlapResult sup_overlap(const lie::LieAlgebraBasis& basis, const Vector& x, const Vector& y,
                          const OptimizerConfig& cfg) {
    cfg.validate();
    validate_pair(basis, x, y, "sup_overlap");
    const SolveOut s = solve(basis, x, y, cfg, true, true, {});
    OverlapResult out;
    out.abs_max = s.abs_max;
    out.re_max = s.re_max;
    out.g_best = s.g_abs;
    out.evaluations = s.evals;
    out.converged = s.conv_abs;
    return out;
}

double estimate_M(const lie::LieAlgebraBasis& basis, const OptimizerConfig& cfg) {
    cfg.validate();
    if (basis.dim() == 0 || !basis.closed)
        throw std::invalid_argument("estimate_M: closed basis required");
    const int n = basis.n;

    OptimizerConfig light = cfg;
    light.starts = 2;

    double best = std::numeric_limits<double>::infinity();
    for (auto& [x0, y0] : start_pairs(n, cfg)) {
        Vector x = x0, y = y0;
        SolveOut cur = solve(basis, x, y, light, true, false, {});
        double v = cur.abs_max;
        Matrix gw = cur.g_abs;

        // Projected descent of the inner sup over the sphere pair, gradient
        // taken at the best group element found (Danskin direction).
        for (int outer = 0; outer < kOuterIters; ++outer) {
            const Complex w = num::hermitian_inner(gw * x, y);
            const double aw = std::abs(w);
            if (aw < 1e-12) break;  // zero overlap: nothing left to minimize
            const Complex phase = w / aw;
            const Vector gx = tangent_part(phase * (gw.adjoint() * y), x);
            const Vector gy = tangent_part(std::conj(phase) * (gw * x), y);
            const double gn = std::sqrt(gx.squaredNorm() + gy.squaredNorm());
            if (gn < cfg.conv_tol) break;

            double s = cfg.step_init;
            bool accepted = false;
            for (int ls = 0; ls < kLineSearchCap && s > 1e-12; ++ls, s *= cfg.step_shrink) {
                const Vector x2 = (x - s * gx).normalized();
                const Vector y2 = (y - s * gy).normalized();
                const SolveOut trial = solve(basis, x2, y2, light, true, false, {gw});
                if (trial.abs_max < v - 1e-4 * s * gn) {
                    x = x2;
                    y = y2;
                    v = trial.abs_max;
                    gw = trial.g_abs;
                    accepted = true;
                    break;
                }
            }
            if (!accepted) break;
        }

        const SolveOut fin = solve(basis, x, y, cfg, true, false, {gw});
        best = std::min(best, fin.abs_max);
    }
    return best;
}

DiameterEstimate estimate_D(const lie::LieAlgebraBasis& basis, const OptimizerConfig& cfg) {
    cfg.validate();
    if (basis.dim() == 0 || !basis.closed)
        throw std::invalid_argument("estimate_D: closed basis required");
    const int n = basis.n;

    OptimizerConfig light = cfg;
    light.starts = 2;

    DiameterEstimate out;
    out.D_est = -1.0;
    for (auto& [x0, y0] : start_pairs(n, cfg)) {
        Vector x = x0, y = y0;
        SolveOut cur = solve(basis, x, y, light, false, true, {});
        double r = cur.re_max;
        Matrix gw = cur.g_re;
        out.evaluations += cur.evals;

        // The diameter grows as the best Re-overlap shrinks, so the outer
        // pass descends r over the sphere pair.
        for (int outer = 0; outer < kOuterIters; ++outer) {
            const Vector gx = tangent_part(gw.adjoint() * y, x);
            const Vector gy = tangent_part(gw * x, y);
            const double gn = std::sqrt(gx.squaredNorm() + gy.squaredNorm());
            if (gn < cfg.conv_tol) break;

            double s = cfg.step_init;
            bool accepted = false;
            for (int ls = 0; ls < kLineSearchCap && s > 1e-12; ++ls, s *= cfg.step_shrink) {
                const Vector x2 = (x - s * gx).normalized();
                const Vector y2 = (y - s * gy).normalized();
                const SolveOut trial = solve(basis, x2, y2, light, false, true, {gw});
                out.evaluations += trial.evals;
                if (trial.re_max < r - 1e-4 * s * gn) {
                    x = x2;
                    y = y2;
                    r = trial.re_max;
                    gw = trial.g_re;
                    accepted = true;
                    break;
                }
            }
            if (!accepted) break;
        }

        const SolveOut fin = solve(basis, x, y, cfg, true, true, {gw});
        out.evaluations += fin.evals;
        const double r_fin = std::min(fin.re_max, 1.0);
        const double d = std::sqrt(std::max(0.0, 2.0 - 2.0 * r_fin));
        if (d > out.D_est) {
            out.D_est = d;
            out.M_est = fin.abs_max;
            out.R_est = fin.re_max;
            out.X = x;
            out.Y = y;
            out.converged = fin.conv_abs && fin.conv_re;
        }
    }
    return out;
}

std::vector<TracePoint> orbit_distance_trace(const QuantumSystem& system,
                                             const ControlSchedule& schedule, const Vector& x0,
                                             double horizon, int samples,
                                             const OptimizerConfig& cfg) {
    cfg.validate();
    system.validate();
    if (x0.size() != system.n)
        throw std::invalid_argument("orbit_distance_trace: initial state has dimension " +
                                    std::to_string(x0.size()) + ", expected " +
                                    std::to_string(system.n));
    if (std::abs(x0.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("orbit_distance_trace: initial state must be unit");
    if (!(horizon > 0.0)) throw std::invalid_argument("orbit_distance_trace: horizon must be positive");
    if (samples < 1) throw std::invalid_argument("orbit_distance_trace: samples must be at least 1");
    if (schedule.segments.empty())
        throw std::invalid_argument("orbit_distance_trace: empty schedule");
    if (schedule.total_duration() + 1e-12 < horizon)
        throw std::invalid_argument("orbit_distance_trace: schedule covers " +
                                    std::to_string(schedule.total_duration()) +
                                    ", horizon is " + std::to_string(horizon));
    for (size_t i = 0; i < schedule.segments.size(); ++i)
        if (schedule.segments[i].u.size() != system.controls.size())
            throw std::invalid_argument("orbit_distance_trace: segment " + std::to_string(i) +
                                        " has " + std::to_string(schedule.segments[i].u.size()) +
                                        " controls, system has " +
                                        std::to_string(system.controls.size()));

    // The comparison group is generated by the controls alone.
    const lie::LieAlgebraBasis basis = lie::bracket_closure(system.controls);

    OptimizerConfig inner = cfg;
    inner.starts = std::min(cfg.starts, 8);

    std::vector<TracePoint> points;
    points.reserve(static_cast<size_t>(samples));

    Vector x = x0;
    double t_cur = 0.0;
    size_t seg = 0;
    double seg_left = schedule.segments[0].duration;
    std::vector<Matrix> warm;

    for (int i = 1; i <= samples; ++i) {
        const double t_target = horizon * i / samples;
        while (t_target - t_cur > 1e-15) {
            while (seg_left <= 1e-15 && seg + 1 < schedule.segments.size())
                seg_left = schedule.segments[++seg].duration;
            const double dt = std::min(seg_left, t_target - t_cur);
            Matrix h = system.drift;
            for (size_t b = 0; b < system.controls.size(); ++b)
                h += schedule.segments[seg].u[b] * system.controls[b];
            x = num::expm_skew(h, dt) * x;
            x.normalize();
            t_cur += dt;
            seg_left -= dt;
        }

        const SolveOut s = solve(basis, x, x0, inner, false, true, warm);
        const double re = std::clamp(s.re_max, -1.0, 1.0);
        points.push_back({t_target, std::acos(re), t_target});
        warm.assign(1, s.g_re);
    }
    return points;
}

}  // namespace gapforge::est
