// estimator.hpp — Numerical sup-inf estimates over the control group:
// Riemannian multistart ascent for the best overlap at a state pair, outer
// sphere-pair optimization for diameter and minimal-overlap estimates, and
// orbit-reduced distance traces along control schedules.

#pragma once

#include "gapforge/liealg.hpp"
#include "gapforge/system.hpp"

#include <cstdint>
#include <vector>

namespace gapforge::est {

struct OptimizerConfig {
    std::uint64_t seed = 0;
    int starts = 32;
    int max_iters = 500;
    double step_init = 0.5;
    double step_shrink = 0.5;
    double conv_tol = 1e-8;

    void validate() const;
};

// Multistart ascent result at a fixed pair. abs_max estimates
// sup_g |<gX,Y>| (the global phase is handled analytically), re_max
// estimates sup_g Re<gX,Y>, both from below; g_best attains abs_max.
struct OverlapResult {
    double abs_max = 0.0;
    double re_max = 0.0;
    Matrix g_best;
    long evaluations = 0;
    bool converged = false;
};

OverlapResult sup_overlap(const lie::LieAlgebraBasis& basis, const Vector& x, const Vector& y,
                          const OptimizerConfig& cfg);

// Smallest inner sup of |<gX,Y>| found over optimized sphere pairs: a
// numerical estimate of M(G). One-sided: the inner ascent reaches the sup
// from below, the outer search may miss better pairs.
double estimate_M(const lie::LieAlgebraBasis& basis, const OptimizerConfig& cfg);

// Largest orbit-to-point distance found: D_est = sqrt(2 - 2 R_est) at the
// reported pair, with M_est and R_est the full-quality overlap estimates
// there. A lower-bound-style estimate of D(G).
struct DiameterEstimate {
    double D_est = 0.0;
    double M_est = 0.0;
    double R_est = 0.0;
    Vector X;
    Vector Y;
    bool converged = false;
    long evaluations = 0;
};

DiameterEstimate estimate_D(const lie::LieAlgebraBasis& basis, const OptimizerConfig& cfg);

// Orbit-reduced arc distance from the initial state along a piecewise-
// constant schedule, sampled uniformly on (0, horizon]. distance is
// arccos of the clamped best Re-overlap against the control group; bound is
// the elapsed time (unit drift speed).
struct TracePoint {
    double t = 0.0;
    double distance = 0.0;
    double bound = 0.0;
};

std::vector<TracePoint> orbit_distance_trace(const QuantumSystem& system,
                                             const ControlSchedule& schedule, const Vector& x0,
                                             double horizon, int samples,
                                             const OptimizerConfig& cfg);

}  // namespace gapforge::est
