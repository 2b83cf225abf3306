// system.hpp — Bilinear control systems on the unit sphere of C^n and their
// on-disk formats: a drift, a list of control directions, piecewise-constant
// control schedules, and caller-supplied weight vectors.

#pragma once

#include "gapforge/numkernel.hpp"

#include <string>
#include <vector>

namespace gapforge {

// dx/dt = (A + sum_i u_i B_i) x with skew-Hermitian A (unit operator norm)
// and skew-Hermitian controls B_i.
struct QuantumSystem {
    int n = 0;
    Matrix drift;
    std::vector<Matrix> controls;

    // Throws std::invalid_argument naming the offending matrix.
    void validate() const;
};

struct LoadedSystem {
    QuantumSystem system;
    std::vector<std::string> notes;
};

// Reads {"n": ..., "drift": [[{re,im},...],...], "controls": [...]}. With
// normalize set, a drift of non-unit operator norm is rescaled and the
// factor recorded in the notes; otherwise it is rejected.
LoadedSystem load_system(const std::string& path, bool normalize = false);

struct ControlSegment {
    double duration = 0.0;
    std::vector<double> u;
};

struct ControlSchedule {
    std::vector<ControlSegment> segments;

    double total_duration() const;
};

// Reads {"segments": [{"duration": ..., "u": [...]}, ...]}.
ControlSchedule load_schedule(const std::string& path);

struct CartanWeights {
    Vector h1, l1, h2, l2;
};

// Reads {"h1": [{re,im},...], "l1": ..., "h2": ..., "l2": ...}.
CartanWeights load_cartan_weights(const std::string& path);

}  // namespace gapforge
