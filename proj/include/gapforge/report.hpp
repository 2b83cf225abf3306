// report.hpp — The analysis ladder tying the modules together: classify the
// control algebra, attach the strongest applicable certificate, estimate the
// diameter, and serialize a deterministic machine-readable report.

#pragma once

#include "gapforge/estimator.hpp"
#include "gapforge/liealg.hpp"
#include "gapforge/system.hpp"
#include "gapforge/witness.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gapforge {

// Caller-declared structure and pipeline switches. Structural flags are
// mutually exclusive; they only matter when no transitivity or reducibility
// verdict settles the question first.
struct AnalyzeOptions {
    bool normalize = false;
    bool skip_estimate = false;
    int trials = 4;
    double tol = 1e-9;
    std::optional<std::pair<int, int>> tensor;  // p, q with p*q = n
    std::optional<std::pair<int, int>> wedge;   // n, k with C(n, k) = system n
    std::optional<CartanWeights> cartan;
    std::vector<std::string> load_notes;
};

struct GapReport {
    int n = 0;
    int control_count = 0;
    lie::RepresentationProfile profile;
    int drift_closure_dim = 0;
    bool drift_transitive = false;
    witness::Certificate certificate;
    std::optional<est::DiameterEstimate> estimate;
    witness::DimensionClass dimension_class = witness::DimensionClass::generic;
    std::optional<double> t_lower;  // empty means unbounded-unknown
    std::vector<std::string> notes;
    est::OptimizerConfig config;
    AnalyzeOptions options;
};

GapReport analyze(const QuantumSystem& system, const est::OptimizerConfig& cfg,
                  const AnalyzeOptions& options);

// Stable field order, reals at 12 significant digits; reruns with the same
// inputs and seed are byte-identical. Certificates are re-validated here.
std::string report_to_json(const GapReport& report);

void emit_report(const GapReport& report, const std::string& path);

}  // namespace gapforge
