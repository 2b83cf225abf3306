// report.cpp

#include "gapforge/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace gapforge {

namespace {

using ordered_json = nlohmann::ordered_json;

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

// Reals are rounded to 12 significant digits before insertion so the dumped
// document carries them at that precision.
double round12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::strtod(buf, nullptr);
}

ordered_json vector_json(const Vector& v) {
    ordered_json arr = ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        arr.push_back({{"re", round12(v(i).real())}, {"im", round12(v(i).imag())}});
    return arr;
}

ordered_json certificate_json(const witness::Certificate& cert) {
    ordered_json node;
    node["kind"] = witness::to_string(cert.kind);
    if (cert.kind == witness::Kind::none) return node;
    if (cert.lambda)
        node["lambda"] = round12(*cert.lambda);
    else
        node["lambda"] = nullptr;
    node["diameter_bound"] = round12(cert.diameter_bound);
    node["time_bound"] = round12(cert.time_bound);
    node["X"] = vector_json(cert.X);
    node["Y"] = vector_json(cert.Y);
    return node;
}

}  // namespace

GapReport analyze(const QuantumSystem& system, const est::OptimizerConfig& cfg,
                  const AnalyzeOptions& options) {
    system.validate();
    cfg.validate();
    if (options.trials < 1) throw std::invalid_argument("analyze: trials must be at least 1");
    const int flags = (options.tensor ? 1 : 0) + (options.wedge ? 1 : 0) +
                      (options.cartan ? 1 : 0);
    if (flags > 1)
        throw std::invalid_argument("analyze: structural flags are mutually exclusive");
    if (options.tensor) {
        const auto [p, q] = *options.tensor;
        if (p * q != system.n)
            throw std::invalid_argument("analyze: tensor flag " + std::to_string(p) + "x" +
                                        std::to_string(q) + " does not match dimension " +
                                        std::to_string(system.n));
    }
    if (options.wedge) {
        const auto [wn, wk] = *options.wedge;
        if (binomial(wn, wk) != system.n)
            throw std::invalid_argument("analyze: wedge flag (" + std::to_string(wn) + ", " +
                                        std::to_string(wk) + ") does not match dimension " +
                                        std::to_string(system.n));
    }
    if (options.cartan && options.cartan->h1.size() * options.cartan->h2.size() != system.n)
        throw std::invalid_argument("analyze: cartan weight dimensions do not match the system");

    GapReport report;
    report.n = system.n;
    report.control_count = static_cast<int>(system.controls.size());
    report.config = cfg;
    report.options = options;
    report.notes = options.load_notes;

    // Certificates come from the control group alone; the drift enters only
    // the side controllability check below.
    const lie::LieAlgebraBasis closure = lie::bracket_closure(system.controls, options.tol);
    report.profile = lie::classify(closure, options.trials, cfg.seed);

    std::vector<Matrix> with_drift = system.controls;
    with_drift.push_back(system.drift);
    const lie::LieAlgebraBasis full = lie::bracket_closure(with_drift, options.tol);
    report.drift_closure_dim = full.dim();
    report.drift_transitive = lie::is_transitive(full, options.trials, cfg.seed);

    if (report.profile.transitive) {
        report.certificate.kind = witness::Kind::transitive;
        Vector e0 = Vector::Zero(system.n);
        e0(0) = 1.0;
        report.certificate.X = e0;
        report.certificate.Y = e0;
        report.t_lower = 0.0;
        if (flags > 0)
            report.notes.push_back("structural flag ignored: the control group is transitive");
    } else {
        bool have_cert = false;
        if (report.profile.realification_reducible) {
            const lie::RealSplit split = lie::invariant_real_split(closure, options.tol);
            if (split.found) {
                report.certificate =
                    witness::reducible_witness(closure.elements, split.first, split.second);
                have_cert = true;
                if (flags > 0)
                    report.notes.push_back(
                        "structural flag ignored: a reducibility certificate is stronger");
            } else {
                report.notes.push_back(
                    "realification looks reducible but no invariant splitting was recovered");
            }
        }
        if (!have_cert && options.tensor) {
            const auto [p, q] = *options.tensor;
            report.certificate = witness::tensor_witness(p, q);
            have_cert = true;
        }
        if (!have_cert && options.wedge) {
            const auto [wn, wk] = *options.wedge;
            report.certificate = witness::wedge_witness(wn, wk);
            if (2 * wk > wn)
                report.notes.push_back(
                    "wedge degree above n/2: witness carried over from the conjugate action at "
                    "degree " +
                    std::to_string(wn - wk) + "; the overlap cap transfers unchanged");
            have_cert = true;
        }
        if (!have_cert && options.cartan) {
            const CartanWeights& w = *options.cartan;
            report.certificate = witness::cartan_witness(w.h1, w.l1, w.h2, w.l2);
            have_cert = true;
        }
        if (have_cert) {
            report.t_lower = report.certificate.time_bound;
        } else {
            report.certificate.kind = witness::Kind::none;
            report.t_lower = std::nullopt;
            report.notes.push_back(
                "no certificate found: minimum time unbounded from below by this analysis");
        }
    }

    const witness::DimensionReport dim = witness::classify_dimension(system.n);
    report.dimension_class = dim.cls;
    for (const std::string& note : dim.notes) report.notes.push_back(note);

    if (!options.skip_estimate) report.estimate = est::estimate_D(closure, cfg);
    return report;
}

std::string report_to_json(const GapReport& report) {
    report.certificate.validate();

    ordered_json doc;
    doc["format"] = "gapforge-report";
    doc["version"] = 1;
    doc["system"] = {{"n", report.n}, {"controls", report.control_count}};
    doc["profile"] = {
        {"transitive", report.profile.transitive},
        {"complex_irreducible", report.profile.complex_irreducible},
        {"bilinear_type", lie::to_string(report.profile.bilinear_type)},
        {"realification_reducible", report.profile.realification_reducible},
        {"algebra_dim", report.profile.algebra_dim},
        {"orbit_tangent_dim", report.profile.orbit_tangent_dim},
    };
    doc["drift"] = {{"closure_dim", report.drift_closure_dim},
                    {"transitive", report.drift_transitive}};
    doc["certificate"] = certificate_json(report.certificate);
    if (report.estimate) {
        const est::DiameterEstimate& e = *report.estimate;
        doc["estimate"] = {
            {"D_est", round12(e.D_est)},       {"M_est", round12(e.M_est)},
            {"R_est", round12(e.R_est)},       {"X", vector_json(e.X)},
            {"Y", vector_json(e.Y)},           {"converged", e.converged},
            {"evaluations", e.evaluations},
        };
    } else {
        doc["estimate"] = nullptr;
    }
    doc["dimension_class"] = witness::to_string(report.dimension_class);
    if (report.t_lower)
        doc["T_lower"] = round12(*report.t_lower);
    else
        doc["T_lower"] = "unbounded-unknown";
    doc["notes"] = report.notes;

    std::string structure = "none";
    if (report.options.tensor)
        structure = "tensor " + std::to_string(report.options.tensor->first) + " " +
                    std::to_string(report.options.tensor->second);
    else if (report.options.wedge)
        structure = "wedge " + std::to_string(report.options.wedge->first) + " " +
                    std::to_string(report.options.wedge->second);
    else if (report.options.cartan)
        structure = "cartan";
    doc["config"] = {
        {"seed", report.config.seed},
        {"starts", report.config.starts},
        {"max_iters", report.config.max_iters},
        {"step_init", round12(report.config.step_init)},
        {"step_shrink", round12(report.config.step_shrink)},
        {"conv_tol", round12(report.config.conv_tol)},
        {"tol", round12(report.options.tol)},
        {"trials", report.options.trials},
        {"skip_estimate", report.options.skip_estimate},
        {"normalize", report.options.normalize},
        {"structure", structure},
    };
    return doc.dump(2) + "\n";
}

void emit_report(const GapReport& report, const std::string& path) {
    const std::string text = report_to_json(report);
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("emit_report: cannot open " + path);
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("emit_report: write failed for " + path);
}

}  // namespace gapforge
