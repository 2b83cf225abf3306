// system.cpp

#include "gapforge/system.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gapforge {

namespace {

using nlohmann::json;

json read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("load: cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& err) {
        throw std::invalid_argument("load: " + path + " is not valid JSON (" +
                                    std::string(err.what()) + ")");
    }
    return doc;
}

Complex parse_entry(const json& node, const std::string& where) {
    if (!node.is_object() || !node.contains("re") || !node.contains("im") ||
        !node["re"].is_number() || !node["im"].is_number())
        throw std::invalid_argument(where + ": entries must be {\"re\": ..., \"im\": ...}");
    return Complex(node["re"].get<double>(), node["im"].get<double>());
}

Vector parse_vector(const json& node, const std::string& where) {
    if (!node.is_array() || node.empty())
        throw std::invalid_argument(where + ": non-empty array of entries required");
    Vector v(static_cast<Eigen::Index>(node.size()));
    for (size_t i = 0; i < node.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = parse_entry(node[i], where);
    return v;
}

Matrix parse_matrix(const json& node, int n, const std::string& where) {
    if (!node.is_array() || static_cast<int>(node.size()) != n)
        throw std::invalid_argument(where + ": expected " + std::to_string(n) + " rows");
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        const json& row = node[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::invalid_argument(where + ": row " + std::to_string(i) + " must have " +
                                        std::to_string(n) + " entries");
        for (int j = 0; j < n; ++j)
            m(i, j) = parse_entry(row[static_cast<size_t>(j)],
                                  where + " entry (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ")");
    }
    return m;
}

}  // namespace

void QuantumSystem::validate() const {
    if (n <= 0) throw std::invalid_argument("QuantumSystem: dimension must be positive");
    if (drift.rows() != n || drift.cols() != n)
        throw std::invalid_argument("QuantumSystem: drift is not " + std::to_string(n) + "x" +
                                    std::to_string(n));
    num::require_finite(drift, "QuantumSystem: drift");
    if (num::skew_residual(drift) > 1e-10)
        throw std::invalid_argument("QuantumSystem: drift is not skew-Hermitian (relative "
                                    "defect " +
                                    std::to_string(num::skew_residual(drift)) + ")");
    const double norm = num::operator_norm(drift);
    if (std::abs(norm - 1.0) > 1e-8)
        throw std::invalid_argument("QuantumSystem: drift operator norm is " +
                                    std::to_string(norm) + ", expected 1");
    if (controls.empty()) throw std::invalid_argument("QuantumSystem: no controls");
    for (size_t k = 0; k < controls.size(); ++k) {
        const Matrix& b = controls[k];
        const std::string tag = "QuantumSystem: control " + std::to_string(k);
        if (b.rows() != n || b.cols() != n)
            throw std::invalid_argument(tag + " is not " + std::to_string(n) + "x" +
                                        std::to_string(n));
        num::require_finite(b, tag.c_str());
        if (num::skew_residual(b) > 1e-10)
            throw std::invalid_argument(tag + " is not skew-Hermitian (relative defect " +
                                        std::to_string(num::skew_residual(b)) + ")");
    }
}

LoadedSystem load_system(const std::string& path, bool normalize) {
    const json doc = read_document(path);
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw std::invalid_argument("load_system: " + path + " lacks an integer field \"n\"");
    LoadedSystem loaded;
    QuantumSystem& sys = loaded.system;
    sys.n = doc["n"].get<int>();
    if (sys.n <= 0)
        throw std::invalid_argument("load_system: " + path + ": \"n\" must be positive");
    if (!doc.contains("drift"))
        throw std::invalid_argument("load_system: " + path + " lacks \"drift\"");
    sys.drift = parse_matrix(doc["drift"], sys.n, "load_system: drift");
    if (!doc.contains("controls") || !doc["controls"].is_array() || doc["controls"].empty())
        throw std::invalid_argument("load_system: " + path +
                                    " lacks a non-empty \"controls\" array");
    for (size_t k = 0; k < doc["controls"].size(); ++k)
        sys.controls.push_back(parse_matrix(doc["controls"][k], sys.n,
                                            "load_system: control " + std::to_string(k)));

    if (normalize) {
        const double norm = num::operator_norm(sys.drift);
        if (norm <= 0.0)
            throw std::invalid_argument("load_system: " + path + ": drift vanishes, cannot "
                                        "normalize");
        if (std::abs(norm - 1.0) > 1e-8) {
            sys.drift /= norm;
            std::ostringstream note;
            note.precision(12);
            note << "drift rescaled by 1/" << norm << " to unit operator norm";
            loaded.notes.push_back(note.str());
        }
    }
    sys.validate();
    return loaded;
}

double ControlSchedule::total_duration() const {
    double total = 0.0;
    for (const ControlSegment& seg : segments) total += seg.duration;
    return total;
}

ControlSchedule load_schedule(const std::string& path) {
    const json doc = read_document(path);
    if (!doc.contains("segments") || !doc["segments"].is_array() || doc["segments"].empty())
        throw std::invalid_argument("load_schedule: " + path +
                                    " lacks a non-empty \"segments\" array");
    ControlSchedule schedule;
    for (size_t i = 0; i < doc["segments"].size(); ++i) {
        const json& node = doc["segments"][i];
        const std::string where = "load_schedule: segment " + std::to_string(i);
        if (!node.is_object() || !node.contains("duration") || !node["duration"].is_number() ||
            !node.contains("u") || !node["u"].is_array())
            throw std::invalid_argument(where + " must be {\"duration\": ..., \"u\": [...]}");
        ControlSegment seg;
        seg.duration = node["duration"].get<double>();
        if (!(seg.duration > 0.0))
            throw std::invalid_argument(where + ": duration must be positive");
        for (const json& val : node["u"]) {
            if (!val.is_number()) throw std::invalid_argument(where + ": controls must be real");
            seg.u.push_back(val.get<double>());
        }
        schedule.segments.push_back(std::move(seg));
    }
    return schedule;
}

CartanWeights load_cartan_weights(const std::string& path) {
    const json doc = read_document(path);
    CartanWeights weights;
    const auto get = [&](const char* name) {
        if (!doc.contains(name))
            throw std::invalid_argument("load_cartan_weights: " + path + " lacks \"" +
                                        std::string(name) + "\"");
        return parse_vector(doc[name], "load_cartan_weights: " + std::string(name));
    };
    weights.h1 = get("h1");
    weights.l1 = get("l1");
    weights.h2 = get("h2");
    weights.l2 = get("l2");
    return weights;
}

}  // namespace gapforge
