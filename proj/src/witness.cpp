// witness.cpp

#include "gapforge/witness.hpp"

#include "gapforge/repkit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace gapforge::witness {

namespace {

const Complex kI(0.0, 1.0);

// Dimensions admitting transitive actions of exceptional type. Two published
// variants of the E8-related entry circulate (24502400 and 24502500); both
// are honored and the discrepancy is surfaced in classify_dimension notes.
constexpr std::array<std::int64_t, 19> kExceptionalDims = {
    1274, 273,    26,         2925,        27,      351,  912,
    56,   1539,   27664,      365750,      8645,    147250,
    72912, 24502400, 5121384450, 87587590464, 6696000, 3875};
constexpr std::int64_t kE8EntryPrimary = 24502400;
constexpr std::int64_t kE8EntryVariant = 24502500;

void require_unit(const Vector& v, const char* what) {
    if (v.size() == 0) throw std::invalid_argument(std::string(what) + ": empty vector");
    if (std::abs(v.norm() - 1.0) > 1e-10)
        throw std::invalid_argument(std::string(what) + ": unit vector required");
}

Certificate capped_pair(Kind kind, Vector x, Vector y) {
    Certificate cert;
    cert.kind = kind;
    cert.X = std::move(x);
    cert.Y = std::move(y);
    cert.lambda = 1.0 / std::sqrt(2.0);
    cert.diameter_bound = *bound_from_M(*cert.lambda);
    cert.time_bound = time_bound_from_D(cert.diameter_bound);
    cert.validate();
    return cert;
}

}  // namespace

const char* to_string(Kind kind) {
    switch (kind) {
        case Kind::transitive: return "transitive";
        case Kind::reducible: return "reducible";
        case Kind::tensor: return "tensor";
        case Kind::wedge: return "wedge";
        case Kind::cartan: return "cartan";
        case Kind::none: return "none";
    }
    return "none";
}

void Certificate::validate() const {
    const auto fail = [](const std::string& msg) {
        throw std::runtime_error("Certificate::validate: " + msg);
    };
    if (kind == Kind::none) {
        if (lambda || diameter_bound != 0.0 || time_bound != 0.0)
            fail("empty certificate carries bounds");
        return;
    }
    if (X.size() == 0 || X.size() != Y.size()) fail("witness pair sizes disagree");
    if (std::abs(X.norm() - 1.0) > 1e-10 || std::abs(Y.norm() - 1.0) > 1e-10)
        fail("witness pair is not unit");

    if (kind == Kind::transitive) {
        if (lambda || diameter_bound != 0.0 || time_bound != 0.0)
            fail("transitive certificate carries bounds");
        return;
    }
    if (kind == Kind::reducible) {
        if (lambda) fail("reducible certificate carries an overlap cap");
        if (diameter_bound != std::sqrt(2.0)) fail("reducible diameter bound is not sqrt(2)");
    } else {
        if (!lambda) fail("overlap cap missing");
        if (*lambda != 1.0 / std::sqrt(2.0)) fail("overlap cap is not 1/sqrt(2)");
        if (diameter_bound != *bound_from_M(*lambda)) fail("diameter bound mismatch");
    }
    if (time_bound != time_bound_from_D(diameter_bound)) fail("time bound mismatch");
}

std::optional<double> bound_from_M(double lambda) {
    if (!(lambda >= 0.0))
        throw std::invalid_argument("bound_from_M: cap must be non-negative");
    if (lambda >= 1.0) return std::nullopt;
    return std::sqrt(2.0 * (1.0 - lambda));
}

double time_bound_from_D(double delta) {
    if (!(delta >= 0.0 && delta <= 2.0))
        throw std::invalid_argument("time_bound_from_D: diameter bound outside [0, 2]");
    return 2.0 * std::asin(delta / 2.0);
}

Certificate reducible_witness(const std::vector<Matrix>& algebra,
                              const std::vector<Vector>& subspace1,
                              const std::vector<Vector>& subspace2) {
    if (subspace1.empty() || subspace2.empty())
        throw std::invalid_argument("reducible_witness: empty subspace basis");
    const Eigen::Index n = subspace1[0].size();

    const auto check_basis = [&](const std::vector<Vector>& basis, const char* tag) {
        for (size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].size() != n)
                throw std::invalid_argument(std::string("reducible_witness: ") + tag +
                                            " basis vector " + std::to_string(i) +
                                            " has wrong dimension");
            for (size_t j = 0; j <= i; ++j) {
                const double want = (i == j) ? 1.0 : 0.0;
                const double got = num::hermitian_inner(basis[i], basis[j]).real();
                if (std::abs(got - want) > 1e-8)
                    throw std::invalid_argument(std::string("reducible_witness: ") + tag +
                                                " basis is not real-orthonormal at pair (" +
                                                std::to_string(i) + ", " + std::to_string(j) +
                                                ")");
            }
        }
    };
    check_basis(subspace1, "first");
    check_basis(subspace2, "second");

    for (size_t i = 0; i < subspace1.size(); ++i)
        for (size_t j = 0; j < subspace2.size(); ++j)
            if (std::abs(num::hermitian_inner(subspace1[i], subspace2[j]).real()) > 1e-10)
                throw std::invalid_argument(
                    "reducible_witness: subspaces are not Re-orthogonal at pair (" +
                    std::to_string(i) + ", " + std::to_string(j) + ")");

    // Invariance: algebra elements must map each basis vector back into the
    // real span of its own subspace.
    const auto check_invariant = [&](const std::vector<Vector>& basis, const char* tag) {
        for (size_t k = 0; k < algebra.size(); ++k) {
            const Matrix& l = algebra[k];
            if (l.rows() != n || l.cols() != n)
                throw std::invalid_argument("reducible_witness: algebra element " +
                                            std::to_string(k) + " has wrong shape");
            for (const Vector& v : basis) {
                Vector image = l * v;
                for (const Vector& b : basis)
                    image -= num::hermitian_inner(image, b).real() * b;
                if (image.norm() > 1e-8 * std::max(1.0, (l * v).norm()))
                    throw std::invalid_argument(std::string("reducible_witness: ") + tag +
                                                " subspace is not invariant under algebra "
                                                "element " +
                                                std::to_string(k));
            }
        }
    };
    check_invariant(subspace1, "first");
    check_invariant(subspace2, "second");

    Certificate cert;
    cert.kind = Kind::reducible;
    cert.X = subspace1[0];
    cert.Y = subspace2[0];
    cert.diameter_bound = std::sqrt(2.0);
    cert.time_bound = time_bound_from_D(cert.diameter_bound);
    cert.validate();
    return cert;
}

Certificate tensor_witness(int p, int q) {
    if (p < 2 || q < 2) throw std::invalid_argument("tensor_witness: need p, q >= 2");
    const int n = p * q;
    Vector x = Vector::Zero(n);
    x(0) = 1.0;  // e1 (x) e1
    Vector y = Vector::Zero(n);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    y(0) = inv_sqrt2;
    y(q + 1) = inv_sqrt2;  // e2 (x) e2 sits at row-major index q + 1
    return capped_pair(Kind::tensor, std::move(x), std::move(y));
}

namespace {

// Sign of the permutation (J ascending, complement of J ascending) of 0..n-1.
int complement_sign(const std::vector<int>& j, int n) {
    std::vector<char> in_j(static_cast<size_t>(n), 0);
    for (int a : j) in_j[static_cast<size_t>(a)] = 1;
    long inversions = 0;
    for (int a : j) {
        for (int b = 0; b < a; ++b)
            if (!in_j[static_cast<size_t>(b)]) ++inversions;
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

std::vector<int> complement_of(const std::vector<int>& j, int n) {
    std::vector<char> in_j(static_cast<size_t>(n), 0);
    for (int a : j) in_j[static_cast<size_t>(a)] = 1;
    std::vector<int> out;
    for (int a = 0; a < n; ++a)
        if (!in_j[static_cast<size_t>(a)]) out.push_back(a);
    return out;
}

}  // namespace

Certificate wedge_witness(int n, int k) {
    const int degree = std::min(k, n - k);
    if (degree < 2)
        throw std::invalid_argument("wedge_witness: need min(k, n-k) >= 2, got k=" +
                                    std::to_string(k) + ", n=" + std::to_string(n));
    std::vector<int> head(static_cast<size_t>(degree)), tail(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i) {
        head[static_cast<size_t>(i)] = i;
        tail[static_cast<size_t>(i)] = degree + i;
    }
    const rep::WedgeIndex idx = rep::WedgeIndex::make(n, k);
    Vector x = Vector::Zero(idx.dim());
    Vector y = Vector::Zero(idx.dim());
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    if (degree == k) {
        x(idx.index_of(head)) = 1.0;
        y(idx.index_of(head)) = inv_sqrt2;
        y(idx.index_of(tail)) = inv_sqrt2;
    } else {
        // Degree above n/2: carry the low-degree pair across the antilinear
        // pairing e_J -> sgn(J, J^c) e_{J^c}, which intertwines the two actions
        // for det-1 groups. The global sign on X is absorbed; the relative
        // sign between the two Y terms is the one that matters.
        const int rel = complement_sign(head, n) * complement_sign(tail, n);
        x(idx.index_of(complement_of(head, n))) = 1.0;
        y(idx.index_of(complement_of(head, n))) = inv_sqrt2;
        y(idx.index_of(complement_of(tail, n))) = rel * inv_sqrt2;
    }
    return capped_pair(Kind::wedge, std::move(x), std::move(y));
}

Certificate cartan_witness(const Vector& h1, const Vector& l1, const Vector& h2,
                           const Vector& l2) {
    require_unit(h1, "cartan_witness: h1");
    require_unit(l1, "cartan_witness: l1");
    require_unit(h2, "cartan_witness: h2");
    require_unit(l2, "cartan_witness: l2");
    if (h1.size() != l1.size() || h2.size() != l2.size())
        throw std::invalid_argument("cartan_witness: paired vectors differ in dimension");
    if (std::abs(num::hermitian_inner(h1, l1)) > 1e-10 ||
        std::abs(num::hermitian_inner(h2, l2)) > 1e-10)
        throw std::invalid_argument("cartan_witness: h and l vectors must be orthogonal");

    const auto tensor = [](const Vector& a, const Vector& b) {
        Vector out(a.size() * b.size());
        for (Eigen::Index i = 0; i < a.size(); ++i)
            out.segment(i * b.size(), b.size()) = a(i) * b;
        return out;
    };
    Vector x = tensor(h1, h2);
    Vector y = (x + tensor(l1, l2)) / std::sqrt(2.0);
    return capped_pair(Kind::cartan, std::move(x), std::move(y));
}

double det_sum_profile(const std::vector<double>& a) {
    if (a.empty()) throw std::invalid_argument("det_sum_profile: empty point");
    double left = 1.0, right = 1.0;
    for (double v : a) {
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("det_sum_profile: coordinate outside [0, 1]");
        left *= v;
        right *= std::sqrt(1.0 - v * v);
    }
    return left + right;
}

DetSumStats det_sum_oracle(int k, long samples, int grid, std::uint64_t seed) {
    if (k < 2) throw std::invalid_argument("det_sum_oracle: need k >= 2");
    if (samples < 1) throw std::invalid_argument("det_sum_oracle: need at least one sample");
    if (grid < 2) throw std::invalid_argument("det_sum_oracle: need at least two grid points");

    DetSumStats stats;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix c(k, 2 * k);
    for (long s = 0; s < samples; ++s) {
        for (int i = 0; i < k; ++i) {
            double norm2 = 0.0;
            for (int j = 0; j < 2 * k; ++j) {
                c(i, j) = Complex(normal(rng), normal(rng));
                norm2 += std::norm(c(i, j));
            }
            c.row(i) /= std::sqrt(norm2);
        }
        const Complex sum = num::det(c.leftCols(k)) + num::det(c.rightCols(k));
        stats.sampled_max = std::max(stats.sampled_max, std::abs(sum));
    }

    std::vector<double> point(static_cast<size_t>(k), 0.0);
    std::vector<int> ticks(static_cast<size_t>(k), 0);
    const double step = 1.0 / (grid - 1);
    while (true) {
        for (int i = 0; i < k; ++i) point[static_cast<size_t>(i)] = ticks[static_cast<size_t>(i)] * step;
        stats.grid_max = std::max(stats.grid_max, det_sum_profile(point));
        int pos = 0;
        while (pos < k && ++ticks[static_cast<size_t>(pos)] == grid) {
            ticks[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == k) break;
    }
    return stats;
}

double tensor_overlap_oracle(int p, int q, long samples, std::uint64_t seed) {
    if (p < 2 || q < 2) throw std::invalid_argument("tensor_overlap_oracle: need p, q >= 2");
    if (samples < 1)
        throw std::invalid_argument("tensor_overlap_oracle: need at least one sample");
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::mt19937_64 rng(seed);
    double best = 0.0;
    for (long s = 0; s < samples; ++s) {
        const Vector v = num::random_unit_vector(p, rng);
        const Vector w = num::random_unit_vector(q, rng);
        // <v (x) w, (e1(x)e1 + e2(x)e2)/sqrt(2)> picks row-major slots 0 and q+1.
        const Complex overlap = (v(0) * w(0) + v(1) * w(1)) * inv_sqrt2;
        best = std::max(best, std::abs(overlap));
    }
    return best;
}

const char* to_string(DimensionClass cls) {
    switch (cls) {
        case DimensionClass::power_of_two: return "power_of_two";
        case DimensionClass::exceptional_E: return "exceptional_E";
        case DimensionClass::generic: return "generic";
    }
    return "generic";
}

DimensionClass dimension_class(std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("dimension_class: dimension must be positive");
    if ((n & (n - 1)) == 0) return DimensionClass::power_of_two;
    if (std::find(kExceptionalDims.begin(), kExceptionalDims.end(), n) != kExceptionalDims.end() ||
        n == kE8EntryVariant)
        return DimensionClass::exceptional_E;
    return DimensionClass::generic;
}

DimensionReport classify_dimension(std::int64_t n) {
    DimensionReport report;
    report.cls = dimension_class(n);
    switch (report.cls) {
        case DimensionClass::power_of_two:
            report.notes.push_back(
                "dimension is a power of two: transitive non-product actions exist at this "
                "size, so no dimension-based certificate applies");
            break;
        case DimensionClass::exceptional_E:
            report.notes.push_back(
                "dimension sits in the exceptional list: transitive actions of exceptional "
                "type exist, so no universal gap constant applies");
            break;
        case DimensionClass::generic:
            break;
    }
    if (n == kE8EntryPrimary || n == kE8EntryVariant)
        report.notes.push_back(
            "exceptional-list sources disagree on the E8-related entry (24502400 vs "
            "24502500); both values are classified as exceptional");
    return report;
}

}  // namespace gapforge::witness
