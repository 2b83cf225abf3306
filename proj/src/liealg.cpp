// liealg.cpp

#include "gapforge/liealg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gapforge::lie {

namespace {

using num::real_frob_inner;

void validate_generators(const std::vector<Matrix>& generators, int& n_out) {
    if (generators.empty()) throw std::invalid_argument("bracket_closure: no generators");
    const Eigen::Index n = generators[0].rows();
    bool any_nonzero = false;
    for (size_t k = 0; k < generators.size(); ++k) {
        const Matrix& g = generators[k];
        const std::string tag = "bracket_closure: generator " + std::to_string(k);
        if (g.rows() != n || g.cols() != n)
            throw std::invalid_argument(tag + " is not " + std::to_string(n) + "x" +
                                        std::to_string(n));
        num::require_finite(g, tag.c_str());
        if (num::skew_residual(g) > 1e-10)
            throw std::invalid_argument(tag + " is not skew-Hermitian (relative defect " +
                                        std::to_string(num::skew_residual(g)) + ")");
        if (g.norm() > 0.0) any_nonzero = true;
    }
    if (!any_nonzero) throw std::invalid_argument("bracket_closure: all generators vanish");
    n_out = static_cast<int>(n);
}

// Two-pass Gram-Schmidt against an orthonormal family; returns the residual.
Matrix project_out(const std::vector<Matrix>& basis, Matrix c) {
    for (int pass = 0; pass < 2; ++pass)
        for (const Matrix& b : basis) c -= real_frob_inner(b, c) * b;
    return c;
}

// Stacked linear operator whose kernel is the commutant: vec(LM - ML) over
// all basis elements, column-major vec convention.
Matrix commutant_stack(const LieAlgebraBasis& basis) {
    const int n = basis.n;
    const Matrix id = Matrix::Identity(n, n);
    Matrix stack(static_cast<Eigen::Index>(basis.dim()) * n * n, n * n);
    for (int k = 0; k < basis.dim(); ++k) {
        const Matrix& l = basis.elements[static_cast<size_t>(k)];
        stack.middleRows(static_cast<Eigen::Index>(k) * n * n, n * n) =
            num::kron(id, l) - num::kron(l.transpose(), id);
    }
    return stack;
}

// Stacked operator whose kernel holds invariant bilinear forms:
// vec(L^T S + S L) over all basis elements.
Matrix bilinear_stack(const LieAlgebraBasis& basis) {
    const int n = basis.n;
    const Matrix id = Matrix::Identity(n, n);
    Matrix stack(static_cast<Eigen::Index>(basis.dim()) * n * n, n * n);
    for (int k = 0; k < basis.dim(); ++k) {
        const Matrix lt = basis.elements[static_cast<size_t>(k)].transpose();
        stack.middleRows(static_cast<Eigen::Index>(k) * n * n, n * n) =
            num::kron(id, lt) + num::kron(lt, id);
    }
    return stack;
}

void require_closed_basis(const LieAlgebraBasis& basis, const char* what) {
    if (basis.dim() == 0) throw std::invalid_argument(std::string(what) + ": empty basis");
    if (!basis.closed) throw std::invalid_argument(std::string(what) + ": basis is not closed");
}

std::vector<int> orbit_dims(const LieAlgebraBasis& basis, int trials, std::uint64_t seed) {
    if (trials <= 0) throw std::invalid_argument("is_transitive: trials must be positive");
    std::mt19937_64 rng(seed);
    std::vector<int> dims;
    dims.reserve(static_cast<size_t>(trials));
    for (int t = 0; t < trials; ++t)
        dims.push_back(orbit_tangent_dim(basis, num::random_unit_vector(basis.n, rng)));
    return dims;
}

// Deterministic phase: the largest-magnitude entry is made real positive.
void canonicalize_phase(Matrix& s) {
    Eigen::Index bi = 0, bj = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < s.rows(); ++i)
        for (Eigen::Index j = 0; j < s.cols(); ++j)
            if (std::abs(s(i, j)) > best) {
                best = std::abs(s(i, j));
                bi = i;
                bj = j;
            }
    if (best > 0.0) s *= std::conj(s(bi, bj)) / best;
}

// Real-orthonormal vectors spanning the same real subspace as the candidate
// pool, built by Gram-Schmidt in pool order. Canonical given the subspace.
std::vector<Vector> gram_schmidt_real(const std::vector<Vector>& pool, int want, const char* what) {
    std::vector<Vector> basis;
    for (const Vector& cand : pool) {
        if (static_cast<int>(basis.size()) == want) break;
        Vector v = cand;
        for (int pass = 0; pass < 2; ++pass)
            for (const Vector& b : basis) v -= num::hermitian_inner(v, b).real() * b;
        const double vn = v.norm();
        if (vn > 1e-6) basis.push_back(v / vn);
    }
    if (static_cast<int>(basis.size()) != want)
        throw std::runtime_error(std::string(what) + ": subspace basis construction found " +
                                 std::to_string(basis.size()) + " of " + std::to_string(want) +
                                 " vectors");
    return basis;
}

}  // namespace

LieAlgebraBasis bracket_closure(const std::vector<Matrix>& generators, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("bracket_closure: tolerance must be positive");
    int n = 0;
    validate_generators(generators, n);

    LieAlgebraBasis out;
    out.n = n;
    std::vector<Matrix>& basis = out.elements;

    auto try_add = [&](const Matrix& c, double floor) {
        Matrix r = project_out(basis, c);
        const double rn = r.norm();
        if (rn > floor) basis.push_back(r / rn);
    };

    // Generators in input order; a duplicate direction is a relative call.
    for (const Matrix& g : generators) {
        const double gn = g.norm();
        if (gn == 0.0) continue;
        try_add(g, tol * gn);
    }

    // Brackets of orthonormal elements live at unit scale, so the drop
    // decision is absolute in tol. Each round sweeps pairs that involve at
    // least one element discovered in the previous round.
    const int round_cap = n * n;
    int rounds = 0;
    size_t explored = 0;
    while (explored < basis.size()) {
        if (++rounds > round_cap)
            throw std::runtime_error("bracket_closure: no fixpoint within " +
                                     std::to_string(round_cap) + " rounds");
        const size_t count = basis.size();
        for (size_t i = 0; i + 1 < count; ++i) {
            for (size_t j = std::max(i + 1, explored); j < count; ++j) {
                const Matrix c = basis[i] * basis[j] - basis[j] * basis[i];
                try_add(c, tol * std::max(1.0, c.norm()));
            }
        }
        explored = count;
    }

    out.closed = true;
    return out;
}

int orbit_tangent_dim(const LieAlgebraBasis& basis, const Vector& x, double tol) {
    if (basis.dim() == 0) throw std::invalid_argument("orbit_tangent_dim: empty basis");
    if (x.size() != basis.n)
        throw std::invalid_argument("orbit_tangent_dim: point has dimension " +
                                    std::to_string(x.size()) + ", expected " +
                                    std::to_string(basis.n));
    if (std::abs(x.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("orbit_tangent_dim: unit vector required");

    const int n = basis.n;
    RealMatrix tangents(2 * n, basis.dim());
    for (int k = 0; k < basis.dim(); ++k) {
        const Vector lx = basis.elements[static_cast<size_t>(k)] * x;
        tangents.col(k).head(n) = lx.real();
        tangents.col(k).tail(n) = lx.imag();
    }
    return num::real_rank(tangents, tol);
}

bool is_transitive(const LieAlgebraBasis& basis, int trials, std::uint64_t seed) {
    require_closed_basis(basis, "is_transitive");
    const int full = 2 * basis.n - 1;
    for (int d : orbit_dims(basis, trials, seed))
        if (d != full) return false;
    return true;
}

int commutant_dim(const LieAlgebraBasis& basis, double tol) {
    if (basis.dim() == 0) throw std::invalid_argument("commutant_dim: empty basis");
    const int n = basis.n;
    return n * n - num::complex_rank(commutant_stack(basis), tol);
}

const char* to_string(BilinearType type) {
    switch (type) {
        case BilinearType::none: return "none";
        case BilinearType::symmetric: return "symmetric";
        case BilinearType::antisymmetric: return "antisymmetric";
    }
    return "none";
}

Matrix invariant_bilinear_form(const LieAlgebraBasis& basis, double tol) {
    if (basis.dim() == 0) throw std::invalid_argument("invariant_bilinear_form: empty basis");
    if (commutant_dim(basis, tol) != 1)
        throw std::domain_error("invariant_bilinear_form: action is not complex-irreducible");

    const int n = basis.n;
    Eigen::JacobiSVD<Matrix> svd(bilinear_stack(basis), Eigen::ComputeThinV);
    const RealVector& sv = svd.singularValues();
    const double smax = sv(0);
    int nullity = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) <= tol * std::max(smax, 1.0)) ++nullity;
    if (nullity == 0) return Matrix();
    if (nullity > 1)
        throw std::runtime_error("invariant_bilinear_form: solution space has dimension " +
                                 std::to_string(nullity) + ", expected at most 1");

    Matrix s = Eigen::Map<const Matrix>(svd.matrixV().col(n * n - 1).data(), n, n);

    // For an irreducible action S^H S is scalar; rescale S to a unitary.
    Matrix gram = s.adjoint() * s;
    const double c = gram.trace().real() / n;
    gram -= c * Matrix::Identity(n, n);
    if (c <= 0.0 || gram.norm() > 1e-6 * c * n)
        throw std::runtime_error("invariant_bilinear_form: form is not unitary up to scale");
    s /= std::sqrt(c);
    canonicalize_phase(s);
    return s;
}

BilinearType invariant_bilinear_type(const LieAlgebraBasis& basis, double tol) {
    const Matrix s = invariant_bilinear_form(basis, tol);
    if (s.size() == 0) return BilinearType::none;
    const double sym = (s - s.transpose()).norm();
    const double anti = (s + s.transpose()).norm();
    if (sym <= 1e-6 * s.norm()) return BilinearType::symmetric;
    if (anti <= 1e-6 * s.norm()) return BilinearType::antisymmetric;
    throw std::runtime_error("invariant_bilinear_type: form is neither symmetric nor "
                             "antisymmetric (defects " +
                             std::to_string(sym) + ", " + std::to_string(anti) + ")");
}

RepresentationProfile classify(const LieAlgebraBasis& basis, int trials, std::uint64_t seed) {
    require_closed_basis(basis, "classify");
    RepresentationProfile profile;
    profile.algebra_dim = basis.dim();

    const std::vector<int> dims = orbit_dims(basis, trials, seed);
    const int full = 2 * basis.n - 1;
    profile.transitive = true;
    profile.orbit_tangent_dim = 0;
    for (int d : dims) {
        profile.transitive = profile.transitive && (d == full);
        profile.orbit_tangent_dim = std::max(profile.orbit_tangent_dim, d);
    }

    profile.complex_irreducible = (commutant_dim(basis) == 1);
    profile.bilinear_type =
        profile.complex_irreducible ? invariant_bilinear_type(basis) : BilinearType::none;
    profile.realification_reducible =
        !profile.complex_irreducible || profile.bilinear_type == BilinearType::symmetric;
    return profile;
}

RealSplit invariant_real_split(const LieAlgebraBasis& basis, double tol) {
    if (basis.dim() == 0) throw std::invalid_argument("invariant_real_split: empty basis");
    const int n = basis.n;
    RealSplit split;

    const int cd = commutant_dim(basis, tol);
    if (cd > 1) {
        // Complex-reducible: eigenspaces of a Hermitian commutant element are
        // invariant complex subspaces. The element is the commutant
        // projection of a fixed seed, so the split does not depend on the
        // basis order; seeds escalate until the projection is non-scalar.
        Eigen::JacobiSVD<Matrix> svd(commutant_stack(basis), Eigen::ComputeThinV);
        std::vector<Matrix> commutant;
        for (int a = 0; a < cd; ++a)
            commutant.push_back(
                Eigen::Map<const Matrix>(svd.matrixV().col(n * n - 1 - a).data(), n, n));

        std::vector<Matrix> seeds;
        Matrix ramp = Matrix::Zero(n, n);
        for (int i = 0; i < n; ++i) ramp(i, i) = Complex(i + 1, 0.0);
        seeds.push_back(ramp);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Vector u = Vector::Zero(n);
                u(i) = 1.0;
                u(j) = 1.0;
                seeds.push_back(u * u.adjoint());
                u(j) = Complex(0.0, 1.0);
                seeds.push_back(u * u.adjoint());
            }

        Matrix h;
        bool have = false;
        for (const Matrix& seed : seeds) {
            Matrix proj = Matrix::Zero(n, n);
            for (const Matrix& m : commutant)
                proj += Complex(m.conjugate().cwiseProduct(seed).sum()) * m;
            proj = ((proj + proj.adjoint()) / 2.0).eval();
            proj -= (proj.trace() / static_cast<double>(n)) * Matrix::Identity(n, n);
            if (proj.norm() > 1e-8) {
                h = proj;
                have = true;
                break;
            }
        }
        if (!have)
            throw std::runtime_error(
                "invariant_real_split: commutant projection is scalar for every seed");

        num::HermitianEigen eig = num::jacobi_hermitian(h);
        Eigen::Index cut = 0;
        double best_gap = -1.0;
        for (Eigen::Index i = 0; i + 1 < n; ++i) {
            const double gap = eig.values(i + 1) - eig.values(i);
            if (gap > best_gap) {
                best_gap = gap;
                cut = i + 1;
            }
        }

        const auto complex_block = [&](Eigen::Index lo, Eigen::Index count) {
            Matrix cols = eig.vectors.middleCols(lo, count);
            const Matrix proj = cols * cols.adjoint();
            std::vector<Vector> pool;
            for (int i = 0; i < n; ++i) pool.push_back(proj.col(i));
            std::vector<Vector> cbasis;
            for (const Vector& cand : pool) {
                if (static_cast<Eigen::Index>(cbasis.size()) == count) break;
                Vector v = cand;
                for (int pass = 0; pass < 2; ++pass)
                    for (const Vector& b : cbasis) v -= num::hermitian_inner(v, b) * b;
                if (v.norm() > 1e-6) cbasis.push_back(v / v.norm());
            }
            if (static_cast<Eigen::Index>(cbasis.size()) != count)
                throw std::runtime_error("invariant_real_split: eigenspace basis incomplete");
            std::vector<Vector> real_basis;
            for (const Vector& v : cbasis) {
                real_basis.push_back(v);
                real_basis.push_back(Complex(0.0, 1.0) * v);
            }
            return real_basis;
        };

        split.first = complex_block(0, cut);
        split.second = complex_block(cut, n - cut);
        split.found = true;
        return split;
    }

    const Matrix s = invariant_bilinear_form(basis, tol);
    if (s.size() == 0 || (s - s.transpose()).norm() > 1e-6 * s.norm()) return split;

    // Real form fixed by the antilinear involution x -> conj(Sx); the
    // orthogonal complement is i times the fixed space.
    if ((s.conjugate() * s - Matrix::Identity(n, n)).norm() > 1e-6)
        throw std::runtime_error("invariant_real_split: symmetric form is not an involution");

    std::vector<Vector> pool;
    for (int i = 0; i < n; ++i) {
        Vector e = Vector::Zero(n);
        e(i) = 1.0;
        pool.push_back((e + (s * e).conjugate()) / 2.0);
        e(i) = Complex(0.0, 1.0);
        pool.push_back((e + (s * e).conjugate()) / 2.0);
    }
    split.first = gram_schmidt_real(pool, n, "invariant_real_split");
    split.second.reserve(split.first.size());
    for (const Vector& v : split.first) split.second.push_back(Complex(0.0, 1.0) * v);
    split.found = true;
    return split;
}

}  // namespace gapforge::lie
