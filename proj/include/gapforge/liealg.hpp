// liealg.hpp — Lie algebra closures, orbit tangent spaces, transitivity, and
// commutant-based representation classification.

#pragma once

#include "gapforge/numkernel.hpp"

#include <cstdint>
#include <vector>

namespace gapforge::lie {

// Real-orthonormal basis (under Re tr(X^* Y)) of a matrix Lie algebra of
// skew-Hermitian n x n matrices. `closed` marks that every bracket of basis
// elements projects back into the span.
struct LieAlgebraBasis {
    int n = 0;
    std::vector<Matrix> elements;
    bool closed = false;

    int dim() const { return static_cast<int>(elements.size()); }
};

// Smallest real Lie algebra containing the generators: Gram-Schmidt in
// discovery order (generators first, then brackets in lexicographic pair
// order), iterated to a fixpoint. Rounds are capped at n^2.
LieAlgebraBasis bracket_closure(const std::vector<Matrix>& generators, double tol = 1e-9);

// Real dimension of {Lx : L in algebra} inside C^n viewed as R^{2n}.
int orbit_tangent_dim(const LieAlgebraBasis& basis, const Vector& x, double tol = 1e-9);

// True iff the orbit tangent space is the full sphere tangent space (real
// dimension 2n-1) at `trials` independent random unit points.
bool is_transitive(const LieAlgebraBasis& basis, int trials, std::uint64_t seed);

// Complex dimension of {M : ML = LM for all basis elements}. 1 means the
// action is complex-irreducible.
int commutant_dim(const LieAlgebraBasis& basis, double tol = 1e-9);

enum class BilinearType { none, symmetric, antisymmetric };

const char* to_string(BilinearType type);

// Type of the invariant bilinear form S solving L^T S + S L = 0 across the
// basis. Requires a complex-irreducible action (commutant dimension 1); a
// solution space of dimension above 1 is reported as a numerical failure.
BilinearType invariant_bilinear_type(const LieAlgebraBasis& basis, double tol = 1e-9);

// The form behind invariant_bilinear_type, scaled to a unitary matrix with a
// deterministic phase. Empty (0 x 0) when no invariant form exists.
Matrix invariant_bilinear_form(const LieAlgebraBasis& basis, double tol = 1e-9);

struct RepresentationProfile {
    bool transitive = false;
    bool complex_irreducible = false;
    BilinearType bilinear_type = BilinearType::none;
    bool realification_reducible = false;
    int algebra_dim = 0;
    int orbit_tangent_dim = 0;
};

RepresentationProfile classify(const LieAlgebraBasis& basis, int trials, std::uint64_t seed);

// A pair of invariant, mutually Re-orthogonal real subspaces of C^n, each
// given by a real-orthonormal basis. `found` is false when the action leaves
// no such proper splitting (realification irreducible).
struct RealSplit {
    std::vector<Vector> first;
    std::vector<Vector> second;
    bool found = false;
};

// Splits C^n along the commutant when the action is complex-reducible, or
// along the real form fixed by x -> conj(Sx) when an invariant symmetric
// form S exists. Basis vectors are canonical: Gram-Schmidt projections of
// the standard basis, independent of generator order.
RealSplit invariant_real_split(const LieAlgebraBasis& basis, double tol = 1e-9);

}  // namespace gapforge::lie
