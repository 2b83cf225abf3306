// repkit.hpp — Constructors for the representations the witness machinery
// runs on: standard su(n)/so(n) generators, tensor-product and exterior-power
// lifts, su(2) symmetric powers, conjugate bases.

#pragma once

#include "gapforge/numkernel.hpp"

#include <vector>

namespace gapforge::rep {

// Lexicographic enumeration of the k-element subsets of {0..n-1}, the basis
// order of the exterior power.
struct WedgeIndex {
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> subsets;

    static WedgeIndex make(int n, int k);
    int dim() const { return static_cast<int>(subsets.size()); }
    int index_of(const std::vector<int>& sorted_subset) const;
};

// Orthonormal basis of su(n): paired real/imaginary off-diagonal elements,
// then the diagonal ladder. n^2 - 1 elements.
std::vector<Matrix> su_standard(int n);

// The n(n-1)/2 elementary rotations E_ij - E_ji viewed inside u(n).
std::vector<Matrix> so_embedded(int n);

// Generators {L (x) I} and {I (x) M} of the product action on C^p (x) C^q.
std::vector<Matrix> product_lift(const std::vector<Matrix>& a, const std::vector<Matrix>& b);

// Derivation action of L on the k-th exterior power (single-index
// substitution with the sorting sign).
Matrix wedge_lift_algebra(const Matrix& l, int k);

// Compound matrix: entry (J, I) is the k x k minor of g with rows J and
// columns I. Functorial on products; unitary input required.
Matrix wedge_lift_group(const Matrix& g, int k);

// Spin-(m/2) generators on C^(m+1) through the ladder-operator basis; the
// first and last basis vectors are the highest and lowest weight vectors.
std::vector<Matrix> sym_power_su2(int m);

// Entrywise conjugate of every element: the dual action.
std::vector<Matrix> conjugate_basis(const std::vector<Matrix>& elements);

}  // namespace gapforge::rep
