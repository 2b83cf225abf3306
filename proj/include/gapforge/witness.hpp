// witness.hpp — Certified lower bounds: witness state pairs whose group
// overlap is provably capped, the resulting diameter and minimum-time bounds,
// brute-force oracles behind the overlap caps, and the dimension classifier.

#pragma once

#include "gapforge/numkernel.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gapforge::witness {

enum class Kind { transitive, reducible, tensor, wedge, cartan, none };

const char* to_string(Kind kind);

// A certificate pins a unit pair (X, Y), optionally an overlap cap lambda
// with sup_g |<gX,Y>| <= lambda, and the implied bounds
// diameter_bound <= D(G) and time_bound <= T. validate() rechecks the
// arithmetic identities and unit norms; emission re-runs it.
struct Certificate {
    Kind kind = Kind::none;
    Vector X;
    Vector Y;
    std::optional<double> lambda;
    double diameter_bound = 0.0;
    double time_bound = 0.0;

    void validate() const;
};

// Overlap cap lambda < 1 turns into the diameter bound sqrt(2(1-lambda)).
// lambda >= 1 certifies nothing and yields an empty value.
std::optional<double> bound_from_M(double lambda);

// Minimum-time bound 2*asin(delta/2) from a diameter bound delta in [0, 2].
double time_bound_from_D(double delta);

// Pair split across two invariant, mutually Re-orthogonal real subspaces:
// no group element moves X within sqrt(2) of Y. The subspace bases must be
// real-orthonormal and invariant under every algebra element.
Certificate reducible_witness(const std::vector<Matrix>& algebra,
                              const std::vector<Vector>& subspace1,
                              const std::vector<Vector>& subspace2);

// Product action on C^p (x) C^q: X = e1(x)e1 against
// Y = (e1(x)e1 + e2(x)e2)/sqrt(2), capped at 1/sqrt(2) because the orbit of
// X stays decomposable. Requires p, q >= 2.
Certificate tensor_witness(int p, int q);

// Exterior power of degree k on C^n, 2 <= k <= n/2: X = e_{1..k} against
// Y = (e_{1..k} + e_{k+1..2k})/sqrt(2), capped at 1/sqrt(2) through the
// two-minor determinant identity.
Certificate wedge_witness(int n, int k);

// Highest-weight pair h1(x)h2 against (h1(x)h2 + l1(x)l2)/sqrt(2) for an
// irreducible-component action; caller supplies unit h/l vectors with
// h1 ⟂ l1 and h2 ⟂ l2.
Certificate cartan_witness(const Vector& h1, const Vector& l1, const Vector& h2,
                           const Vector& l2);

// Monte Carlo and lattice scan behind the wedge cap. sampled_max is the
// largest |det A + det B| over random k x 2k matrices with unit rows (A and
// B the left and right k x k blocks); grid_max scans
// f(a) = prod a_i + prod sqrt(1 - a_i^2) over a `grid`-point lattice of
// [0,1]^k.
struct DetSumStats {
    double sampled_max = 0.0;
    double grid_max = 0.0;
};
DetSumStats det_sum_oracle(int k, long samples, int grid, std::uint64_t seed = 0);

// The scanned profile f(a) itself, for spot checks of interior values.
double det_sum_profile(const std::vector<double>& a);

// Largest |<v (x) w, Y>| over random decomposable unit tensors, with
// Y = (e1(x)e1 + e2(x)e2)/sqrt(2). Brute-force check of the tensor cap.
double tensor_overlap_oracle(int p, int q, long samples, std::uint64_t seed = 0);

enum class DimensionClass { power_of_two, exceptional_E, generic };

const char* to_string(DimensionClass cls);

// power_of_two if n = 2^k; else exceptional_E if n sits in the known list of
// dimensions carrying non-product transitive actions; else generic.
DimensionClass dimension_class(std::int64_t n);

// Classification plus the caveat notes a report should carry, including the
// flagged source discrepancy for the E8-related entry.
struct DimensionReport {
    DimensionClass cls = DimensionClass::generic;
    std::vector<std::string> notes;
};
DimensionReport classify_dimension(std::int64_t n);

}  // namespace gapforge::witness
