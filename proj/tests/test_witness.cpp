// test_witness.cpp — certificate constructors and the brute-force oracles
// behind their overlap caps: Monte Carlo orbit sampling for the reducible
// bound, determinant-sum scans for the wedge cap, decomposable-tensor
// sampling for the product cap.

#include "gapforge/liealg.hpp"
#include "gapforge/numkernel.hpp"
#include "gapforge/repkit.hpp"
#include "gapforge/witness.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace gapforge;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kWedgeDiameter = std::sqrt(2.0 - std::sqrt(2.0));
const double kPi = 3.14159265358979323846;

Vector unit_at(int n, int i) {
    Vector e = Vector::Zero(n);
    e(i) = 1.0;
    return e;
}

// Smallest distance from the sampled orbit of X to Y.
double min_orbit_distance(const lie::LieAlgebraBasis& basis, const Vector& x, const Vector& y,
                          int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double best = (x - y).norm();
    for (int s = 0; s < samples; ++s) {
        Matrix l = Matrix::Zero(basis.n, basis.n);
        for (const Matrix& m : basis.elements) l += gauss(rng) * m;
        const Vector gx = num::expm_skew(l, 1.0) * x;
        best = std::min(best, (gx - y).norm());
    }
    return best;
}

}  // namespace

TEST_SUITE("witness") {

TEST_CASE("overlap cap to diameter bound") {
    CHECK(*witness::bound_from_M(0.0) == doctest::Approx(kSqrt2).epsilon(1e-15));
    CHECK(*witness::bound_from_M(kInvSqrt2) == doctest::Approx(kWedgeDiameter).epsilon(1e-15));
    CHECK(*witness::bound_from_M(0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_FALSE(witness::bound_from_M(1.0).has_value());
    CHECK_FALSE(witness::bound_from_M(1.5).has_value());
    CHECK_THROWS_AS(witness::bound_from_M(-0.1), std::invalid_argument);
    double prev = *witness::bound_from_M(0.0);
    for (double lam = 0.1; lam < 1.0; lam += 0.1) {
        const double cur = *witness::bound_from_M(lam);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("diameter bound to time bound") {
    CHECK(witness::time_bound_from_D(0.0) == 0.0);
    CHECK(witness::time_bound_from_D(kSqrt2) == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(witness::time_bound_from_D(kWedgeDiameter) == doctest::Approx(kPi / 4).epsilon(1e-14));
    CHECK(witness::time_bound_from_D(2.0) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK_THROWS_AS(witness::time_bound_from_D(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(witness::time_bound_from_D(2.1), std::invalid_argument);
    double prev = -1.0;
    for (double d = 0.0; d <= 2.0; d += 0.25) {
        const double t = witness::time_bound_from_D(d);
        CHECK(t > prev);
        prev = t;
    }
}

TEST_CASE("reducible witness certifies the rotation action") {
    const lie::LieAlgebraBasis so3 = lie::bracket_closure(rep::so_embedded(3));
    const lie::RealSplit split = lie::invariant_real_split(so3);
    REQUIRE(split.found);
    const witness::Certificate cert =
        witness::reducible_witness(so3.elements, split.first, split.second);
    CHECK(cert.kind == witness::Kind::reducible);
    CHECK_FALSE(cert.lambda.has_value());
    CHECK(cert.diameter_bound == kSqrt2);
    CHECK(cert.time_bound == witness::time_bound_from_D(kSqrt2));
    CHECK(std::abs(cert.X.norm() - 1.0) < 1e-12);
    CHECK(std::abs(cert.Y.norm() - 1.0) < 1e-12);

    // the sampled orbit never gets closer than sqrt(2)
    const double sampled = min_orbit_distance(so3, cert.X, cert.Y, 2000, 99);
    CHECK(sampled >= kSqrt2 - 1e-8);
    CHECK(sampled <= kSqrt2 + 1e-8);
}

TEST_CASE("reducible witness rejects bad subspaces") {
    const lie::LieAlgebraBasis so3 = lie::bracket_closure(rep::so_embedded(3));
    const lie::RealSplit split = lie::invariant_real_split(so3);
    REQUIRE(split.found);

    std::vector<Vector> stretched = split.first;
    stretched[0] *= 2.0;
    CHECK_THROWS_AS(witness::reducible_witness(so3.elements, stretched, split.second),
                    std::invalid_argument);

    // swapping in a subspace that the algebra does not preserve
    std::vector<Vector> wrong = {unit_at(3, 0)};
    std::vector<Vector> other = {Complex(0.0, 1.0) * unit_at(3, 1)};
    CHECK_THROWS_AS(witness::reducible_witness(so3.elements, wrong, other),
                    std::invalid_argument);
}

TEST_CASE("block diagonal action certifies through its coordinate split") {
    // u(1) + u(1) acting with distinct speeds on C^2
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = Complex(0.0, 1.0);
    d(1, 1) = Complex(0.0, -0.5);
    const lie::LieAlgebraBasis basis = lie::bracket_closure({d});
    const std::vector<Vector> sub1 = {unit_at(2, 0), Complex(0.0, 1.0) * unit_at(2, 0)};
    const std::vector<Vector> sub2 = {unit_at(2, 1), Complex(0.0, 1.0) * unit_at(2, 1)};
    const witness::Certificate cert = witness::reducible_witness(basis.elements, sub1, sub2);
    CHECK(cert.diameter_bound == kSqrt2);
    const double sampled = min_orbit_distance(basis, cert.X, cert.Y, 500, 7);
    CHECK(sampled >= kSqrt2 - 1e-9);
}

TEST_CASE("tensor witness pins the balanced pair") {
    const witness::Certificate cert = witness::tensor_witness(2, 3);
    CHECK(cert.kind == witness::Kind::tensor);
    REQUIRE(cert.lambda.has_value());
    CHECK(*cert.lambda == kInvSqrt2);
    CHECK(cert.diameter_bound == *witness::bound_from_M(kInvSqrt2));
    CHECK(cert.time_bound == witness::time_bound_from_D(cert.diameter_bound));
    CHECK(cert.time_bound == doctest::Approx(kPi / 4).epsilon(1e-14));
    CHECK(cert.X.size() == 6);
    CHECK(std::abs(cert.X(0) - 1.0) < 1e-15);
    CHECK(std::abs(cert.Y(0) - kInvSqrt2) < 1e-15);
    CHECK(std::abs(cert.Y(4) - kInvSqrt2) < 1e-15);  // e2 (x) e2 at row-major 1*3+1
    CHECK_THROWS_AS(witness::tensor_witness(1, 4), std::invalid_argument);
}

TEST_CASE("wedge witness uses disjoint index blocks") {
    const witness::Certificate cert = witness::wedge_witness(4, 2);
    CHECK(cert.kind == witness::Kind::wedge);
    CHECK(*cert.lambda == kInvSqrt2);
    CHECK(std::abs(cert.diameter_bound - kWedgeDiameter) < 1e-15);
    const rep::WedgeIndex idx = rep::WedgeIndex::make(4, 2);
    CHECK(std::abs(cert.X(idx.index_of({0, 1})) - 1.0) < 1e-15);
    CHECK(std::abs(cert.Y(idx.index_of({0, 1})) - kInvSqrt2) < 1e-15);
    CHECK(std::abs(cert.Y(idx.index_of({2, 3})) - kInvSqrt2) < 1e-15);
    CHECK_THROWS_AS(witness::wedge_witness(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(witness::wedge_witness(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(witness::wedge_witness(3, 2), std::invalid_argument);
}

TEST_CASE("high-degree wedge witness crosses the complement duality") {
    const witness::Certificate cert = witness::wedge_witness(5, 3);
    const rep::WedgeIndex idx = rep::WedgeIndex::make(5, 3);
    CHECK(std::abs(cert.X(idx.index_of({2, 3, 4})) - 1.0) < 1e-15);
    CHECK(std::abs(cert.Y(idx.index_of({2, 3, 4})) - kInvSqrt2) < 1e-15);
    CHECK(std::abs(cert.Y(idx.index_of({0, 1, 4})) - kInvSqrt2) < 1e-15);
    CHECK(std::abs(cert.X.norm() - 1.0) < 1e-15);
    CHECK(std::abs(cert.Y.norm() - 1.0) < 1e-15);

    // numerically: the transferred Y is not decomposable, so no group element
    // reaches it from X; the sampled orbit honors the cap
    std::vector<Matrix> lifted;
    for (const Matrix& l : rep::su_standard(5)) lifted.push_back(rep::wedge_lift_algebra(l, 3));
    const lie::LieAlgebraBasis basis = lie::bracket_closure(lifted);
    std::mt19937_64 rng(123);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double worst = 0.0;
    for (int s = 0; s < 300; ++s) {
        Matrix l = Matrix::Zero(basis.n, basis.n);
        for (const Matrix& m : basis.elements) l += gauss(rng) * m;
        const Vector gx = num::expm_skew(l, 1.0) * cert.X;
        worst = std::max(worst, std::abs(num::hermitian_inner(gx, cert.Y)));
    }
    CHECK(worst <= kInvSqrt2 + 1e-9);
}

TEST_CASE("cartan witness builds the paired tensor states") {
    const Vector h = unit_at(2, 0), l = unit_at(2, 1);
    const witness::Certificate cert = witness::cartan_witness(h, l, h, l);
    CHECK(cert.kind == witness::Kind::cartan);
    CHECK(*cert.lambda == kInvSqrt2);
    CHECK(cert.X.size() == 4);
    CHECK(std::abs(cert.X(0) - 1.0) < 1e-15);
    CHECK(std::abs(cert.Y(0) - kInvSqrt2) < 1e-15);
    CHECK(std::abs(cert.Y(3) - kInvSqrt2) < 1e-15);

    CHECK_THROWS_AS(witness::cartan_witness(Vector(2.0 * h), l, h, l), std::invalid_argument);
    CHECK_THROWS_AS(witness::cartan_witness(h, h, h, l), std::invalid_argument);
}

TEST_CASE("certificate validation catches tampering") {
    witness::Certificate cert = witness::tensor_witness(2, 2);
    cert.validate();
    witness::Certificate bad = cert;
    bad.lambda = 0.5;
    CHECK_THROWS_AS(bad.validate(), std::runtime_error);
    bad = cert;
    bad.diameter_bound += 1e-9;
    CHECK_THROWS_AS(bad.validate(), std::runtime_error);
    bad = cert;
    bad.time_bound = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::runtime_error);
    bad = cert;
    bad.X *= 0.5;
    CHECK_THROWS_AS(bad.validate(), std::runtime_error);
}

TEST_CASE("determinant profile interior and boundary values") {
    const double root = std::sqrt(0.5);
    CHECK(witness::det_sum_profile({root, root}) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(witness::det_sum_profile({root, root, root}) ==
          doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-14));
    CHECK(witness::det_sum_profile({root, root, root, root}) ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(witness::det_sum_profile({1.0, 1.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(witness::det_sum_profile({0.0, 0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-14));
    // hand value: 0.6*0.8 + 0.8*0.6 = 0.96
    CHECK(witness::det_sum_profile({0.6, 0.8}) == doctest::Approx(0.96).epsilon(1e-14));
    CHECK_THROWS_AS(witness::det_sum_profile({}), std::invalid_argument);
    CHECK_THROWS_AS(witness::det_sum_profile({1.2}), std::invalid_argument);
}

TEST_CASE("determinant oracle stays under one") {
    const witness::DetSumStats k2 = witness::det_sum_oracle(2, 20000, 101, 1);
    CHECK(k2.grid_max == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(k2.sampled_max <= 1.0 + 1e-9);
    CHECK(k2.sampled_max > 0.8);

    const witness::DetSumStats k3 = witness::det_sum_oracle(3, 5000, 21, 1);
    CHECK(k3.grid_max == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(k3.sampled_max <= 1.0 + 1e-9);

    const witness::DetSumStats again = witness::det_sum_oracle(2, 20000, 101, 1);
    CHECK(again.sampled_max == k2.sampled_max);
    CHECK_THROWS_AS(witness::det_sum_oracle(1, 10, 11, 0), std::invalid_argument);
    CHECK_THROWS_AS(witness::det_sum_oracle(2, 0, 11, 0), std::invalid_argument);
    CHECK_THROWS_AS(witness::det_sum_oracle(2, 10, 1, 0), std::invalid_argument);
}

TEST_CASE("tensor overlap oracle honors the cap") {
    const double best = witness::tensor_overlap_oracle(2, 2, 10000, 3);
    CHECK(best <= kInvSqrt2 + 1e-12);
    CHECK(best > 0.69);
    CHECK(witness::tensor_overlap_oracle(2, 2, 10000, 3) == best);
    CHECK_THROWS_AS(witness::tensor_overlap_oracle(1, 2, 10, 0), std::invalid_argument);
}

TEST_CASE("dimension classifier") {
    using witness::DimensionClass;
    for (const std::int64_t n : {1LL, 2LL, 64LL, 1024LL, 4096LL})
        CHECK(witness::dimension_class(n) == DimensionClass::power_of_two);
    for (const std::int64_t n : {26LL, 27LL, 56LL, 273LL, 3875LL, 24502400LL, 24502500LL})
        CHECK(witness::dimension_class(n) == DimensionClass::exceptional_E);
    for (const std::int64_t n : {3LL, 6LL, 100LL, 2926LL})
        CHECK(witness::dimension_class(n) == DimensionClass::generic);
    CHECK_THROWS_AS(witness::dimension_class(0), std::invalid_argument);
    CHECK_THROWS_AS(witness::dimension_class(-5), std::invalid_argument);
}

TEST_CASE("dimension report flags the disputed entry") {
    const witness::DimensionReport a = witness::classify_dimension(24502400);
    const witness::DimensionReport b = witness::classify_dimension(24502500);
    bool a_flagged = false, b_flagged = false;
    for (const std::string& note : a.notes)
        if (note.find("24502500") != std::string::npos) a_flagged = true;
    for (const std::string& note : b.notes)
        if (note.find("24502400") != std::string::npos) b_flagged = true;
    CHECK(a_flagged);
    CHECK(b_flagged);

    const witness::DimensionReport plain = witness::classify_dimension(26);
    for (const std::string& note : plain.notes)
        CHECK(note.find("2450") == std::string::npos);
}

}  // TEST_SUITE
