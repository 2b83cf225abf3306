// test_numkernel.cpp — dense-kernel checks against independent oracles:
// truncated Taylor series for the exponential, power iteration for the
// operator norm, cofactor expansion for determinants.

#include "gapforge/numkernel.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace gapforge;

namespace {

constexpr double kTaylorTol = 1e-12;
constexpr double kNormTol = 1e-7;
constexpr double kDetTol = 1e-10;

Matrix random_complex(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    return m;
}

// Oracle: partial sum of the exponential series, valid for moderate norms.
Matrix taylor_expm(const Matrix& l, double t, int terms = 30) {
    Matrix sum = Matrix::Identity(l.rows(), l.cols());
    Matrix power = Matrix::Identity(l.rows(), l.cols());
    for (int k = 1; k < terms; ++k) {
        power = (power * l * t / static_cast<double>(k)).eval();
        sum += power;
    }
    return sum;
}

// Oracle: power iteration on A^H A with a fixed start.
double power_norm(const Matrix& a, int iters = 500) {
    const Matrix g = a.adjoint() * a;
    Vector v = Vector::Ones(a.cols()).normalized();
    for (int k = 0; k < iters; ++k) {
        v = (g * v).eval();
        const double nv = v.norm();
        if (nv == 0.0) return 0.0;
        v /= nv;
    }
    return std::sqrt(std::real(num::hermitian_inner(Vector(g * v), v)));
}

// Oracle: Laplace expansion along the first row, exponential but exact in form.
Complex cofactor_det(const Matrix& m) {
    const int n = static_cast<int>(m.rows());
    if (n == 1) return m(0, 0);
    Complex sum = 0.0;
    for (int j = 0; j < n; ++j) {
        Matrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        sum += sign * m(0, j) * cofactor_det(minor);
    }
    return sum;
}

}  // namespace

TEST_SUITE("numkernel") {

TEST_CASE("hermitian inner product conventions") {
    Vector x(2), y(2);
    x << Complex(1.0, 2.0), Complex(0.0, -1.0);
    y << Complex(3.0, -1.0), Complex(2.0, 2.0);
    Complex manual = 0.0;
    for (int i = 0; i < 2; ++i) manual += x(i) * std::conj(y(i));
    CHECK(std::abs(num::hermitian_inner(x, y) - manual) < 1e-15);
    CHECK(std::abs(num::hermitian_inner(x, y) - std::conj(num::hermitian_inner(y, x))) < 1e-15);
    CHECK(std::abs(num::hermitian_inner(x, Vector(Complex(0.0, 1.0) * y)) -
                   Complex(0.0, -1.0) * num::hermitian_inner(x, y)) < 1e-15);
}

TEST_CASE("operator norm matches power iteration") {
    std::mt19937_64 rng(7);
    for (int n = 2; n <= 6; ++n) {
        const Matrix a = random_complex(n, rng);
        const double mine = num::operator_norm(a);
        const double oracle = power_norm(a);
        CHECK(std::abs(mine - oracle) <= kNormTol * std::max(1.0, mine));
    }
    Matrix d = Matrix::Zero(3, 3);
    d(0, 0) = Complex(0.0, -2.5);
    d(1, 1) = 1.0;
    d(2, 2) = Complex(0.3, 0.4);
    CHECK(num::operator_norm(d) == doctest::Approx(2.5).epsilon(1e-14));
    CHECK(num::operator_norm(Matrix::Identity(4, 4)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(num::operator_norm(Matrix::Zero(3, 3)) == 0.0);
}

TEST_CASE("jacobi recovers a planted spectrum") {
    std::mt19937_64 rng(11);
    // Unitary from an independent factorization, not from this module.
    const Eigen::HouseholderQR<Matrix> qr(random_complex(5, rng));
    const Matrix u = qr.householderQ() * Matrix::Identity(5, 5);
    RealVector planted(5);
    planted << -3.0, -0.5, 0.0, 1.25, 4.0;
    const Matrix h = u * planted.cast<Complex>().asDiagonal() * u.adjoint();

    const num::HermitianEigen eig = num::jacobi_hermitian(h);
    for (int i = 0; i < 5; ++i)
        CHECK(eig.values(i) == doctest::Approx(planted(i)).epsilon(1e-11));
    CHECK(num::unitary_residual(eig.vectors) < 1e-11);
    const Matrix rebuilt =
        eig.vectors * eig.values.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
    CHECK((rebuilt - h).norm() < 1e-10);
}

TEST_CASE("jacobi reconstructs random hermitian input") {
    std::mt19937_64 rng(13);
    for (int n = 2; n <= 7; ++n) {
        Matrix h = random_complex(n, rng);
        h = ((h + h.adjoint()) / 2.0).eval();
        const num::HermitianEigen eig = num::jacobi_hermitian(h);
        for (int i = 0; i + 1 < n; ++i) CHECK(eig.values(i) <= eig.values(i + 1));
        const Matrix rebuilt =
            eig.vectors * eig.values.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
        CHECK((rebuilt - h).norm() < 1e-10 * std::max(1.0, h.norm()));
    }
}

TEST_CASE("matrix exponential matches truncated series") {
    std::mt19937_64 rng(17);
    for (int n = 2; n <= 5; ++n) {
        const Matrix l = num::random_skew_hermitian(n, rng);
        for (const double t : {0.3, 1.0, -0.7}) {
            const Matrix mine = num::expm_skew(l, t);
            const Matrix oracle = taylor_expm(l, t);
            CHECK((mine - oracle).norm() < kTaylorTol * std::max(1.0, oracle.norm()));
        }
    }
}

TEST_CASE("exponential group law and unitarity") {
    std::mt19937_64 rng(19);
    const Matrix l = num::random_skew_hermitian(4, rng);
    const Matrix a = num::expm_skew(l, 0.4);
    const Matrix b = num::expm_skew(l, 0.9);
    const Matrix ab = num::expm_skew(l, 1.3);
    CHECK((a * b - ab).norm() < 1e-12);
    CHECK(num::unitary_residual(a) < 1e-12);
    CHECK((num::expm_skew(l, 0.0) - Matrix::Identity(4, 4)).norm() < 1e-14);
    // inverse at -t
    CHECK((a * num::expm_skew(l, -0.4) - Matrix::Identity(4, 4)).norm() < 1e-12);
    // |det| = 1 on the unitary group
    CHECK(std::abs(std::abs(num::det(a)) - 1.0) < 1e-12);
}

TEST_CASE("exponential rejects non-skew input") {
    Matrix m = Matrix::Identity(3, 3);
    CHECK_THROWS_AS(num::expm_skew(m, 1.0), std::domain_error);
}

TEST_CASE("determinant matches cofactor expansion") {
    std::mt19937_64 rng(23);
    for (int n = 1; n <= 5; ++n) {
        const Matrix m = random_complex(n, rng);
        const Complex mine = num::det(m);
        const Complex oracle = cofactor_det(m);
        CHECK(std::abs(mine - oracle) < kDetTol * std::max(1.0, std::abs(oracle)));
    }
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937_64 rng(29);
    const Matrix a = random_complex(4, rng);
    const Matrix b = random_complex(4, rng);
    CHECK(std::abs(num::det(Matrix(a * b)) - num::det(a) * num::det(b)) <
          1e-9 * std::max(1.0, std::abs(num::det(a) * num::det(b))));
}

TEST_CASE("rank detects planted factorizations") {
    std::mt19937_64 rng(31);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int r = 1; r <= 3; ++r) {
        RealMatrix b(5, r), c(r, 6);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < r; ++j) b(i, j) = gauss(rng);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < 6; ++j) c(i, j) = gauss(rng);
        CHECK(num::real_rank(RealMatrix(b * c)) == r);
    }
    CHECK(num::real_rank(RealMatrix::Zero(4, 4)) == 0);
    CHECK(num::real_rank(RealMatrix::Identity(4, 4)) == 4);

    const Matrix m = random_complex(4, rng);
    CHECK(num::complex_rank(m) == 4);
    Matrix sing(3, 3);
    sing.col(0) = Vector::Ones(3);
    sing.col(1) = Complex(0.0, 2.0) * Vector::Ones(3);
    sing.col(2) = random_complex(3, rng).col(0);
    CHECK(num::complex_rank(sing) == 2);
}

TEST_CASE("kron acts on elementary tensors") {
    std::mt19937_64 rng(37);
    const Matrix a = random_complex(2, rng);
    const Matrix b = random_complex(3, rng);
    const Vector x = num::random_unit_vector(2, rng);
    const Vector y = num::random_unit_vector(3, rng);
    Vector xy(6), axby(6);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) xy(i * 3 + j) = x(i) * y(j);
    const Vector ax = a * x, by = b * y;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) axby(i * 3 + j) = ax(i) * by(j);
    CHECK((num::kron(a, b) * xy - axby).norm() < 1e-13);
    CHECK(num::kron(a, b).rows() == 6);
}

TEST_CASE("random samplers are deterministic and well formed") {
    std::mt19937_64 rng1(101), rng2(101), rng3(202);
    const Vector v1 = num::random_unit_vector(5, rng1);
    const Vector v2 = num::random_unit_vector(5, rng2);
    const Vector v3 = num::random_unit_vector(5, rng3);
    CHECK((v1 - v2).norm() == 0.0);
    CHECK((v1 - v3).norm() > 1e-3);
    CHECK(std::abs(v1.norm() - 1.0) < 1e-14);

    const Matrix s = num::random_skew_hermitian(4, rng1);
    CHECK(num::is_skew_hermitian(s));
    const Matrix st = num::random_skew_traceless(4, rng1);
    CHECK(num::is_skew_hermitian(st));
    CHECK(std::abs(st.trace()) < 1e-13);
}

TEST_CASE("finite guard names the offender") {
    Matrix m = Matrix::Identity(2, 2);
    m(0, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(num::require_finite(m, "probe"), std::invalid_argument);
}

}  // TEST_SUITE
