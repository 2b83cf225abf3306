// numkernel.hpp — Dense complex linear algebra: Hermitian inner products, operator
// norms, skew-Hermitian exponentials, rank decisions, determinants.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace gapforge {

using Complex    = std::complex<double>;
using Matrix     = Eigen::MatrixXcd;
using Vector     = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

}  // namespace gapforge

namespace gapforge::num {

// <x,y> = sum_i x_i * conj(y_i). Conjugate-linear in the second argument.
Complex hermitian_inner(const Vector& x, const Vector& y);

// Relative skew-Hermitian defect ||L + L^*||_F / max(||L||_F, eps).
double skew_residual(const Matrix& l);

bool is_skew_hermitian(const Matrix& l, double tol = 1e-10);

// Relative unitarity defect ||g^* g - I||_F / sqrt(n).
double unitary_residual(const Matrix& g);

// Largest singular value. Square input required.
double operator_norm(const Matrix& a);

// Eigendecomposition a = vectors * diag(values) * vectors^H of a Hermitian
// matrix by cyclic Jacobi sweeps. Eigenvalues ascending; vectors unitary to
// machine precision (accumulated plane rotations).
struct HermitianEigen {
    RealVector values;
    Matrix vectors;
};
HermitianEigen jacobi_hermitian(const Matrix& a);

// exp(t*L) for skew-Hermitian L, through the eigenbasis of the Hermitian
// matrix i*L. Rejects inputs with skew defect above 1e-10.
Matrix expm_skew(const Matrix& l, double t);

// Rank by column-pivoted orthogonal triangularization; a pivot counts if its
// magnitude exceeds tol times the largest pivot magnitude.
int real_rank(const RealMatrix& m, double tol = 1e-9);
int complex_rank(const Matrix& m, double tol = 1e-9);

// Determinant via row elimination with partial pivoting.
Complex det(const Matrix& m);

// Re tr(a^* b): the real inner product under which algebra bases are kept
// orthonormal.
double real_frob_inner(const Matrix& a, const Matrix& b);

Matrix kron(const Matrix& a, const Matrix& b);

void require_finite(const Matrix& m, const char* what);

// Seeded sampling helpers shared by the stochastic tests and estimators.
Vector random_unit_vector(int n, std::mt19937_64& rng);
Matrix random_skew_hermitian(int n, std::mt19937_64& rng);
Matrix random_skew_traceless(int n, std::mt19937_64& rng);

}  // namespace gapforge::num
