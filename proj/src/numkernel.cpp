// numkernel.cpp

#include "gapforge/numkernel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace gapforge::num {

namespace {

constexpr double kTiny = std::numeric_limits<double>::min();

void require_square(const Matrix& m, const char* what) {
    if (m.rows() == 0 || m.rows() != m.cols())
        throw std::invalid_argument(std::string(what) + ": square matrix required, got " +
                                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

}  // namespace

Complex hermitian_inner(const Vector& x, const Vector& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("hermitian_inner: size mismatch " + std::to_string(x.size()) +
                                    " vs " + std::to_string(y.size()));
    // Eigen's dot() conjugates its left argument.
    return y.dot(x);
}

double skew_residual(const Matrix& l) {
    double scale = l.norm();
    if (scale == 0.0) return 0.0;
    return (l + l.adjoint()).norm() / scale;
}

bool is_skew_hermitian(const Matrix& l, double tol) {
    return l.rows() == l.cols() && skew_residual(l) <= tol;
}

double unitary_residual(const Matrix& g) {
    require_square(g, "unitary_residual");
    Matrix defect = g.adjoint() * g;
    defect -= Matrix::Identity(g.rows(), g.cols());
    return defect.norm() / std::sqrt(static_cast<double>(g.rows()));
}

HermitianEigen jacobi_hermitian(const Matrix& a) {
    require_square(a, "jacobi_hermitian");
    const Eigen::Index n = a.rows();
    Matrix h = (a + a.adjoint()) / 2.0;
    Matrix v = Matrix::Identity(n, n);

    // Sweep until the off-diagonal mass is negligible against the diagonal.
    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0, diag = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            diag += std::norm(h(i, i));
            for (Eigen::Index j = i + 1; j < n; ++j) off += 2.0 * std::norm(h(i, j));
        }
        if (off <= 1e-24 * diag || off == 0.0) break;

        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double apq = std::abs(h(p, q));
                if (apq <= kTiny) continue;

                // Phase-rotate column q so the pivot becomes real positive.
                const Complex phase = h(p, q) / apq;
                h.col(q) *= std::conj(phase);
                h.row(q) *= phase;
                v.col(q) *= std::conj(phase);

                // Classic symmetric 2x2 rotation zeroing the pivot.
                const double app = h(p, p).real();
                const double aqq = h(q, q).real();
                const double tau = (aqq - app) / (2.0 * apq);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (Eigen::Index i = 0; i < n; ++i) {
                    const Complex hip = h(i, p), hiq = h(i, q);
                    h(i, p) = c * hip - s * hiq;
                    h(i, q) = s * hip + c * hiq;
                }
                for (Eigen::Index j = 0; j < n; ++j) {
                    const Complex hpj = h(p, j), hqj = h(q, j);
                    h(p, j) = c * hpj - s * hqj;
                    h(q, j) = s * hpj + c * hqj;
                }
                for (Eigen::Index i = 0; i < n; ++i) {
                    const Complex vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - s * viq;
                    v(i, q) = s * vip + c * viq;
                }
                h(p, q) = h(q, p) = Complex(0.0, 0.0);
                h(p, p) = Complex(h(p, p).real(), 0.0);
                h(q, q) = Complex(h(q, q).real(), 0.0);
            }
        }
    }

    HermitianEigen out;
    out.values.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) out.values(i) = h(i, i).real();

    // Ascending eigenvalue order, applied to the columns as well.
    std::vector<Eigen::Index> perm(static_cast<size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    std::sort(perm.begin(), perm.end(),
              [&](Eigen::Index i, Eigen::Index j) { return out.values(i) < out.values(j); });
    RealVector sorted(n);
    Matrix cols(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        sorted(i) = out.values(perm[static_cast<size_t>(i)]);
        cols.col(i) = v.col(perm[static_cast<size_t>(i)]);
    }
    out.values = sorted;
    out.vectors = cols;
    return out;
}

double operator_norm(const Matrix& a) {
    require_square(a, "operator_norm");
    HermitianEigen eig = jacobi_hermitian(a.adjoint() * a);
    const double top = eig.values(eig.values.size() - 1);
    return top > 0.0 ? std::sqrt(top) : 0.0;
}

Matrix expm_skew(const Matrix& l, double t) {
    require_square(l, "expm_skew");
    if (!std::isfinite(t)) throw std::invalid_argument("expm_skew: non-finite time");
    const double defect = skew_residual(l);
    if (defect > 1e-10)
        throw std::domain_error("expm_skew: input is not skew-Hermitian (relative defect " +
                                std::to_string(defect) + ")");
    HermitianEigen eig = jacobi_hermitian(Complex(0.0, 1.0) * l);
    const Eigen::Index n = l.rows();
    Matrix scaled(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const Complex ph = std::exp(Complex(0.0, -t * eig.values(j)));
        scaled.col(j) = eig.vectors.col(j) * ph;
    }
    return scaled * eig.vectors.adjoint();
}

int real_rank(const RealMatrix& m, double tol) {
    if (m.size() == 0) return 0;
    if (!(tol > 0.0)) throw std::invalid_argument("real_rank: tolerance must be positive");
    Eigen::ColPivHouseholderQR<RealMatrix> qr(m);
    qr.setThreshold(tol);
    return static_cast<int>(qr.rank());
}

int complex_rank(const Matrix& m, double tol) {
    if (m.size() == 0) return 0;
    if (!(tol > 0.0)) throw std::invalid_argument("complex_rank: tolerance must be positive");
    Eigen::ColPivHouseholderQR<Matrix> qr(m);
    qr.setThreshold(tol);
    return static_cast<int>(qr.rank());
}

Complex det(const Matrix& m) {
    require_square(m, "det");
    return Eigen::PartialPivLU<Matrix>(m).determinant();
}

double real_frob_inner(const Matrix& a, const Matrix& b) {
    return a.cwiseProduct(b.conjugate()).sum().real();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

void require_finite(const Matrix& m, const char* what) {
    if (!m.allFinite())
        throw std::invalid_argument(std::string(what) + ": non-finite entries");
}

Vector random_unit_vector(int n, std::mt19937_64& rng) {
    if (n <= 0) throw std::invalid_argument("random_unit_vector: dimension must be positive");
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector v(n);
    double norm2 = 0.0;
    do {
        for (int i = 0; i < n; ++i) {
            v(i) = Complex(normal(rng), normal(rng));
        }
        norm2 = v.squaredNorm();
    } while (norm2 <= kTiny);
    return v / std::sqrt(norm2);
}

Matrix random_skew_hermitian(int n, std::mt19937_64& rng) {
    if (n <= 0) throw std::invalid_argument("random_skew_hermitian: dimension must be positive");
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Complex(normal(rng), normal(rng));
    return (m - m.adjoint()) / 2.0;
}

Matrix random_skew_traceless(int n, std::mt19937_64& rng) {
    Matrix l = random_skew_hermitian(n, rng);
    l -= (l.trace() / static_cast<double>(n)) * Matrix::Identity(n, n);
    return l;
}

}  // namespace gapforge::num
