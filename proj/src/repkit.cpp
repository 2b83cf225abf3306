// repkit.cpp

#include "gapforge/repkit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gapforge::rep {

namespace {

const Complex kI(0.0, 1.0);

void require_dim(int n, const char* what) {
    if (n <= 0) throw std::invalid_argument(std::string(what) + ": dimension must be positive");
}

void validate_family(const std::vector<Matrix>& elems, const char* what) {
    if (elems.empty()) throw std::invalid_argument(std::string(what) + ": empty element list");
    const Eigen::Index n = elems[0].rows();
    for (const Matrix& m : elems)
        if (m.rows() != n || m.cols() != n)
            throw std::invalid_argument(std::string(what) + ": elements differ in shape");
}

}  // namespace

WedgeIndex WedgeIndex::make(int n, int k) {
    if (n <= 0 || k <= 0 || k > n)
        throw std::invalid_argument("WedgeIndex: need 1 <= k <= n, got k=" + std::to_string(k) +
                                    ", n=" + std::to_string(n));
    WedgeIndex idx;
    idx.n = n;
    idx.k = k;
    std::vector<int> cur(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
    while (true) {
        idx.subsets.push_back(cur);
        int pos = k - 1;
        while (pos >= 0 && cur[static_cast<size_t>(pos)] == n - k + pos) --pos;
        if (pos < 0) break;
        ++cur[static_cast<size_t>(pos)];
        for (int i = pos + 1; i < k; ++i)
            cur[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)] + 1;
    }
    return idx;
}

int WedgeIndex::index_of(const std::vector<int>& sorted_subset) const {
    auto it = std::lower_bound(subsets.begin(), subsets.end(), sorted_subset);
    if (it == subsets.end() || *it != sorted_subset)
        throw std::invalid_argument("WedgeIndex: subset not found");
    return static_cast<int>(it - subsets.begin());
}

std::vector<Matrix> su_standard(int n) {
    require_dim(n, "su_standard");
    if (n < 2) throw std::invalid_argument("su_standard: need n >= 2");
    std::vector<Matrix> out;
    out.reserve(static_cast<size_t>(n) * n - 1);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Matrix a = Matrix::Zero(n, n);
            a(i, j) = inv_sqrt2;
            a(j, i) = -inv_sqrt2;
            out.push_back(a);
            Matrix s = Matrix::Zero(n, n);
            s(i, j) = kI * inv_sqrt2;
            s(j, i) = kI * inv_sqrt2;
            out.push_back(s);
        }
    }
    for (int k = 1; k < n; ++k) {
        Matrix d = Matrix::Zero(n, n);
        const double scale = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
        for (int i = 0; i < k; ++i) d(i, i) = kI * scale;
        d(k, k) = -kI * (static_cast<double>(k) * scale);
        out.push_back(d);
    }
    return out;
}

std::vector<Matrix> so_embedded(int n) {
    require_dim(n, "so_embedded");
    if (n < 2) throw std::invalid_argument("so_embedded: need n >= 2");
    std::vector<Matrix> out;
    out.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Matrix r = Matrix::Zero(n, n);
            r(i, j) = 1.0;
            r(j, i) = -1.0;
            out.push_back(r);
        }
    return out;
}

std::vector<Matrix> product_lift(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
    validate_family(a, "product_lift");
    validate_family(b, "product_lift");
    const Matrix ia = Matrix::Identity(a[0].rows(), a[0].rows());
    const Matrix ib = Matrix::Identity(b[0].rows(), b[0].rows());
    std::vector<Matrix> out;
    out.reserve(a.size() + b.size());
    for (const Matrix& l : a) out.push_back(num::kron(l, ib));
    for (const Matrix& m : b) out.push_back(num::kron(ia, m));
    return out;
}

Matrix wedge_lift_algebra(const Matrix& l, int k) {
    if (l.rows() != l.cols()) throw std::invalid_argument("wedge_lift_algebra: square input required");
    const int n = static_cast<int>(l.rows());
    const WedgeIndex idx = WedgeIndex::make(n, k);
    Matrix out = Matrix::Zero(idx.dim(), idx.dim());

    std::vector<int> replaced(static_cast<size_t>(k));
    for (int ci = 0; ci < idx.dim(); ++ci) {
        const std::vector<int>& subset = idx.subsets[static_cast<size_t>(ci)];
        for (int t = 0; t < k; ++t) {
            const int src = subset[static_cast<size_t>(t)];
            for (int a = 0; a < n; ++a) {
                const Complex coeff = l(a, src);
                if (coeff == Complex(0.0, 0.0)) continue;
                if (a == src) {
                    out(ci, ci) += coeff;
                    continue;
                }
                // Substituted index must not collide with the rest of the subset.
                bool collision = false;
                int below = 0;
                for (int u = 0; u < k; ++u) {
                    if (u == t) continue;
                    const int v = subset[static_cast<size_t>(u)];
                    collision = collision || (v == a);
                    below += (v < a) ? 1 : 0;
                }
                if (collision) continue;
                replaced = subset;
                replaced[static_cast<size_t>(t)] = a;
                std::sort(replaced.begin(), replaced.end());
                const int sign = ((t - below) % 2 == 0) ? 1 : -1;
                out(idx.index_of(replaced), ci) += static_cast<double>(sign) * coeff;
            }
        }
    }
    return out;
}

Matrix wedge_lift_group(const Matrix& g, int k) {
    if (g.rows() != g.cols()) throw std::invalid_argument("wedge_lift_group: square input required");
    const double defect = num::unitary_residual(g);
    if (defect > 1e-9)
        throw std::domain_error("wedge_lift_group: input is not unitary (relative defect " +
                                std::to_string(defect) + ")");
    const int n = static_cast<int>(g.rows());
    const WedgeIndex idx = WedgeIndex::make(n, k);
    Matrix out(idx.dim(), idx.dim());
    Matrix minor(k, k);
    for (int ci = 0; ci < idx.dim(); ++ci) {
        const std::vector<int>& cols = idx.subsets[static_cast<size_t>(ci)];
        for (int ri = 0; ri < idx.dim(); ++ri) {
            const std::vector<int>& rows = idx.subsets[static_cast<size_t>(ri)];
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    minor(i, j) = g(rows[static_cast<size_t>(i)], cols[static_cast<size_t>(j)]);
            out(ri, ci) = num::det(minor);
        }
    }
    return out;
}

std::vector<Matrix> sym_power_su2(int m) {
    if (m < 1) throw std::invalid_argument("sym_power_su2: degree must be at least 1");
    const int d = m + 1;
    const double j = m / 2.0;

    Matrix jz = Matrix::Zero(d, d);
    Matrix jp = Matrix::Zero(d, d);
    for (int a = 0; a < d; ++a) {
        const double mu = j - a;
        jz(a, a) = mu;
        if (a > 0) jp(a - 1, a) = std::sqrt(j * (j + 1) - mu * (mu + 1));
    }
    const Matrix jm = jp.transpose();

    std::vector<Matrix> out;
    out.push_back(kI * (jp + jm) / 2.0);  // i Jx
    out.push_back((jp - jm) / 2.0);       // i Jy
    out.push_back(kI * jz);               // i Jz
    return out;
}

std::vector<Matrix> conjugate_basis(const std::vector<Matrix>& elements) {
    validate_family(elements, "conjugate_basis");
    std::vector<Matrix> out;
    out.reserve(elements.size());
    for (const Matrix& m : elements) out.push_back(m.conjugate());
    return out;
}

}  // namespace gapforge::rep
