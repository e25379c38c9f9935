#pragma once

// Test-only reference computations. Nothing here calls into the one-sided
// Jacobi SVD under test.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "lsa/linalg.hpp"

namespace lsa::oracle {

/// Eigenvalues of a symmetric matrix by classical two-sided cyclic Jacobi,
/// sorted descending.
inline std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        double diag = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) (i == j ? diag : off) += a[i][j] * a[i][j];
        if (off <= 1e-30 * diag || off == 0.0) break;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {  // A <- A J
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {  // A <- J^T A
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

/// The leading min(m, n) singular values as square roots of eig(a^T a).
inline std::vector<double> singular_values_via_gram(const DenseMatrix& a) {
    const std::size_t n = a.cols();
    std::vector<std::vector<double>> g(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t r = 0; r < a.rows(); ++r) g[i][j] += a(r, i) * a(r, j);
    auto ev = symmetric_eigenvalues(std::move(g));
    ev.resize(std::min(a.rows(), a.cols()));
    for (auto& x : ev) x = std::sqrt(std::max(x, 0.0));
    return ev;
}

inline DenseMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(rows * cols);
    for (auto& x : v) x = dist(rng);
    return DenseMatrix(rows, cols, std::move(v));
}

/// max |q^T q - I| over the columns of q.
inline double orthonormality_error(const DenseMatrix& q) {
    double worst = 0.0;
    for (std::size_t i = 0; i < q.cols(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) {
            double d = 0.0;
            for (std::size_t r = 0; r < q.rows(); ++r) d += q(r, i) * q(r, j);
            worst = std::max(worst, std::abs(d - (i == j ? 1.0 : 0.0)));
        }
    return worst;
}

/// Direct triple sum of u * diag(sigma) * v^T over the first k factors.
inline DenseMatrix naive_reconstruction(const SvdFactors& f, std::size_t k) {
    DenseMatrix out(f.u.rows(), f.v.rows());
    for (std::size_t i = 0; i < f.u.rows(); ++i)
        for (std::size_t j = 0; j < f.v.rows(); ++j) {
            double s = 0.0;
            for (std::size_t l = 0; l < k; ++l) s += f.u(i, l) * f.sigma[l] * f.v(j, l);
            out(i, j) = s;
        }
    return out;
}

}  // namespace lsa::oracle
