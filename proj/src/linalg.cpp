#include "lsa/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace lsa {

namespace {

void require_positive_shape(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("DenseMatrix: dimensions must be positive, got " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
}

double dot(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

/// Column-major scratch storage; each column is contiguous.
struct Columns {
    std::size_t length;
    std::size_t count;
    std::vector<double> data;

    std::span<double> col(std::size_t j) { return {data.data() + j * length, length}; }
    std::span<const double> col(std::size_t j) const { return {data.data() + j * length, length}; }
};

void rotate(std::span<double> x, std::span<double> y, double c, double s) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

// Replaces column `target` of q with a unit vector orthogonal to every column
// flagged in `valid`, built from the first standard basis vector that
// survives two rounds of Gram-Schmidt.
void complete_basis(Columns& q, std::vector<bool>& valid, std::size_t target) {
    const std::size_t m = q.length;
    for (std::size_t e = 0; e < m; ++e) {
        std::vector<double> cand(m, 0.0);
        cand[e] = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < q.count; ++j) {
                if (!valid[j]) continue;
                auto qj = q.col(j);
                const double proj = dot(qj, cand);
                for (std::size_t i = 0; i < m; ++i) cand[i] -= proj * qj[i];
            }
        }
        const double norm = std::sqrt(dot(cand, cand));
        if (norm > 0.5) {
            auto out = q.col(target);
            for (std::size_t i = 0; i < m; ++i) out[i] = cand[i] / norm;
            valid[target] = true;
            return;
        }
    }
    // Unreachable while fewer than m columns are valid.
    throw std::logic_error("svd: failed to complete orthonormal basis");
}

// Tall case, rows >= cols.
SvdFactors svd_tall(const DenseMatrix& a, const SvdOptions& options) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();

    Columns w{m, n, std::vector<double>(m * n)};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) w.data[j * m + i] = a(i, j);

    Columns v{n, n, std::vector<double>(n * n, 0.0)};
    for (std::size_t j = 0; j < n; ++j) v.data[j * n + j] = 1.0;

    bool converged = (n == 1);
    double residual = 0.0;
    for (std::size_t sweep = 0; sweep < options.max_sweeps && !converged; ++sweep) {
        residual = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                auto wp = w.col(p);
                auto wq = w.col(q);
                const double alpha = dot(wp, wp);
                const double beta = dot(wq, wq);
                if (alpha == 0.0 || beta == 0.0) continue;
                const double gamma = dot(wp, wq);
                const double ratio = std::abs(gamma) / std::sqrt(alpha * beta);
                residual = std::max(residual, ratio);
                if (ratio <= options.tolerance) continue;

                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::hypot(1.0, zeta));
                const double c = 1.0 / std::hypot(1.0, t);
                const double s = c * t;
                rotate(wp, wq, c, s);
                rotate(v.col(p), v.col(q), c, s);
            }
        }
        converged = residual <= options.tolerance;
    }
    if (!converged) throw SvdNotConverged(a.rows(), a.cols(), residual);

    std::vector<double> norms(n);
    for (std::size_t j = 0; j < n; ++j) norms[j] = std::sqrt(dot(w.col(j), w.col(j)));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

    const double sigma_max = norms[order[0]];
    const double negligible =
        sigma_max * static_cast<double>(std::max(m, n)) * std::numeric_limits<double>::epsilon();

    Columns u{m, n, std::vector<double>(m * n, 0.0)};
    std::vector<double> sigma(n, 0.0);
    std::vector<bool> valid(n, false);
    Columns v_sorted{n, n, std::vector<double>(n * n)};
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = order[k];
        std::copy_n(v.col(j).begin(), n, v_sorted.col(k).begin());
        if (sigma_max == 0.0 || norms[j] <= negligible) continue;
        sigma[k] = norms[j];
        auto src = w.col(j);
        auto dst = u.col(k);
        for (std::size_t i = 0; i < m; ++i) dst[i] = src[i] / norms[j];
        valid[k] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        if (!valid[k]) complete_basis(u, valid, k);

    SvdFactors f{DenseMatrix(m, n), std::move(sigma), DenseMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < m; ++i) f.u(i, k) = u.col(k)[i];
        for (std::size_t i = 0; i < n; ++i) f.v(i, k) = v_sorted.col(k)[i];
    }
    return f;
}

void flip_to_convention(SvdFactors& f) {
    for (std::size_t k = 0; k < f.rank(); ++k) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < f.u.rows(); ++i)
            if (std::abs(f.u(i, k)) > std::abs(f.u(best, k))) best = i;
        if (f.u(best, k) < 0.0) {
            for (std::size_t i = 0; i < f.u.rows(); ++i) f.u(i, k) = -f.u(i, k);
            for (std::size_t i = 0; i < f.v.rows(); ++i) f.v(i, k) = -f.v(i, k);
        }
    }
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols) {
    require_positive_shape(rows, cols);
    values_.assign(rows * cols, 0.0);
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
    require_positive_shape(rows, cols);
    if (values_.size() != rows * cols)
        throw std::invalid_argument("DenseMatrix: expected " + std::to_string(rows * cols) +
                                    " values, got " + std::to_string(values_.size()));
    for (double x : values_)
        if (!std::isfinite(x)) throw std::invalid_argument("DenseMatrix: non-finite entry");
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    require_positive_shape(rows_, cols_);
    values_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("DenseMatrix: ragged initializer");
        for (double x : r) {
            if (!std::isfinite(x)) throw std::invalid_argument("DenseMatrix: non-finite entry");
            values_.push_back(x);
        }
    }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> d) {
    DenseMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

DenseMatrix DenseMatrix::scaled(double factor) const {
    DenseMatrix out = *this;
    for (auto& x : out.values_) x *= factor;
    return out;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("multiply: inner dimensions differ");
    DenseMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const double ail = a(i, l);
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += ail * b(l, j);
        }
    return c;
}

double frobenius_norm(const DenseMatrix& a) {
    double s = 0.0;
    for (double x : a.values()) s += x * x;
    return std::sqrt(s);
}

double frobenius_distance(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        std::ostringstream msg;
        msg << "frobenius_distance: shape mismatch " << a.rows() << "x" << a.cols() << " vs "
            << b.rows() << "x" << b.cols();
        throw std::invalid_argument(msg.str());
    }
    double s = 0.0;
    auto av = a.values();
    auto bv = b.values();
    for (std::size_t i = 0; i < av.size(); ++i) {
        const double d = av[i] - bv[i];
        s += d * d;
    }
    return std::sqrt(s);
}

SvdNotConverged::SvdNotConverged(std::size_t rows, std::size_t cols, double residual)
    : std::runtime_error([&] {
          std::ostringstream msg;
          msg << "svd: no convergence for " << rows << "x" << cols
              << " matrix; largest normalised column inner product " << residual;
          return msg.str();
      }()),
      rows_(rows),
      cols_(cols),
      residual_(residual) {}

SvdFactors svd(const DenseMatrix& a, const SvdOptions& options) {
    SvdFactors f = [&] {
        if (a.rows() >= a.cols()) return svd_tall(a, options);
        SvdFactors t = svd_tall(a.transposed(), options);
        return SvdFactors{std::move(t.v), std::move(t.sigma), std::move(t.u)};
    }();
    flip_to_convention(f);
    return f;
}

SvdFactors truncate(const SvdFactors& f, std::size_t k) {
    if (k < 1 || k > f.rank())
        throw std::out_of_range("truncate: rank " + std::to_string(k) + " outside [1, " +
                                std::to_string(f.rank()) + "]");
    SvdFactors out{DenseMatrix(f.u.rows(), k), {f.sigma.begin(), f.sigma.begin() + k},
                   DenseMatrix(f.v.rows(), k)};
    for (std::size_t i = 0; i < f.u.rows(); ++i)
        for (std::size_t j = 0; j < k; ++j) out.u(i, j) = f.u(i, j);
    for (std::size_t i = 0; i < f.v.rows(); ++i)
        for (std::size_t j = 0; j < k; ++j) out.v(i, j) = f.v(i, j);
    return out;
}

DenseMatrix reconstruct(const SvdFactors& f) {
    DenseMatrix out(f.u.rows(), f.v.rows());
    for (std::size_t i = 0; i < f.u.rows(); ++i)
        for (std::size_t l = 0; l < f.rank(); ++l) {
            const double scale = f.u(i, l) * f.sigma[l];
            if (scale == 0.0) continue;
            for (std::size_t j = 0; j < f.v.rows(); ++j) out(i, j) += scale * f.v(j, l);
        }
    return out;
}

}  // namespace lsa
