#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lsa {

/// Row-major dense matrix of doubles with positive dimensions and finite entries.
class DenseMatrix {
public:
    /// Zero matrix; throws std::invalid_argument if either dimension is 0.
    DenseMatrix(std::size_t rows, std::size_t cols);
    /// Takes ownership of row-major values; size must equal rows * cols and
    /// every value must be finite.
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);
    /// Convenience for small literals: {{1, 2}, {3, 4}}.
    DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix diagonal(std::span<const double> d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double operator()(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }
    double& operator()(std::size_t r, std::size_t c) { return values_[r * cols_ + c]; }

    std::span<const double> values() const { return values_; }
    std::span<const double> row(std::size_t r) const {
        return std::span<const double>(values_).subspan(r * cols_, cols_);
    }

    DenseMatrix transposed() const;
    DenseMatrix scaled(double factor) const;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> values_;
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

/// Euclidean norm of all entries.
double frobenius_norm(const DenseMatrix& a);

/// sqrt(sum (a_ij - b_ij)^2); throws std::invalid_argument on shape mismatch.
double frobenius_distance(const DenseMatrix& a, const DenseMatrix& b);

/// Thin singular value decomposition a = u * diag(sigma) * v^T.
///
/// u is m x r, v is n x r and r = min(m, n). Singular values are sorted in
/// descending order. Trailing zeros are kept, so r never depends on the
/// numerical rank of the input.
struct SvdFactors {
    DenseMatrix u;
    std::vector<double> sigma;
    DenseMatrix v;

    std::size_t rank() const { return sigma.size(); }
    std::size_t rows() const { return u.rows(); }
    std::size_t cols() const { return v.rows(); }

    friend bool operator==(const SvdFactors&, const SvdFactors&) = default;
};

/// Thrown when the Jacobi sweeps fail to orthogonalise within the sweep cap.
class SvdNotConverged : public std::runtime_error {
public:
    SvdNotConverged(std::size_t rows, std::size_t cols, double residual);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    /// Largest normalised column inner product left after the last sweep.
    double residual() const { return residual_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    double residual_;
};

struct SvdOptions {
    /// Column pair (i, j) counts as orthogonal once
    /// |<a_i, a_j>| <= tolerance * |a_i| * |a_j|.
    double tolerance = 1e-12;
    std::size_t max_sweeps = 60;
};

/// One-sided (Hestenes) Jacobi SVD with cyclic row-by-row sweeps.
///
/// Sign convention: the largest-magnitude entry of each left singular vector
/// is nonnegative (first index wins ties) and the matching right vector is
/// flipped with it. The result is a deterministic function of the input.
SvdFactors svd(const DenseMatrix& a, const SvdOptions& options = {});

/// Keeps the leading k factors; throws std::out_of_range unless 1 <= k <= rank.
SvdFactors truncate(const SvdFactors& f, std::size_t k);

/// u * diag(sigma) * v^T.
DenseMatrix reconstruct(const SvdFactors& f);

}  // namespace lsa
