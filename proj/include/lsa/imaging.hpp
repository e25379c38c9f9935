#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsa/linalg.hpp"

namespace lsa {

/// Netpbm parse failure. kind() separates the failure classes so callers and
/// tests can tell a bad header from a short file.
class ImageFormatError : public std::runtime_error {
public:
    enum class Kind { MalformedHeader, TruncatedData, UnsupportedMaxval, InvalidSample };

    ImageFormatError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

struct GrayImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> pixels;  // row-major, height rows of width

    std::uint8_t at(std::size_t x, std::size_t y) const { return pixels[y * width + x]; }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;
};

/// Reads P2 or P5 with maxval <= 255. Comments are allowed in the header.
/// Samples are used as-is; they are not rescaled to 255.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);

/// Canonical P5: "P5 <w> <h> 255\n" followed by the raw pixels.
std::vector<std::uint8_t> write_pgm(const GrayImage& img);

/// Pixel grid as a height x width real matrix.
DenseMatrix to_matrix(const GrayImage& img);

struct CompressionReport {
    std::size_t k;
    /// ||A - A_k||_F / ||A||_F of the real-valued rank-k reconstruction.
    double relative_error;
    /// sum_{i<=k} sigma_i^2 / sum_i sigma_i^2.
    double energy_retained;
};

struct CompressedImage {
    GrayImage image;
    CompressionReport report;
};

/// Rank-k reconstruction of the pixel matrix, rounded half away from zero
/// and clamped to [0, 255]. Throws std::out_of_range unless
/// 1 <= k <= min(width, height).
CompressedImage compress_image(const GrayImage& img, std::size_t k);

/// Same, reusing a decomposition of to_matrix(img) across several ranks.
CompressedImage compress_image(const GrayImage& img, const SvdFactors& factors, std::size_t k);

/// "k<TAB>rel_frobenius_error<TAB>energy_retained" with 6 decimals.
void write_report_line(std::ostream& out, const CompressionReport& r);

}  // namespace lsa
