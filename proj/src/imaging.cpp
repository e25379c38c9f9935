#include "lsa/imaging.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>

#include "netpbm.hpp"

namespace lsa {

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
    using Kind = ImageFormatError::Kind;
    const auto h = detail::parse_netpbm_header(bytes, "25");
    GrayImage img{h.width, h.height, {}};
    const std::size_t count = h.width * h.height;
    img.pixels.reserve(std::min(count, bytes.size()));

    if (h.format == '5') {
        if (bytes.size() - h.data_offset < count)
            throw ImageFormatError(Kind::TruncatedData, "truncated pixel data: expected " +
                                                            std::to_string(count) + " bytes, got " +
                                                            std::to_string(bytes.size() - h.data_offset));
        for (std::size_t i = 0; i < count; ++i) {
            const auto v = bytes[h.data_offset + i];
            if (v > h.maxval)
                throw ImageFormatError(Kind::InvalidSample, "sample " + std::to_string(v) +
                                                                " exceeds maxval " + std::to_string(h.maxval));
            img.pixels.push_back(v);
        }
        return img;
    }

    std::size_t pos = h.data_offset;
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t v = 0;
        if (!detail::read_uint(bytes, pos, v)) {
            if (detail::skip_space(bytes, pos) >= bytes.size())
                throw ImageFormatError(Kind::TruncatedData, "truncated pixel data: expected " +
                                                                std::to_string(count) + " samples, got " +
                                                                std::to_string(i));
            throw ImageFormatError(Kind::InvalidSample, "non-numeric sample at index " + std::to_string(i));
        }
        if (v > h.maxval)
            throw ImageFormatError(Kind::InvalidSample, "sample " + std::to_string(v) +
                                                            " exceeds maxval " + std::to_string(h.maxval));
        img.pixels.push_back(static_cast<std::uint8_t>(v));
    }
    return img;
}

std::vector<std::uint8_t> write_pgm(const GrayImage& img) {
    const std::string header =
        "P5 " + std::to_string(img.width) + " " + std::to_string(img.height) + " 255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), img.pixels.begin(), img.pixels.end());
    return out;
}

DenseMatrix to_matrix(const GrayImage& img) {
    std::vector<double> values(img.pixels.begin(), img.pixels.end());
    return DenseMatrix(img.height, img.width, std::move(values));
}

CompressedImage compress_image(const GrayImage& img, std::size_t k) {
    return compress_image(img, svd(to_matrix(img)), k);
}

CompressedImage compress_image(const GrayImage& img, const SvdFactors& factors, std::size_t k) {
    const std::size_t max_k = std::min(img.width, img.height);
    if (k < 1 || k > max_k)
        throw std::out_of_range("compress: rank " + std::to_string(k) + " outside [1, " +
                                std::to_string(max_k) + "]");
    if (factors.rows() != img.height || factors.cols() != img.width)
        throw std::invalid_argument("compress: factors do not match image shape");

    const auto approx = reconstruct(truncate(factors, k));
    GrayImage out{img.width, img.height, std::vector<std::uint8_t>(img.pixels.size())};
    for (std::size_t y = 0; y < img.height; ++y)
        for (std::size_t x = 0; x < img.width; ++x) {
            const double v = std::clamp(std::round(approx(y, x)), 0.0, 255.0);
            out.pixels[y * img.width + x] = static_cast<std::uint8_t>(v);
        }

    // Prefix sums over sigma^2 keep both figures monotone in k; the tail sum
    // equals ||A - A_k||_F^2 for the Jacobi factors.
    const auto& s = factors.sigma;
    double head = 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        total += s[i] * s[i];
        if (i < k) head = total;
    }
    double tail = 0.0;
    for (std::size_t i = s.size(); i-- > k;) tail += s[i] * s[i];

    CompressionReport report{k, 0.0, 1.0};
    if (total > 0.0) {
        report.relative_error = std::sqrt(tail / total);
        report.energy_retained = head / total;
    }
    return {std::move(out), report};
}

void write_report_line(std::ostream& out, const CompressionReport& r) {
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << r.k << '\t' << std::fixed << std::setprecision(6) << r.relative_error << '\t'
        << r.energy_retained << '\n';
    out.flags(flags);
    out.precision(precision);
}

}  // namespace lsa
