#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "lsa/imaging.hpp"

namespace lsa::detail {

struct NetpbmHeader {
    char format;  // '2', '5' or '6'
    std::size_t width;
    std::size_t height;
    unsigned maxval;
    std::size_t data_offset;  // first byte after the single separator
};

// Skips whitespace and '#' comments (which run to end of line).
inline std::size_t skip_space(std::span<const std::uint8_t> b, std::size_t pos) {
    while (pos < b.size()) {
        const char c = static_cast<char>(b[pos]);
        if (c == '#') {
            while (pos < b.size() && b[pos] != '\n') ++pos;
        } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f') {
            ++pos;
        } else {
            break;
        }
    }
    return pos;
}

// Reads an unsigned decimal; returns false if no digit is present.
inline bool read_uint(std::span<const std::uint8_t> b, std::size_t& pos, std::size_t& value) {
    pos = skip_space(b, pos);
    std::size_t start = pos;
    value = 0;
    while (pos < b.size() && b[pos] >= '0' && b[pos] <= '9') {
        if (value > 100'000'000) return false;
        value = value * 10 + (b[pos] - '0');
        ++pos;
    }
    return pos > start;
}

/// Parses the header of a P2/P5/P6 file whose magic is in `accepted`.
inline NetpbmHeader parse_netpbm_header(std::span<const std::uint8_t> b, std::string_view accepted) {
    using Kind = ImageFormatError::Kind;
    if (b.size() < 2 || b[0] != 'P' || accepted.find(static_cast<char>(b[1])) == std::string_view::npos)
        throw ImageFormatError(Kind::MalformedHeader,
                               "malformed header: expected magic P" + std::string(accepted));
    NetpbmHeader h{static_cast<char>(b[1]), 0, 0, 0, 0};
    std::size_t pos = 2;
    std::size_t maxval = 0;
    if (!read_uint(b, pos, h.width) || !read_uint(b, pos, h.height) || !read_uint(b, pos, maxval))
        throw ImageFormatError(Kind::MalformedHeader, "malformed header: missing width, height or maxval");
    if (h.width == 0 || h.height == 0)
        throw ImageFormatError(Kind::MalformedHeader, "malformed header: zero image dimension");
    if (maxval == 0)
        throw ImageFormatError(Kind::MalformedHeader, "malformed header: maxval must be positive");
    if (maxval > 255)
        throw ImageFormatError(Kind::UnsupportedMaxval,
                               "unsupported maxval " + std::to_string(maxval) + " (must be <= 255)");
    h.maxval = static_cast<unsigned>(maxval);
    if (pos >= b.size()) throw ImageFormatError(Kind::TruncatedData, "truncated pixel data");
    const char sep = static_cast<char>(b[pos]);
    if (sep != ' ' && sep != '\t' && sep != '\n' && sep != '\r')
        throw ImageFormatError(Kind::MalformedHeader, "malformed header: no separator before data");
    h.data_offset = pos + 1;
    return h;
}

}  // namespace lsa::detail
