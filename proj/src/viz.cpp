#include "lsa/viz.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <unordered_set>

#include "netpbm.hpp"

namespace lsa {

namespace {

std::uint8_t lerp_channel(std::uint8_t from, std::uint8_t to, double s) {
    return static_cast<std::uint8_t>(std::lround(from + (to - from) * s));
}

Rgb lerp(Rgb from, Rgb to, double s) {
    return {lerp_channel(from.r, to.r, s), lerp_channel(from.g, to.g, s), lerp_channel(from.b, to.b, s)};
}

std::string hex(Rgb c) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

void require_nonempty(const LabeledMatrix& m) {
    if (m.values.rows() == 0 || m.values.cols() == 0)
        throw std::invalid_argument("render_heatmap: empty matrix");
    if (m.row_labels.size() != m.values.rows() || m.col_labels.size() != m.values.cols())
        throw std::invalid_argument("render_heatmap: label count does not match matrix shape");
}

}  // namespace

void HeatmapSpec::validate() const {
    if (!(value_floor < value_ceiling))
        throw std::invalid_argument("heatmap: value_floor must be below value_ceiling");
    if (cell_px < 1) throw std::invalid_argument("heatmap: cell_px must be >= 1");
}

Rgb map_color(double value, const HeatmapSpec& spec) {
    const double t = std::clamp((value - spec.value_floor) / (spec.value_ceiling - spec.value_floor), 0.0, 1.0);
    if (spec.palette == Palette::Discrete3) {
        switch (std::lround(2.0 * t)) {
            case 0: return kBlack;
            case 1: return kOrange;
            default: return kWhite;
        }
    }
    if (t <= 0.5) return lerp(kBlack, kOrange, 2.0 * t);
    return lerp(kOrange, kWhite, 2.0 * t - 1.0);
}

std::vector<std::uint8_t> render_heatmap_ppm(const LabeledMatrix& m, const HeatmapSpec& spec) {
    spec.validate();
    require_nonempty(m);
    const std::size_t px = spec.cell_px;
    const std::size_t width = m.values.cols() * px;
    const std::size_t height = m.values.rows() * px;

    const std::string header = "P6 " + std::to_string(width) + " " + std::to_string(height) + " 255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.reserve(header.size() + width * height * 3);
    for (std::size_t r = 0; r < m.values.rows(); ++r) {
        std::vector<std::uint8_t> scanline;
        scanline.reserve(width * 3);
        for (std::size_t c = 0; c < m.values.cols(); ++c) {
            const Rgb color = map_color(m.values(r, c), spec);
            for (std::size_t i = 0; i < px; ++i) scanline.insert(scanline.end(), {color.r, color.g, color.b});
        }
        for (std::size_t i = 0; i < px; ++i) out.insert(out.end(), scanline.begin(), scanline.end());
    }
    return out;
}

std::string render_heatmap_svg(const LabeledMatrix& m, const HeatmapSpec& spec) {
    spec.validate();
    require_nonempty(m);
    const std::size_t px = spec.cell_px;
    std::size_t left = 0;
    std::size_t top = 0;
    if (spec.show_labels) {
        std::size_t longest = 0;
        for (const auto& l : m.row_labels) longest = std::max(longest, l.size());
        left = longest * 8 + 8;
        top = 20;
    }
    const std::size_t width = left + m.values.cols() * px;
    const std::size_t height = top + m.values.rows() * px;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    if (spec.show_labels) {
        for (std::size_t c = 0; c < m.values.cols(); ++c)
            svg << "<text x=\"" << left + c * px + px / 2 << "\" y=\"" << top - 6
                << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">"
                << xml_escape(m.col_labels[c]) << "</text>\n";
        for (std::size_t r = 0; r < m.values.rows(); ++r)
            svg << "<text x=\"" << left - 4 << "\" y=\"" << top + r * px + px / 2 + 4
                << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"end\">"
                << xml_escape(m.row_labels[r]) << "</text>\n";
    }
    for (std::size_t r = 0; r < m.values.rows(); ++r)
        for (std::size_t c = 0; c < m.values.cols(); ++c)
            svg << "<rect x=\"" << left + c * px << "\" y=\"" << top + r * px << "\" width=\"" << px
                << "\" height=\"" << px << "\" fill=\"" << hex(map_color(m.values(r, c), spec)) << "\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

std::size_t distinct_colors(std::span<const std::uint8_t> ppm) {
    const auto h = detail::parse_netpbm_header(ppm, "6");
    const std::size_t count = h.width * h.height;
    if (ppm.size() - h.data_offset < count * 3)
        throw ImageFormatError(ImageFormatError::Kind::TruncatedData, "truncated pixel data");
    std::unordered_set<std::uint32_t> seen;
    for (std::size_t i = 0; i < count; ++i) {
        const auto* p = ppm.data() + h.data_offset + 3 * i;
        seen.insert((std::uint32_t{p[0]} << 16) | (std::uint32_t{p[1]} << 8) | p[2]);
    }
    return seen.size();
}

}  // namespace lsa
