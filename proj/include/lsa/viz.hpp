#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lsa/imaging.hpp"
#include "lsa/model.hpp"

namespace lsa {

struct Rgb {
    std::uint8_t r, g, b;
    friend bool operator==(const Rgb&, const Rgb&) = default;
};

inline constexpr Rgb kBlack{0, 0, 0};
inline constexpr Rgb kOrange{230, 115, 0};
inline constexpr Rgb kWhite{255, 255, 255};

enum class Palette {
    /// Snap to the nearest of black / orange / white.
    Discrete3,
    /// Piecewise-linear black -> orange -> white.
    Continuous,
};

struct HeatmapSpec {
    Palette palette = Palette::Continuous;
    double value_floor = 0.0;
    double value_ceiling = 2.0;
    std::size_t cell_px = 24;
    bool show_labels = true;  // SVG only

    void validate() const;
};

/// Colour of one cell value; values outside [floor, ceiling] clamp.
Rgb map_color(double value, const HeatmapSpec& spec);

/// Binary P6 image, one cell_px x cell_px block per matrix cell, rows top to
/// bottom in term order and columns left to right in document order.
std::vector<std::uint8_t> render_heatmap_ppm(const LabeledMatrix& m, const HeatmapSpec& spec);

/// SVG with one rect per cell and optional row/column labels.
std::string render_heatmap_svg(const LabeledMatrix& m, const HeatmapSpec& spec);

/// Number of distinct RGB triples in a P6 image; throws ImageFormatError on
/// malformed input.
std::size_t distinct_colors(std::span<const std::uint8_t> ppm);

}  // namespace lsa
