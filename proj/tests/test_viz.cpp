#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "lsa/viz.hpp"

using namespace lsa;

namespace {

LabeledMatrix single(double v) { return {{"w"}, {"d"}, DenseMatrix{{v}}}; }

double luminance(Rgb c) { return 0.2126 * c.r + 0.7152 * c.g + 0.0722 * c.b; }

HeatmapSpec discrete() {
    HeatmapSpec s;
    s.palette = Palette::Discrete3;
    return s;
}

Rgb pixel(const std::vector<std::uint8_t>& ppm, std::size_t x, std::size_t y, std::size_t width) {
    // Canonical header ends at the first newline.
    std::size_t pos = 0;
    while (ppm[pos] != '\n') ++pos;
    ++pos;
    const auto* p = ppm.data() + pos + 3 * (y * width + x);
    return {p[0], p[1], p[2]};
}

}  // namespace

TEST(MapColor, DiscreteAnchors) {
    const auto s = discrete();
    EXPECT_EQ(map_color(0.0, s), kBlack);
    EXPECT_EQ(map_color(1.0, s), kOrange);
    EXPECT_EQ(map_color(2.0, s), kWhite);
    EXPECT_EQ(map_color(-3.0, s), kBlack);
    EXPECT_EQ(map_color(7.0, s), kWhite);
    EXPECT_EQ(map_color(0.8, s), kOrange);
}

TEST(MapColor, ContinuousAnchorsAndClamp) {
    HeatmapSpec s;
    EXPECT_EQ(map_color(0.0, s), kBlack);
    EXPECT_EQ(map_color(1.0, s), kOrange);
    EXPECT_EQ(map_color(2.0, s), kWhite);
    EXPECT_EQ(map_color(-0.4, s), kBlack);
    EXPECT_EQ(map_color(2.5, s), kWhite);
    EXPECT_EQ(map_color(0.5, s), (Rgb{115, 58, 0}));  // halfway black -> orange
}

TEST(MapColor, ContinuousIsMonotoneInLuminance) {
    HeatmapSpec s;
    double prev = -1.0;
    for (int i = -50; i <= 250; ++i) {
        const double lum = luminance(map_color(i / 100.0, s));
        EXPECT_GE(lum, prev) << i;
        prev = lum;
    }
}

TEST(HeatmapSpec, Validation) {
    HeatmapSpec s;
    s.value_floor = 2.0;
    s.value_ceiling = 2.0;
    EXPECT_THROW(s.validate(), std::invalid_argument);
    HeatmapSpec z;
    z.cell_px = 0;
    EXPECT_THROW(z.validate(), std::invalid_argument);
}

TEST(RenderPpm, SingleBlackCell) {
    auto spec = discrete();
    spec.cell_px = 1;
    const auto ppm = render_heatmap_ppm(single(0.0), spec);
    const std::string expected_header = "P6 1 1 255\n";
    ASSERT_EQ(ppm.size(), expected_header.size() + 3);
    EXPECT_EQ(std::string(ppm.begin(), ppm.begin() + expected_header.size()), expected_header);
    EXPECT_EQ(ppm[expected_header.size()], 0);
    EXPECT_EQ(distinct_colors(ppm), 1u);
}

TEST(RenderPpm, LayoutFollowsRowsAndColumns) {
    LabeledMatrix m{{"t1", "t2"}, {"d1", "d2", "d3"}, DenseMatrix{{0, 1, 2}, {2, 1, 0}}};
    auto spec = discrete();
    spec.cell_px = 3;
    const auto ppm = render_heatmap_ppm(m, spec);
    const std::string header = "P6 9 6 255\n";
    ASSERT_EQ(ppm.size(), header.size() + 9 * 6 * 3);
    EXPECT_EQ(pixel(ppm, 0, 0, 9), kBlack);
    EXPECT_EQ(pixel(ppm, 4, 2, 9), kOrange);
    EXPECT_EQ(pixel(ppm, 8, 0, 9), kWhite);
    EXPECT_EQ(pixel(ppm, 0, 5, 9), kWhite);
    EXPECT_EQ(pixel(ppm, 8, 3, 9), kBlack);
}

TEST(RenderPpm, SampleDiscreteHasThreeColors) {
    const auto m = to_labeled(lsa::testing::sample_matrix());
    EXPECT_EQ(distinct_colors(render_heatmap_ppm(m, discrete())), 3u);
}

TEST(RenderPpm, ReconstructionsHaveMoreShades) {
    const auto model = fit(lsa::testing::sample_matrix());
    for (std::size_t k : {2u, 6u}) {
        const auto ppm = render_heatmap_ppm(reconstruct_at_rank(model, k), HeatmapSpec{});
        EXPECT_GT(distinct_colors(ppm), 3u) << k;
    }
}

TEST(RenderPpm, DiscreteNeverLeavesPalette) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> d(-3.0, 5.0);
    std::vector<double> v(20 * 7);
    for (auto& x : v) x = d(rng);
    LabeledMatrix m{std::vector<std::string>(20, "t"), std::vector<std::string>(7, "d"), DenseMatrix(20, 7, v)};
    auto spec = discrete();
    for (std::size_t r = 0; r < 20; ++r)
        for (std::size_t c = 0; c < 7; ++c) {
            const auto col = map_color(m.values(r, c), spec);
            EXPECT_TRUE(col == kBlack || col == kOrange || col == kWhite);
        }
    EXPECT_LE(distinct_colors(render_heatmap_ppm(m, spec)), 3u);
}

TEST(RenderPpm, Deterministic) {
    const auto model = fit(lsa::testing::sample_matrix());
    const auto m = reconstruct_at_rank(model, 6);
    EXPECT_EQ(render_heatmap_ppm(m, HeatmapSpec{}), render_heatmap_ppm(m, HeatmapSpec{}));
    EXPECT_EQ(render_heatmap_svg(m, HeatmapSpec{}), render_heatmap_svg(m, HeatmapSpec{}));
}

TEST(RenderSvg, OneRectPerCellAndLabels) {
    const auto m = to_labeled(lsa::testing::sample_matrix());
    const auto svg = render_heatmap_svg(m, discrete());
    std::size_t rects = 0;
    for (auto pos = svg.find("<rect"); pos != std::string::npos; pos = svg.find("<rect", pos + 1)) ++rects;
    EXPECT_EQ(rects, 12u * 9u);
    EXPECT_NE(svg.find(">human</text>"), std::string::npos);
    EXPECT_NE(svg.find(">m4</text>"), std::string::npos);
    EXPECT_NE(svg.find("#e67300"), std::string::npos);

    auto bare = discrete();
    bare.show_labels = false;
    EXPECT_EQ(render_heatmap_svg(m, bare).find("<text"), std::string::npos);
}

TEST(RenderSvg, EscapesLabels) {
    LabeledMatrix m{{"a<b"}, {"x&y"}, DenseMatrix{{1}}};
    const auto svg = render_heatmap_svg(m, HeatmapSpec{});
    EXPECT_NE(svg.find("a&lt;b"), std::string::npos);
    EXPECT_NE(svg.find("x&amp;y"), std::string::npos);
}

TEST(Render, LabelMismatchThrows) {
    LabeledMatrix m{{"a", "b"}, {"d"}, DenseMatrix{{1}}};
    EXPECT_THROW(render_heatmap_ppm(m, HeatmapSpec{}), std::invalid_argument);
}

TEST(DistinctColors, SolidBlack) {
    std::string ppm = "P6 2 2 255\n";
    ppm.append(12, '\0');
    EXPECT_EQ(distinct_colors(std::vector<std::uint8_t>(ppm.begin(), ppm.end())), 1u);
}

TEST(DistinctColors, MalformedInput) {
    auto bytes = [](const std::string& s) { return std::vector<std::uint8_t>(s.begin(), s.end()); };
    EXPECT_THROW(distinct_colors(bytes("P5 1 1 255\n\x01")), ImageFormatError);
    EXPECT_THROW(distinct_colors(bytes("P6 2 2 255\n\x01\x02")), ImageFormatError);
    EXPECT_THROW(distinct_colors(bytes("")), ImageFormatError);
}
