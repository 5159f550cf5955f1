#include "bregkern/bregkern.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

namespace bk = bregkern;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "bregkern_io_tests";
    fs::create_directories(dir);
    return dir / name;
}

} // namespace

TEST(Csv, RenderAndRoundTrip) {
    const std::string s = bk::render_csv({"a", "b"}, {{1.0, 0.1}, {-2.5, 1e-300}});
    EXPECT_EQ(s, "a,b\n1,0.10000000000000001\n-2.5,1e-300\n");
    EXPECT_THROW((void)bk::render_csv({"a"}, {{1.0, 2.0}}), bk::ArgumentError);
    const auto path = scratch("t.csv");
    bk::write_csv(path, {"x"}, {{3.0}});
    EXPECT_EQ(bk::read_binary_file(path), "x\n3\n");
}

TEST(Files, Errors) {
    EXPECT_THROW((void)bk::read_binary_file("/nonexistent/file.txt"), bk::IoError);
    EXPECT_THROW(bk::write_text_file("/nonexistent/dir/file.txt", "x"), bk::IoError);
}

TEST(Ingest, PointsWithTagsCommentsAndDefaults) {
    const auto pts = bk::parse_points("# header\n\ntheta; 1, 2\n 3,4.5 \neta;-1e-3,+2\n", "mem");
    ASSERT_EQ(pts.size(), 3u);
    EXPECT_EQ(pts[0].coords, bk::theta_coords);
    EXPECT_EQ(pts[0].data, (bk::Vector(2) << 1, 2).finished());
    EXPECT_EQ(pts[1].coords, bk::lambda_coords);
    EXPECT_EQ(pts[1].data[1], 4.5);
    EXPECT_EQ(pts[2].coords, bk::eta_coords);
    EXPECT_EQ(pts[2].data[0], -1e-3);
    EXPECT_EQ(bk::parse_points("1,2", "mem", bk::eta_coords)[0].coords, bk::eta_coords);
}

TEST(Ingest, ParseErrorsCarryLineNumbers) {
    try {
        (void)bk::parse_points("1,2\n\n1,abc\n", "pts.txt");
        FAIL();
    } catch (const bk::ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_NE(std::string(e.what()).find("pts.txt"), std::string::npos);
    }
    EXPECT_THROW((void)bk::parse_points("1,,2", "m"), bk::ParseError);
    EXPECT_THROW((void)bk::parse_points(";1,2", "m"), bk::ParseError);
    EXPECT_THROW((void)bk::parse_points("nan,2", "m"), bk::ParseError);
    EXPECT_THROW((void)bk::parse_counts("1\n-2\n", "m"), bk::ParseError);
    EXPECT_THROW((void)bk::parse_counts("# nothing\n", "m"), bk::ParseError);
}

TEST(Ingest, HistogramFile) {
    const auto path = scratch("h.txt");
    bk::write_text_file(path, "1\n0\n3\n");
    const bk::Vector h = bk::ingest_histogram(path, 0.0);
    EXPECT_EQ(h, (bk::Vector(3) << 0.25, 0.0, 0.75).finished());
    const bk::Vector s = bk::ingest_histogram(path);
    EXPECT_GT(s[1], 0.0);
    EXPECT_NEAR(s.sum(), 1.0, 1e-15);
    bk::write_text_file(path, "1,0\n3\n");
    EXPECT_THROW((void)bk::ingest_histogram(path), bk::ParseError);
}

TEST(Pgm, EightAndSixteenBit) {
    std::string img = "P5\n# comment\n3 2\n255\n";
    for (unsigned char c : {0, 0, 128, 255, 255, 64})
        img += static_cast<char>(c);
    const auto g = bk::parse_pgm(img, "mem");
    EXPECT_EQ(g.width, 3u);
    EXPECT_EQ(g.height, 2u);
    const auto h = bk::intensity_histogram(g, 4);
    EXPECT_EQ(h, (std::vector<double>{2, 1, 1, 2}));
    EXPECT_EQ(bk::intensity_histogram(g, 256)[255], 2.0);

    std::string wide = "P5 2 1 1000\n";
    for (unsigned char c : {0x03, 0xE7, 0x00, 0x01})
        wide += static_cast<char>(c);
    const auto w = bk::parse_pgm(wide, "mem");
    EXPECT_EQ(w.pixels, (std::vector<unsigned>{999, 1}));

    const auto path = scratch("x.pgm");
    bk::write_text_file(path, img);
    EXPECT_EQ(bk::pgm_histogram(path, 4), h);
}

TEST(Pgm, Malformed) {
    EXPECT_THROW((void)bk::parse_pgm("P2\n1 1\n255\n\x01", "m"), bk::ParseError);
    EXPECT_THROW((void)bk::parse_pgm("P5\n2 2\n255\n\x01", "m"), bk::ParseError);
    EXPECT_THROW((void)bk::parse_pgm("P5\n1 1\n100\n\xff", "m"), bk::ParseError);
    EXPECT_THROW((void)bk::parse_pgm("P5\nx 1\n255\n\x01", "m"), bk::ParseError);
    EXPECT_THROW((void)bk::intensity_histogram(bk::GrayImage{}, 0), bk::ArgumentError);
}

TEST(ManifoldSpec, Descriptors) {
    EXPECT_EQ(bk::make_manifold("categorical:3").dimension(), 2u);
    EXPECT_EQ(bk::make_manifold("multinomial:4:10").dimension(), 3u);
    EXPECT_EQ(bk::make_manifold("mixture:5").dimension(), 4u);
    EXPECT_EQ(bk::make_manifold("gaussian:2").dimension(), 5u);
    EXPECT_EQ(bk::make_manifold("psd:3").dimension(), 6u);
    EXPECT_EQ(bk::make_manifold("ekl2d").dimension(), 2u);
    EXPECT_EQ(bk::make_manifold("quadratic:4").dimension(), 4u);
    EXPECT_THROW((void)bk::make_manifold("gaussian"), bk::ArgumentError);
    EXPECT_THROW((void)bk::make_manifold("gaussian:x"), bk::ArgumentError);
    EXPECT_THROW((void)bk::make_manifold("torus:2"), bk::ArgumentError);
    EXPECT_THROW((void)bk::make_manifold("categorical:1"), bk::ArgumentError);
}
