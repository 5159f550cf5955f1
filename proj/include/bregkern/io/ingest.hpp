#pragma once

#include "bregkern/core/coords.hpp"
#include "bregkern/io/files.hpp"
#include "bregkern/manifolds/categorical.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace bregkern {

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::optional<double> parse_real(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || !std::isfinite(v))
        return std::nullopt;
    return v;
}

/// Non-blank lines that do not start with '#', with 1-based line numbers.
template <class Fn>
void for_each_record(const std::string& text, Fn&& fn) {
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto t = trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        fn(t, number);
    }
}

} // namespace detail

/// Parse records `tag;v1,v2,...`; a record without `tag;` uses default_coords.
[[nodiscard]] inline std::vector<Point> parse_points(const std::string& text, const std::string& source,
                                                     const CoordinateTag& default_coords = lambda_coords) {
    std::vector<Point> out;
    detail::for_each_record(text, [&](std::string_view rec, std::size_t line) {
        CoordinateTag tag = default_coords;
        const auto semi = rec.find(';');
        if (semi != std::string_view::npos) {
            const auto name = detail::trim(rec.substr(0, semi));
            if (name.empty())
                throw ParseError(source, line, "empty coordinate tag");
            tag = CoordinateTag(std::string(name));
            rec = rec.substr(semi + 1);
        }
        std::vector<double> values;
        std::size_t start = 0;
        while (true) {
            const auto comma = rec.find(',', start);
            const auto field = rec.substr(start, comma == std::string_view::npos ? rec.size() - start : comma - start);
            const auto v = detail::parse_real(field);
            if (!v)
                throw ParseError(source, line, "not a finite number: '" + std::string(detail::trim(field)) + "'");
            values.push_back(*v);
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        out.emplace_back(tag, Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size())));
    });
    return out;
}

[[nodiscard]] inline std::vector<Point> ingest_points(const std::filesystem::path& path,
                                                      const CoordinateTag& coords = lambda_coords) {
    return parse_points(read_binary_file(path), path.string(), coords);
}

/// One count or density per line.
[[nodiscard]] inline std::vector<double> parse_counts(const std::string& text, const std::string& source) {
    std::vector<double> out;
    detail::for_each_record(text, [&](std::string_view rec, std::size_t line) {
        const auto v = detail::parse_real(rec);
        if (!v)
            throw ParseError(source, line, "not a finite number: '" + std::string(rec) + "'");
        if (*v < 0.0)
            throw ParseError(source, line, "negative count");
        out.push_back(*v);
    });
    if (out.empty())
        throw ParseError(source, 0, "no histogram values");
    return out;
}

/// Histogram file -> probability vector, smoothed by `smoothing` and renormalized.
[[nodiscard]] inline Vector ingest_histogram(const std::filesystem::path& path, double smoothing = 1e-8) {
    const auto counts = parse_counts(read_binary_file(path), path.string());
    return smooth_histogram(counts, smoothing);
}

struct GrayImage {
    std::size_t width = 0;
    std::size_t height = 0;
    unsigned maxval = 255;
    std::vector<unsigned> pixels;
};

/// Binary PGM (P5) decoder, 8- or 16-bit.
[[nodiscard]] inline GrayImage parse_pgm(const std::string& bytes, const std::string& source) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> ParseError { return ParseError(source, 0, "PGM: " + why); };
    auto skip_space = [&] {
        while (pos < bytes.size()) {
            const char c = bytes[pos];
            if (c == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n')
                    ++pos;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                ++pos;
            } else {
                break;
            }
        }
    };
    auto read_uint = [&]() -> std::size_t {
        skip_space();
        std::size_t v = 0;
        const auto [ptr, ec] = std::from_chars(bytes.data() + pos, bytes.data() + bytes.size(), v);
        if (ec != std::errc())
            throw fail("malformed header");
        pos = static_cast<std::size_t>(ptr - bytes.data());
        return v;
    };
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5')
        throw fail("missing P5 magic");
    pos = 2;
    GrayImage img;
    img.width = read_uint();
    img.height = read_uint();
    const std::size_t maxval = read_uint();
    if (img.width == 0 || img.height == 0)
        throw fail("empty image");
    if (maxval == 0 || maxval > 65535)
        throw fail("maxval out of range");
    img.maxval = static_cast<unsigned>(maxval);
    if (pos >= bytes.size())
        throw fail("truncated header");
    ++pos; // single whitespace before the raster
    const std::size_t bpp = maxval < 256 ? 1 : 2;
    const std::size_t n = img.width * img.height;
    if (bytes.size() - pos < n * bpp)
        throw fail("raster is truncated");
    img.pixels.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        unsigned v = static_cast<unsigned char>(bytes[pos + i * bpp]);
        if (bpp == 2)
            v = (v << 8) | static_cast<unsigned char>(bytes[pos + i * bpp + 1]);
        if (v > img.maxval)
            throw fail("pixel exceeds maxval");
        img.pixels[i] = v;
    }
    return img;
}

/// Pixel intensities discretized into `bins` equal-width levels.
[[nodiscard]] inline std::vector<double> intensity_histogram(const GrayImage& img, std::size_t bins = 256) {
    if (bins == 0)
        throw ArgumentError("need at least one bin");
    std::vector<double> counts(bins, 0.0);
    const double levels = static_cast<double>(img.maxval) + 1.0;
    for (unsigned v : img.pixels) {
        auto b = static_cast<std::size_t>(static_cast<double>(v) / levels * static_cast<double>(bins));
        counts[std::min(b, bins - 1)] += 1.0;
    }
    return counts;
}

[[nodiscard]] inline std::vector<double> pgm_histogram(const std::filesystem::path& path, std::size_t bins = 256) {
    return intensity_histogram(parse_pgm(read_binary_file(path), path.string()), bins);
}

} // namespace bregkern
