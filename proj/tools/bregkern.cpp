// bregkern: demos, divergences and SVG export from the command line.
//
// Exit codes: 0 success, 1 invalid input, 2 numerical failure.

#include "bregkern/bregkern.hpp"
#include "bregkern/demos/demos.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace bk = bregkern;

namespace {

bk::DualCoordinate parse_dc(const std::string& s) {
    if (s == "theta" || s == "primal")
        return bk::DualCoordinate::primal;
    if (s == "eta" || s == "dual")
        return bk::DualCoordinate::dual;
    throw bk::ArgumentError("coordinate must be theta/primal or eta/dual, got '" + s + "'");
}

std::array<std::size_t, 2> parse_index(const std::string& s) {
    const auto parts = bk::detail::split(s, ',');
    if (parts.size() != 2)
        throw bk::ArgumentError("--index expects two comma-separated integers");
    std::array<std::size_t, 2> out{};
    for (std::size_t i = 0; i < 2; ++i) {
        const auto [ptr, ec] = std::from_chars(parts[i].data(), parts[i].data() + parts[i].size(), out[i]);
        if (ec != std::errc() || ptr != parts[i].data() + parts[i].size())
            throw bk::ArgumentError("--index expects two comma-separated integers");
    }
    return out;
}

struct DivArgs {
    std::string manifold;
    std::string coords = "theta";
    std::string left;
    std::string right;
    std::string kind = "bregman";
    double alpha = 0.0;
};

void run_div(const DivArgs& a) {
    const bk::BregmanManifold m = bk::make_manifold(a.manifold);
    const auto left = bk::ingest_points(a.left);
    const auto right = bk::ingest_points(a.right);
    if (left.size() != right.size())
        throw bk::ArgumentError(fmt::format("{} left points but {} right points", left.size(), right.size()));
    for (std::size_t i = 0; i < left.size(); ++i) {
        if (a.kind == "bregman") {
            fmt::print("{:.17g}\n", bk::bregman_divergence(m, left[i], right[i], parse_dc(a.coords)));
        } else if (a.kind == "fy") {
            fmt::print("{:.17g}\n", bk::fenchel_young_divergence(m, left[i], right[i]));
        } else if (a.kind == "jensen") {
            fmt::print("{:.17g}\n", bk::skew_jensen_divergence(m, left[i], right[i], a.alpha, parse_dc(a.coords)));
        } else if (a.kind == "chernoff") {
            const auto r = bk::chernoff(m, left[i], right[i]);
            fmt::print("{:.17g},{:.17g}\n", r.alpha, r.information);
        } else {
            throw bk::ArgumentError("unknown divergence kind '" + a.kind + "'");
        }
    }
}

struct ExportArgs {
    std::string manifold;
    std::string points;
    std::string display = "lambda";
    std::string index = "0,1";
    std::string geodesics = "none";
    double tissot = 0.0;
    std::string out = "scene.svg";
};

void run_export(const ExportArgs& a) {
    const bk::BregmanManifold m = bk::make_manifold(a.manifold);
    const auto pts = bk::ingest_points(a.points);
    bk::Scene scene(m, bk::CoordinateTag(a.display), parse_index(a.index));
    std::vector<bk::DualCoordinate> kinds;
    if (a.geodesics == "primal" || a.geodesics == "both")
        kinds.push_back(bk::DualCoordinate::primal);
    if (a.geodesics == "dual" || a.geodesics == "both")
        kinds.push_back(bk::DualCoordinate::dual);
    if (kinds.empty() && a.geodesics != "none")
        throw bk::ArgumentError("--geodesics must be none, primal, dual or both");
    for (const auto dc : kinds)
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            scene.add_curve(bk::geodesic(m, pts[i], pts[i + 1], dc).curve(),
                            {dc == bk::DualCoordinate::primal ? "#1f77b4" : "#d62728", 1.0,
                             i == 0 ? std::string(bk::to_string(dc)) + " geodesic" : "", 1.5});
    for (const auto& p : pts) {
        if (a.tissot > 0.0)
            scene.add_tissot(p, a.tissot, {"#9467bd", 0.6, "", 1.0});
        scene.add_point(p, {"#333333"});
    }
    bk::export_scene(scene, a.out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bregman manifold toolkit"};
    app.require_subcommand(1);

    std::string demo_name;
    bk::demo::Options demo_opt;
    std::string demo_out = ".";
    std::size_t demo_iters = 0;
    double demo_alpha = 0.0;
    std::string hist1, hist2;
    auto* demo = app.add_subcommand("demo", "run a demonstration scenario");
    demo->add_option("name", demo_name, "centroids | ahm | histogram-centroids | chernoff")->required();
    demo->add_option("--out", demo_out, "output directory");
    auto* iters_opt = demo->add_option("--iters", demo_iters, "iterations (ahm)");
    auto* alpha_opt = demo->add_option("--alpha", demo_alpha, "skew parameter (histogram-centroids)");
    auto* h1_opt = demo->add_option("--hist1", hist1, "first histogram file");
    auto* h2_opt = demo->add_option("--hist2", hist2, "second histogram file");

    DivArgs div_args;
    auto* div = app.add_subcommand("div", "divergences between paired points of two files");
    div->add_option("--manifold", div_args.manifold, "e.g. gaussian:1, categorical:3, psd:2")->required();
    div->add_option("--coords", div_args.coords, "theta | eta");
    div->add_option("--left", div_args.left, "points file")->required();
    div->add_option("--right", div_args.right, "points file")->required();
    div->add_option("--kind", div_args.kind, "bregman | fy | jensen | chernoff");
    div->add_option("--alpha", div_args.alpha, "skew parameter for jensen");

    std::string pgm_path;
    std::size_t pgm_bins = 256;
    auto* pgm = app.add_subcommand("hist-from-pgm", "print the intensity histogram of a binary PGM image");
    pgm->add_option("file", pgm_path, "P5 image")->required();
    pgm->add_option("--bins", pgm_bins, "number of intensity bins");

    ExportArgs ex;
    auto* exp = app.add_subcommand("export", "render points (and geodesics) as SVG");
    exp->add_option("--manifold", ex.manifold, "manifold descriptor")->required();
    exp->add_option("--points", ex.points, "points file")->required();
    exp->add_option("--display", ex.display, "display coordinates");
    exp->add_option("--index", ex.index, "two projection indices, e.g. 0,1");
    exp->add_option("--geodesics", ex.geodesics, "none | primal | dual | both");
    exp->add_option("--tissot", ex.tissot, "Tissot ellipse scale (0 = off)");
    exp->add_option("--out", ex.out, "output SVG path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (demo->parsed()) {
            demo_opt.out = demo_out;
            if (iters_opt->count())
                demo_opt.iters = demo_iters;
            if (alpha_opt->count())
                demo_opt.alpha = demo_alpha;
            if (h1_opt->count())
                demo_opt.hist1 = hist1;
            if (h2_opt->count())
                demo_opt.hist2 = hist2;
            std::cout << bk::demo::format_summary(bk::demo::run(demo_name, demo_opt));
        } else if (div->parsed()) {
            run_div(div_args);
        } else if (pgm->parsed()) {
            for (double c : bk::pgm_histogram(pgm_path, pgm_bins))
                fmt::print("{}\n", c);
        } else if (exp->parsed()) {
            run_export(ex);
        }
    } catch (const bk::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const bk::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
