#pragma once

#include "bregkern/geometry/bisector.hpp"
#include "bregkern/geometry/geodesic.hpp"
#include "bregkern/io/csv.hpp"
#include "bregkern/io/ingest.hpp"
#include "bregkern/manifolds/categorical.hpp"
#include "bregkern/manifolds/fisher_rao.hpp"
#include "bregkern/manifolds/gaussian.hpp"
#include "bregkern/manifolds/psd.hpp"
#include "bregkern/measures/barycenter.hpp"
#include "bregkern/measures/chernoff.hpp"
#include "bregkern/measures/divergence.hpp"
#include "bregkern/viz/svg.hpp"

#include <fmt/format.h>

#include <cmath>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bregkern::demo {

struct Options {
    std::filesystem::path out = ".";
    std::optional<std::size_t> iters;
    std::optional<double> alpha;
    std::optional<std::filesystem::path> hist1;
    std::optional<std::filesystem::path> hist2;
};

struct Summary {
    std::string name;
    std::vector<std::pair<std::string, double>> scalars;
    std::vector<std::filesystem::path> files;

    [[nodiscard]] double scalar(const std::string& key) const {
        for (const auto& [k, v] : scalars)
            if (k == key)
                return v;
        throw ArgumentError("demo '" + name + "' has no scalar '" + key + "'");
    }
};

/// One `key = value` line per scalar (6 significant digits), then written files.
[[nodiscard]] inline std::string format_summary(const Summary& s) {
    std::string out = fmt::format("demo: {}\n", s.name);
    for (const auto& [k, v] : s.scalars)
        out += fmt::format("{} = {:.6g}\n", k, v);
    for (const auto& f : s.files)
        out += fmt::format("wrote {}\n", f.generic_string());
    return out;
}

namespace detail {

inline std::filesystem::path prepare(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir))
        throw IoError(dir.string(), "cannot create output directory");
    return dir;
}

inline std::vector<double> row(std::initializer_list<double> head, const Vector& tail) {
    std::vector<double> out(head);
    out.insert(out.end(), tail.data(), tail.data() + tail.size());
    return out;
}

} // namespace detail

// Default inputs for the centroid demo: two bivariate normals.
inline const Vector centroid_mean_1 = (Vector(2) << -1.0, 0.0).finished();
inline const Matrix centroid_cov_1 = (Matrix(2, 2) << 1.0, 0.3, 0.3, 0.5).finished();
inline const Vector centroid_mean_2 = (Vector(2) << 1.0, 1.0).finished();
inline const Matrix centroid_cov_2 = (Matrix(2, 2) << 0.6, -0.2, -0.2, 1.2).finished();

/// Sided KL, Bhattacharyya and Fisher-Rao-midpoint centroids of two bivariate normals.
[[nodiscard]] inline Summary centroids(const Options& opt) {
    const auto dir = detail::prepare(opt.out);
    const GaussianManifold g(2);
    const Point p1 = g.point(centroid_mean_1, centroid_cov_1);
    const Point p2 = g.point(centroid_mean_2, centroid_cov_2);
    const std::vector<Point> pts{p1, p2};

    // theta mean: argmin_c sum KL(c : p_i); eta mean: argmin_c sum KL(p_i : c)
    const Point kl_left = g.convert(dual_barycenter(g, pts, DualCoordinate::primal), lambda_coords);
    const Point kl_right = g.convert(dual_barycenter(g, pts, DualCoordinate::dual), lambda_coords);
    const Point bhat = g.convert(skew_burbea_rao_barycenter(g, pts, {}, 0.5, DualCoordinate::primal), lambda_coords);
    const Point fr_mid = fisher_rao_geodesic(g, p1, p2).at(0.5);

    Summary s{"centroids", {}, {}};
    s.scalars.emplace_back("kl_p1_p2", gaussian_kl(g, p1, p2));
    s.scalars.emplace_back("kl_p2_p1", gaussian_kl(g, p2, p1));
    s.scalars.emplace_back("bhattacharyya_p1_p2", bhattacharyya_distance(g, p1, p2));
    const std::vector<std::pair<std::string, Point>> named{
        {"kl_left", kl_left}, {"kl_right", kl_right}, {"bhattacharyya", bhat}, {"fisher_rao_midpoint", fr_mid}};
    for (const auto& [name, c] : named) {
        const Vector mu = g.mean(c);
        s.scalars.emplace_back(name + "_mu1", mu[0]);
        s.scalars.emplace_back(name + "_mu2", mu[1]);
    }

    std::vector<std::vector<double>> rows;
    rows.push_back(detail::row({0.0}, p1.data));
    rows.push_back(detail::row({1.0}, p2.data));
    for (std::size_t i = 0; i < named.size(); ++i)
        rows.push_back(detail::row({static_cast<double>(i + 2)}, named[i].second.data));
    const auto csv = dir / "centroids.csv";
    write_csv(csv, {"id", "mu1", "mu2", "s11", "s12", "s22"}, rows);

    Scene scene(g, lambda_coords, {0, 1});
    const std::vector<std::string> colors{"#333333", "#777777", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
    scene.add_tissot(p1, 1.0, {colors[0], 1.0, "input 1", 1.0});
    scene.add_tissot(p2, 1.0, {colors[1], 1.0, "input 2", 1.0});
    const std::vector<std::string> labels{"KL left (theta mean)", "KL right (eta mean)", "Bhattacharyya",
                                          "Fisher-Rao midpoint"};
    for (std::size_t i = 0; i < named.size(); ++i)
        scene.add_tissot(named[i].second, 1.0, {colors[i + 2], 1.0, labels[i], 1.0});
    scene.add_curve(fisher_rao_geodesic(g, p1, p2), {"#ff7f0e", 0.6, "", 1.0});
    scene.add_point(p1, {colors[0]});
    scene.add_point(p2, {colors[1]});
    for (std::size_t i = 0; i < named.size(); ++i)
        scene.add_point(named[i].second, {colors[i + 2]});
    const auto svg = dir / "centroids.svg";
    export_scene(scene, svg);
    s.files = {csv, svg};
    return s;
}

inline const Matrix ahm_input_a = (Matrix(2, 2) << 1.0, 0.5, 0.5, 2.0).finished();
inline const Matrix ahm_input_b = (Matrix(2, 2) << 1.0, 0.0, 0.0, 0.5).finished();

/// Inductive arithmetic-harmonic mean of two SPD matrices versus A # B.
[[nodiscard]] inline Summary ahm(const Options& opt) {
    const auto dir = detail::prepare(opt.out);
    const std::size_t iters = opt.iters.value_or(5);
    if (iters == 0)
        throw ArgumentError("--iters must be positive");
    const PSDManifold m(2);
    const Point a = m.point(ahm_input_a);
    const Point b = m.point(ahm_input_b);
    const Matrix oracle = spd_geometric_mean(ahm_input_a, ahm_input_b);

    Scene scene(m, lambda_coords, {0, 1});
    std::vector<std::vector<double>> rows;
    Summary s{"ahm", {}, {}};
    Point p = a;
    Point q = b;
    for (std::size_t k = 1; k <= iters; ++k) {
        scene.add_curve(geodesic(m, p, q, DualCoordinate::primal).curve(),
                        {"#1f77b4", 1.0, k == 1 ? "primal geodesic" : "", 1.0});
        scene.add_curve(geodesic(m, p, q, DualCoordinate::dual).curve(),
                        {"#d62728", 1.0, k == 1 ? "dual geodesic" : "", 1.0});
        const Point np = geodesic(m, p, q, DualCoordinate::primal).path(0.5);
        const Point nq = geodesic(m, p, q, DualCoordinate::dual).path(0.5);
        p = np;
        q = nq;
        const Matrix am = m.matrix(p);
        const Matrix hm = m.matrix(q);
        const double err = (am - oracle).norm();
        s.scalars.emplace_back(fmt::format("error_{}", k), err);
        rows.push_back(detail::row({static_cast<double>(k), err}, flatten_sym(am)));
        rows.back().insert(rows.back().end(), {hm(0, 0), hm(0, 1), hm(1, 1)});
        scene.add_point(p, {"#1f77b4"});
        scene.add_point(q, {"#d62728"});
    }
    s.scalars.emplace_back("residual", (m.matrix(p) - oracle).norm());
    scene.add_point(a, {"#333333", 1.0, "A"});
    scene.add_point(b, {"#777777", 1.0, "B"});
    scene.add_point(m.point(oracle), {"#2ca02c", 1.0, "geometric mean"});

    const auto csv = dir / "ahm.csv";
    write_csv(csv, {"iteration", "error", "a11", "a12", "a22", "h11", "h12", "h22"}, rows);
    const auto svg = dir / "ahm.svg";
    export_scene(scene, svg);
    s.files = {csv, svg};
    return s;
}

/// Two smooth 256-bin densities used when no histogram files are given.
[[nodiscard]] inline std::pair<std::vector<double>, std::vector<double>> synthetic_histograms() {
    std::vector<double> h1(256);
    std::vector<double> h2(256);
    for (std::size_t i = 0; i < 256; ++i) {
        const double x = static_cast<double>(i);
        h1[i] = std::exp(-0.5 * std::pow((x - 80.0) / 20.0, 2)) + 0.3 * std::exp(-0.5 * std::pow((x - 180.0) / 15.0, 2));
        h2[i] = std::exp(-0.5 * std::pow((x - 150.0) / 30.0, 2));
    }
    return {h1, h2};
}

/// Jensen-Shannon (theta side) and Jeffreys (eta side) centroids of two
/// histograms on the discrete mixture manifold.
[[nodiscard]] inline Summary histogram_centroids(const Options& opt) {
    const auto dir = detail::prepare(opt.out);
    const double alpha = opt.alpha.value_or(0.5);
    Vector h1;
    Vector h2;
    if (opt.hist1 || opt.hist2) {
        if (!opt.hist1 || !opt.hist2)
            throw ArgumentError("--hist1 and --hist2 must be given together");
        h1 = ingest_histogram(*opt.hist1);
        h2 = ingest_histogram(*opt.hist2);
    } else {
        const auto [c1, c2] = synthetic_histograms();
        h1 = smooth_histogram(c1);
        h2 = smooth_histogram(c2);
    }
    if (h1.size() != h2.size())
        throw ArgumentError("histograms have different bin counts");
    const auto k = static_cast<std::size_t>(h1.size());
    const DiscreteMixtureManifold mix(k);
    const std::vector<Point> pts{Point(lambda_coords, h1), Point(lambda_coords, h2)};

    const auto js = skew_burbea_rao_cccp(mix, pts, {}, alpha, DualCoordinate::primal);
    const auto jf = skew_burbea_rao_cccp(mix, pts, {}, alpha, DualCoordinate::dual);
    const Vector js_p = mix.convert(js.point, lambda_coords).data;
    const Vector jf_p = mix.convert(jf.point, lambda_coords).data;

    Summary s{"histogram-centroids", {}, {}};
    s.scalars.emplace_back("alpha", alpha);
    s.scalars.emplace_back("kl_h1_h2", bregman_divergence(mix, pts[0], pts[1], DualCoordinate::primal));
    s.scalars.emplace_back("kl_h2_h1", bregman_divergence(mix, pts[1], pts[0], DualCoordinate::primal));
    s.scalars.emplace_back("jensen_shannon_h1_h2", skew_jensen_divergence(mix, pts[0], pts[1], 0.0,
                                                                          DualCoordinate::primal, false));
    s.scalars.emplace_back("js_centroid_iterations", static_cast<double>(js.iterations));
    s.scalars.emplace_back("js_centroid_objective", js.objective.back());
    s.scalars.emplace_back("jeffreys_centroid_iterations", static_cast<double>(jf.iterations));
    s.scalars.emplace_back("jeffreys_centroid_objective", jf.objective.back());

    std::vector<std::vector<double>> rows;
    std::vector<Vec2> l1, l2, l3, l4;
    for (Eigen::Index i = 0; i < h1.size(); ++i) {
        const double x = static_cast<double>(i);
        rows.push_back({x, h1[i], h2[i], js_p[i], jf_p[i]});
        l1.emplace_back(x, h1[i]);
        l2.emplace_back(x, h2[i]);
        l3.emplace_back(x, js_p[i]);
        l4.emplace_back(x, jf_p[i]);
    }
    const auto csv = dir / "histogram_centroids.csv";
    write_csv(csv, {"bin", "h1", "h2", "jensen_shannon", "jeffreys"}, rows);

    Scene scene(std::nullopt, lambda_coords, {0, 1});
    scene.add_polyline(l1, {"#333333", 1.0, "histogram 1", 1.0});
    scene.add_polyline(l2, {"#777777", 1.0, "histogram 2", 1.0});
    scene.add_polyline(l3, {"#1f77b4", 1.0, "Jensen-Shannon centroid", 1.5});
    scene.add_polyline(l4, {"#d62728", 1.0, "Jeffreys centroid", 1.5});
    const auto svg = dir / "histogram_centroids.svg";
    export_scene(scene, svg);
    s.files = {csv, svg};
    return s;
}

inline const Vector chernoff_input_1 = (Vector(2) << 0.0, 1.0).finished();
inline const Vector chernoff_input_2 = (Vector(2) << 1.0, 1.5).finished();

/// Chernoff point of two univariate normals: primal geodesic meets dual bisector.
[[nodiscard]] inline Summary chernoff(const Options& opt) {
    const auto dir = detail::prepare(opt.out);
    const GaussianManifold g(1);
    const Point p(lambda_coords, chernoff_input_1);
    const Point q(lambda_coords, chernoff_input_2);
    const ChernoffResult r = bregkern::chernoff(g, p, q);
    const BregmanGeodesic primal = geodesic(g, p, q, DualCoordinate::primal);
    const BregmanGeodesic dual = geodesic(g, p, q, DualCoordinate::dual);
    const BregmanBisector bis = bisector(g, p, q, DualCoordinate::dual);
    // theta(alpha) = alpha theta_1 + (1 - alpha) theta_2 is primal.path(1 - alpha)
    const Point star = primal.path(1.0 - r.alpha);
    const Vector star_l = g.convert(star, lambda_coords).data;

    Summary s{"chernoff", {}, {}};
    s.scalars.emplace_back("alpha_star", r.alpha);
    s.scalars.emplace_back("chernoff_information", r.information);
    s.scalars.emplace_back("equidistance_residual", r.residual);
    s.scalars.emplace_back("bisector_residual", bis.residual(g, star));
    s.scalars.emplace_back("mu_star", star_l[0]);
    s.scalars.emplace_back("var_star", star_l[1]);
    s.scalars.emplace_back("bhattacharyya", bhattacharyya_distance(g, p, q));

    Scene scene(g, eta_coords, {0, 1});
    scene.add_curve(primal.curve(), {"#1f77b4", 1.0, "primal geodesic", 1.5});
    scene.add_curve(dual.curve(), {"#d62728", 1.0, "dual geodesic", 1.5});
    scene.add_bisector(bis, {"#2ca02c", 1.0, "dual bisector", 1.5});
    const double scale = 0.15;
    scene.add_tissot(p, scale, {"#333333", 0.6, "", 1.0});
    scene.add_tissot(q, scale, {"#777777", 0.6, "", 1.0});
    scene.add_tissot(star, scale, {"#9467bd", 0.6, "", 1.0});
    scene.add_point(p, {"#333333", 1.0, "p"});
    scene.add_point(q, {"#777777", 1.0, "q"});
    scene.add_point(star, {"#9467bd", 1.0, "Chernoff point"});
    const auto svg = dir / "chernoff.svg";
    export_scene(scene, svg);

    std::vector<std::vector<double>> rows;
    for (const auto& pt : primal.curve().sample(256)) {
        const Vector e = g.convert(pt, eta_coords).data;
        rows.push_back({0.0, e[0], e[1]});
    }
    for (const auto& pt : dual.curve().sample(256))
        rows.push_back({1.0, pt.data[0], pt.data[1]});
    const Vector star_e = g.convert(star, eta_coords).data;
    rows.push_back({2.0, star_e[0], star_e[1]});
    const auto csv = dir / "chernoff.csv";
    write_csv(csv, {"curve", "eta1", "eta2"}, rows);
    s.files = {csv, svg};
    return s;
}

inline const std::vector<std::string>& names() {
    static const std::vector<std::string> n{"centroids", "ahm", "histogram-centroids", "chernoff"};
    return n;
}

[[nodiscard]] inline Summary run(const std::string& name, const Options& opt) {
    if (name == "centroids")
        return centroids(opt);
    if (name == "ahm")
        return ahm(opt);
    if (name == "histogram-centroids")
        return histogram_centroids(opt);
    if (name == "chernoff")
        return chernoff(opt);
    throw ArgumentError("unknown demo '" + name + "'");
}

} // namespace bregkern::demo
