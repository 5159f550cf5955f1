#pragma once

#include "bregkern/bregkern.hpp"
#include "support/oracles.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace cases {

namespace bk = bregkern;

/// A manifold plus a sampler of interior theta coordinates.
struct Case {
    std::string name;
    bk::BregmanManifold m;
    std::function<bk::Vector(std::mt19937_64&)> theta;
};

inline bk::Vector gaussian_theta(const bk::GaussianManifold& g, std::mt19937_64& rng) {
    const int d = static_cast<int>(g.sample_dimension());
    const auto p = g.point(oracle::random_vector(d, rng), oracle::random_spd(d, rng, 0.5, 2.0));
    return g.convert(p, bk::theta_coords).data;
}

/// Categorical, multinomial, discrete mixture, Gaussian, PSD and extended-KL.
inline std::vector<Case> application_cases() {
    std::vector<Case> out;
    {
        bk::CategoricalManifold m(4);
        out.push_back({"categorical:4", m, [m](std::mt19937_64& rng) {
                           return m.convert(bk::Point(bk::lambda_coords, oracle::random_simplex(4, rng)), bk::theta_coords).data;
                       }});
    }
    {
        bk::MultinomialManifold m(3, 10.0);
        out.push_back({"multinomial:3:10", m, [m](std::mt19937_64& rng) {
                           return m.convert(bk::Point(bk::lambda_coords, oracle::random_simplex(3, rng)), bk::theta_coords).data;
                       }});
    }
    {
        bk::DiscreteMixtureManifold m(4);
        out.push_back({"mixture:4", m, [m](std::mt19937_64& rng) {
                           return m.convert(bk::Point(bk::lambda_coords, oracle::random_simplex(4, rng)), bk::theta_coords).data;
                       }});
    }
    for (std::size_t d : {1u, 2u, 3u}) {
        bk::GaussianManifold g(d);
        out.push_back({"gaussian:" + std::to_string(d), g, [g](std::mt19937_64& rng) { return gaussian_theta(g, rng); }});
    }
    for (int n : {2, 3}) {
        bk::PSDManifold m(static_cast<std::size_t>(n));
        out.push_back({"psd:" + std::to_string(n), m, [m, n](std::mt19937_64& rng) {
                           return m.convert(m.point(oracle::random_spd(n, rng, 0.5, 2.0)), bk::theta_coords).data;
                       }});
    }
    out.push_back({"ekl2d", bk::EKL2DManifold(), [](std::mt19937_64& rng) { return oracle::random_vector(2, rng, 0.2, 3.0); }});
    return out;
}

/// Application cases plus the self-dual quadratic.
inline std::vector<Case> all_cases() {
    auto out = application_cases();
    out.push_back({"quadratic:3", bk::make_quadratic_manifold(3),
                   [](std::mt19937_64& rng) { return oracle::random_vector(3, rng, -2.0, 2.0); }});
    return out;
}

} // namespace cases
