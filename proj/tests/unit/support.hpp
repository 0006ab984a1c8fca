#ifndef SHARPCOEF_TEST_SUPPORT_HPP
#define SHARPCOEF_TEST_SUPPORT_HPP

#include "sharpcoef/caratheodory.hpp"
#include "sharpcoef/series.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace testsupport
{

using sharpcoef::cplx;

inline double uniform(std::mt19937_64 &rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline cplx random_cplx(std::mt19937_64 &rng, double radius)
{
    return {uniform(rng, -radius, radius), uniform(rng, -radius, radius)};
}

inline cplx random_disk(std::mt19937_64 &rng, double radius)
{
    return std::polar(radius * std::sqrt(uniform(rng, 0.0, 1.0)), uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

inline sharpcoef::PowerSeries random_series(std::mt19937_64 &rng, int order, double radius)
{
    std::vector<cplx> c(static_cast<std::size_t>(order) + 1);
    for (auto &x : c)
        x = random_cplx(rng, radius);
    return {c, order};
}

inline sharpcoef::SchwarzSpec random_schwarz(std::mt19937_64 &rng, int degree)
{
    sharpcoef::SchwarzSpec s;
    s.phase = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    for (int k = 0; k < degree; ++k)
        s.zeros.push_back(random_disk(rng, 0.999));
    return s;
}

inline double max_diff(std::span<const cplx> a, std::span<const cplx> b)
{
    double d = 0.0;
    for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k)
        d = std::max(d, std::abs(a[k] - b[k]));
    return d;
}

/// Taylor coefficients 0..count-1 of an analytic function given pointwise,
/// by the trapezoidal rule on |z| = radius.
template <class Fn> std::vector<cplx> cauchy_coeffs(Fn &&f, int count, double radius = 0.5, int nodes = 128)
{
    std::vector<cplx> values(static_cast<std::size_t>(nodes));
    for (int j = 0; j < nodes; ++j)
        values[static_cast<std::size_t>(j)] = f(std::polar(radius, 2.0 * std::numbers::pi * j / nodes));
    std::vector<cplx> c(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n) {
        cplx s{};
        for (int j = 0; j < nodes; ++j)
            s += values[static_cast<std::size_t>(j)] * std::polar(1.0, -2.0 * std::numbers::pi * j * n / nodes);
        c[static_cast<std::size_t>(n)] = s / (static_cast<double>(nodes) * std::pow(radius, n));
    }
    return c;
}

/// Blaschke-product Schwarz function evaluated at a point.
inline cplx blaschke_at(const sharpcoef::SchwarzSpec &s, cplx z)
{
    cplx w = std::polar(1.0, s.phase) * z;
    for (const auto a : s.zeros)
        w *= (a - z) / (1.0 - std::conj(a) * z);
    return w;
}

} // namespace testsupport

#endif
