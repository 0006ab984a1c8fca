#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace sharpcoef;
using namespace testsupport;

namespace
{

// Schur recursion evaluated at a point: phi_{k-1} = (tau_k + z phi_k)/(1 + conj(tau_k) z phi_k).
cplx schur_at(std::span<const cplx> taus, cplx z)
{
    cplx phi = taus.back();
    for (std::size_t k = taus.size() - 1; k-- > 0;)
        phi = (taus[k] + z * phi) / (1.0 + std::conj(taus[k]) * z * phi);
    return z * phi;
}

std::vector<cplx> p_coeffs_pointwise(const std::function<cplx(cplx)> &w, int count)
{
    return cauchy_coeffs([&](cplx z) { return (1.0 + w(z)) / (1.0 - w(z)); }, count);
}

} // namespace

TEST_CASE("tau_to_c examples")
{
    const auto a = tau_to_c({1.0, 0.3, 0.2});
    CHECK(std::abs(a(1) - 2.0) < 1e-15);
    CHECK(std::abs(a(2) - 2.0) < 1e-15);
    CHECK(std::abs(a(3) - 2.0) < 1e-15);

    const auto b = tau_to_c({0.0, 1.0, 0.7});
    CHECK(std::abs(b(1)) < 1e-15);
    CHECK(std::abs(b(2) - 2.0) < 1e-15);
    CHECK(std::abs(b(3)) < 1e-15);

    // Substitution gives 1/4 + 3/4 - 3/16 + 9/16 = 11/8.
    const auto c = tau_to_c({0.5, 0.5, 0.5});
    CHECK(std::abs(c(1) - 1.0) < 1e-15);
    CHECK(std::abs(c(2) - 1.25) < 1e-15);
    CHECK(std::abs(c(3) - 11.0 / 8.0) < 1e-15);
}

TEST_CASE("tau_to_c agrees with the pointwise Schur chain")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const double t1 = uniform(rng, 0.0, 0.99);
        const cplx t2 = random_disk(rng, 0.99), t3 = random_disk(rng, 1.0), t4 = std::polar(1.0, uniform(rng, 0, 6.3));
        const std::array<cplx, 4> taus{t1, t2, t3, t4};
        const auto ref = p_coeffs_pointwise([&](cplx z) { return schur_at(taus, z); }, 4);
        const auto c = tau_to_c({t1, t2, t3});
        for (int n = 1; n <= 3; ++n)
            CHECK(std::abs(c(n) - ref[static_cast<std::size_t>(n)]) < 1e-11);
        const auto chain = schwarz_to_p(schur_chain_series(taus, 8));
        for (int n = 1; n <= 8; ++n) {
            const auto ref8 = p_coeffs_pointwise([&](cplx z) { return schur_at(taus, z); }, 9);
            CHECK(std::abs(chain(n) - ref8[static_cast<std::size_t>(n)]) < 1e-10);
        }
    }
}

TEST_CASE("tau_to_c domain")
{
    CHECK_THROWS_AS(tau_to_c({cplx(0.5, 0.1), 0.0, 0.0}), tau_out_of_disk);
    CHECK_THROWS_AS(tau_to_c({-0.1, 0.0, 0.0}), tau_out_of_disk);
    CHECK_THROWS_AS(tau_to_c({0.5, 1.2, 0.0}), tau_out_of_disk);
    CHECK_THROWS_AS(tau_to_c({0.5, 0.0, cplx(0.0, 1.01)}), tau_out_of_disk);
}

TEST_CASE("tau_to_c stays in the coefficient body on random draws")
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 10000; ++trial) {
        const auto c = tau_to_c({uniform(rng, 0.0, 1.0), random_disk(rng, 1.0), random_disk(rng, 1.0)});
        for (int n = 1; n <= 3; ++n)
            REQUIRE(std::abs(c(n)) <= 2.0 + 1e-12);
    }
}

TEST_CASE("schwarz_series examples")
{
    CHECK(schwarz_series({0.0, {}}, 6).max_abs_diff(PowerSeries::identity(6)) == 0.0);
    CHECK(schwarz_series({std::numbers::pi, {}}, 6).max_abs_diff(PowerSeries::monomial(-1.0, 1, 6)) < 1e-15);
    CHECK(schwarz_series({0.0, {0.0}}, 6).max_abs_diff(PowerSeries::monomial(-1.0, 2, 6)) < 1e-15);
    CHECK_THROWS_AS(schwarz_series({0.0, {cplx(1.0, 0.0)}}, 6), zero_on_boundary);
}

TEST_CASE("schwarz_series matches pointwise Blaschke products")
{
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 300; ++trial) {
        const auto s = random_schwarz(rng, trial % 5);
        const auto ref = cauchy_coeffs([&](cplx z) { return blaschke_at(s, z); }, 9, 0.5);
        CHECK(max_diff(schwarz_series(s, 8).coeffs(), ref) < 1e-10);
    }
}

TEST_CASE("schwarz_to_p examples")
{
    const auto a = schwarz_to_p(PowerSeries::identity(8));
    for (int n = 1; n <= 8; ++n)
        CHECK(std::abs(a(n) - 2.0) < 1e-14);
    const auto b = schwarz_to_p(PowerSeries::monomial(1.0, 2, 8));
    for (int n = 1; n <= 8; ++n)
        CHECK(std::abs(b(n) - (n % 2 == 0 ? 2.0 : 0.0)) < 1e-14);
    const auto z = schwarz_to_p(PowerSeries(8));
    for (int n = 1; n <= 8; ++n)
        CHECK(z(n) == cplx{});
}

TEST_CASE("coefficient bound holds for Schwarz samples")
{
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 10000; ++trial) {
        const auto s = random_schwarz(rng, trial % 5);
        const auto c = schwarz_to_p(schwarz_series(s, 8));
        for (int n = 1; n <= c.size(); ++n)
            REQUIRE(std::abs(c(n)) <= 2.0 + 1e-10);
    }
    CHECK_THROWS_AS(CaratheodoryCoeffs({cplx(2.1)}), coefficient_bound_violation);
}

TEST_CASE("round trip w -> p -> w")
{
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto w = schwarz_series(random_schwarz(rng, trial % 5), 8);
        CHECK(schwarz_from_p(p_from_schwarz(w)).max_abs_diff(w) < 1e-12);
    }
}

TEST_CASE("boundary_p_from_tau examples")
{
    const auto t1 = boundary_p_from_tau({1.0, 0.0, 0.0}, BoundaryCase::t1_unimodular, 8);
    CHECK(t1[0] == cplx(1.0));
    for (std::size_t k = 1; k <= 8; ++k)
        CHECK(std::abs(t1[k] - 2.0) < 1e-14);

    const auto t2 = boundary_p_from_tau({0.0, 1.0, 0.0}, BoundaryCase::t2_unimodular, 8);
    for (std::size_t k = 1; k <= 8; ++k)
        CHECK(std::abs(t2[k] - (k % 2 == 0 ? 2.0 : 0.0)) < 1e-14);

    // T2 with tau2 = -1: p = (1 + (t1 t2 + t1) z + t2 z^2)/(1 + (t1 t2 - t1) z - t2 z^2).
    const double s = 0.6;
    const auto t2m = boundary_p_from_tau({s, -1.0, 0.0}, BoundaryCase::t2_unimodular, 8);
    const auto ref = cauchy_coeffs([&](cplx z) { return (1.0 - z * z) / (1.0 - 2.0 * s * z + z * z); }, 9);
    CHECK(max_diff(t2m.coeffs(), ref) < 1e-11);
    const auto c = schwarz_to_p(schwarz_from_p(t2m));
    CHECK(std::abs(c(1) - 2.0 * s) < 1e-12);

    CHECK_THROWS_AS(boundary_p_from_tau({0.5, 0.0, 0.0}, BoundaryCase::t1_unimodular, 8), case_mismatch);
    CHECK_THROWS_AS(boundary_p_from_tau({1.0, 1.0, 0.0}, BoundaryCase::t2_unimodular, 8), case_mismatch);
    CHECK_THROWS_AS(boundary_p_from_tau({0.5, 0.5, 0.5}, BoundaryCase::t3_unimodular, 8), case_mismatch);
}

TEST_CASE("T3 boundary reproduces tau_to_c")
{
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 2000; ++trial) {
        const TauParams t{uniform(rng, 0.0, 0.99), random_disk(rng, 0.99), std::polar(1.0, uniform(rng, 0.0, 6.3))};
        const auto p = boundary_p_from_tau(t, BoundaryCase::t3_unimodular, 8);
        const auto c = tau_to_c(t);
        for (int n = 1; n <= 3; ++n)
            CHECK(std::abs(p[static_cast<std::size_t>(n)] - c(n)) < 1e-12);
    }
}

TEST_CASE("positivity spot check")
{
    const auto p = p_from_schwarz(PowerSeries::identity(32));
    const auto ok = validate_positive_real_part(p, 0.9, 360);
    CHECK(ok.positive);
    CHECK(ok.min_real_part > 0.0);

    const auto one = validate_positive_real_part(PowerSeries::constant(1.0, 8), 0.9, 360);
    CHECK(one.positive);
    CHECK(std::abs(one.min_real_part - 1.0) < 1e-15);

    const auto bad = validate_positive_real_part(PowerSeries({1.0, 3.0}, 8), 0.9, 360);
    CHECK_FALSE(bad.positive);
    CHECK(std::abs(bad.min_real_part - (1.0 - 2.7)) < 1e-12);
    CHECK(std::abs(bad.at_angle - std::numbers::pi) < 1e-12);

    CHECK_THROWS_AS(validate_positive_real_part(p, 1.0, 10), std::invalid_argument);
}
