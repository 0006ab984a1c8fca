#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sharpcoef/functionals.hpp"
#include "support.hpp"

using namespace sharpcoef;
using namespace testsupport;

namespace
{

ClassMember raw(std::vector<cplx> a, ClassTag tag = ClassTag::starlike_e)
{
    a.insert(a.begin(), {cplx{0.0}, cplx{1.0}});
    return {tag, std::move(a), FromCoeffs{}};
}

ClassMember witness(ClassTag tag, std::string_view id) { return extremal_member(catalog_entry(tag, id)).member; }

ClassMember random_member(std::mt19937_64 &rng, ClassTag tag, int degree)
{
    return coeffs_via_ode(schwarz_series(random_schwarz(rng, degree), 8), tag);
}

} // namespace

TEST_CASE("log coefficient examples")
{
    CHECK(std::abs(log_coeffs(witness(ClassTag::starlike_e, "f1"))(1)) == doctest::Approx(0.5).epsilon(1e-15));
    const auto zero = log_coeffs(raw({0, 0, 0, 0, 0, 0, 0}));
    for (int n = 1; n <= 4; ++n)
        CHECK(zero(n) == cplx{});

    const auto koebe = raw({2, 3, 4, 5, 6, 7, 8});
    const auto g = log_coeffs(koebe);
    for (int n = 1; n <= 4; ++n) {
        CHECK(std::abs(g(n) - 1.0 / n) < 1e-14);
        CHECK(std::abs(log_coeff_from_series(koebe, n) - 1.0 / n) < 1e-14);
    }
    CHECK(std::abs(log_coeff_from_series(koebe, 7) - 1.0 / 7.0) < 1e-13);
}

TEST_CASE("polynomial log coefficients agree with the series route")
{
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 5000; ++trial) {
        const auto m = random_member(rng, trial % 2 ? ClassTag::convex_e : ClassTag::starlike_e, trial % 5);
        const auto g = log_coeffs(m);
        for (int n = 1; n <= 4; ++n)
            REQUIRE(std::abs(g(n) - log_coeff_from_series(m, n)) < 1e-13);
    }
}

TEST_CASE("rotation examples")
{
    const auto r = rotate_normalize(raw({cplx(0, 1), 0.3, 0.1}));
    CHECK(std::abs(r.coeff(2) - 1.0) < 1e-15);
    const auto u = rotate_normalize(raw({1.0, cplx(0.2, 0.1), 0.1}));
    CHECK(std::abs(u.coeff(3) - cplx(0.2, 0.1)) < 1e-15);
    const auto v = rotate_normalize(raw({0.0, -0.5, 0.0}));
    CHECK(std::abs(v.coeff(3) - 0.5) < 1e-15);
}

TEST_CASE("Toeplitz determinant examples")
{
    const auto S = ClassTag::starlike_e, C = ClassTag::convex_e;
    CHECK(std::abs(toeplitz_t21(witness(S, "f1")) - 15.0 / 64.0) < 1e-15);
    CHECK(toeplitz_t21(raw({0, 0, 0, 0})) == 0.0);
    CHECK(std::abs(toeplitz_t21(witness(S, "f2")) + 1.0 / 16.0) < 1e-15);
    CHECK(std::abs(toeplitz_t21(witness(C, "f5")) - 15.0 / 256.0) < 1e-15);
    CHECK(std::abs(toeplitz_t21(witness(C, "f6")) + 1.0 / 144.0) < 1e-15);
    CHECK_THROWS_AS(toeplitz_t21(raw({cplx(0.5, 0.5), 0.0, 0.0})), non_real_a2);
}

TEST_CASE("Toeplitz determinant equals gamma1^2 - |gamma2|^2 after rotation")
{
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 5000; ++trial) {
        const auto m = rotate_normalize(random_member(rng, trial % 2 ? ClassTag::convex_e : ClassTag::starlike_e,
                                                      trial % 5));
        const auto g = log_coeffs(m);
        const double oracle = std::norm(g(1)) - std::norm(g(2));
        REQUIRE(std::abs(g(1).imag()) < 1e-12);
        REQUIRE(std::abs(toeplitz_t21(m) - oracle) < 1e-12);
    }
}

TEST_CASE("rotation invariance of moduli")
{
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 3000; ++trial) {
        const auto m = random_member(rng, trial % 2 ? ClassTag::convex_e : ClassTag::starlike_e, trial % 5);
        const auto r = rotate_normalize(m);
        const auto g = log_coeffs(m), h = log_coeffs(r);
        for (int n = 1; n <= 4; ++n)
            REQUIRE(std::abs(std::abs(g(n)) - std::abs(h(n))) < 1e-12);
        REQUIRE(std::abs(zalcman_23(m) - zalcman_23(r)) < 1e-12);
        // |a3 - l a2^2| is invariant for fixed l: both terms carry e^{2i theta}.
        const cplx l(0.7, -0.3);
        REQUIRE(std::abs(fekete_szego(m, l, 0.5) - fekete_szego(r, l, 0.5)) < 1e-12);
    }
}

TEST_CASE("Zalcman examples")
{
    const auto z = zalcman_23(witness(ClassTag::starlike_e, "zalcman_star"));
    CHECK(std::abs(z - 8.0 / (9.0 * std::sqrt(7.0))) < 1e-12);
    CHECK(zalcman_23(raw({0, 0, 0, 0})) == 0.0);
    CHECK(std::abs(zalcman_23(witness(ClassTag::convex_e, "f7")) - 1.0 / 12.0) < 1e-15);
    const auto m = raw({0.5, 0.25, 0.125, 0.0625});
    CHECK(std::abs(generalized_zalcman(m, 2, 3) - zalcman_23(m)) < 1e-15);
    CHECK(std::abs(generalized_zalcman(m, 2, 2) - std::abs(0.25 - 0.25)) < 1e-15);
}

TEST_CASE("Fekete-Szego examples")
{
    const auto S = ClassTag::starlike_e;
    CHECK(std::abs(fekete_szego(witness(S, "f1"), 0.0, 0.25) - 0.5) < 1e-15);
    CHECK(fekete_szego(raw({0, 0, 0}), cplx(3.0, -2.0), 1.0) == 0.0);
    CHECK(std::abs(fekete_szego(witness(S, "f2"), 1.0, 1e-3) - 0.5) < 1e-15);
    CHECK_THROWS_AS(fekete_szego(witness(S, "f1"), 0.0, 0.0), non_positive_mu);
}

TEST_CASE("gamma bounds hold on samples")
{
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 5000; ++trial) {
        const auto s = log_coeffs(random_member(rng, ClassTag::starlike_e, trial % 5));
        const auto c = log_coeffs(random_member(rng, ClassTag::convex_e, trial % 5));
        for (int n = 1; n <= 4; ++n)
            REQUIRE(std::abs(s(n)) <= 1.0 / (2.0 * n) + 1e-9);
        for (int n = 1; n <= 3; ++n)
            REQUIRE(std::abs(c(n)) <= 1.0 / (2.0 * n * (n + 1)) + 1e-9);
    }
}
