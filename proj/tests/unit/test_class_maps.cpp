#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sharpcoef/class_maps.hpp"
#include "support.hpp"

using namespace sharpcoef;
using namespace testsupport;

namespace
{

// int_0^z (e^{w(t)} - 1)/t dt by composite Simpson along the segment.
template <class W> cplx log_integral(W &&w, cplx z)
{
    constexpr int m = 2000;
    auto g = [&](double s) {
        if (s == 0.0)
            return cplx{};
        const cplx t = s * z;
        return (std::exp(w(t)) - 1.0) / t * z;
    };
    // The integrand tends to w'(0) z at s = 0; take it from a tiny step.
    const cplx g0 = g(1e-9);
    cplx sum = g0 + g(1.0);
    for (int k = 1; k < m; ++k)
        sum += (k % 2 == 1 ? 4.0 : 2.0) * g(static_cast<double>(k) / m);
    return sum / (3.0 * m);
}

// a_0..a_count-1 of the class member generated by the pointwise Schwarz function w.
template <class W> std::vector<cplx> member_pointwise(W &&w, ClassTag tag, int count)
{
    if (tag == ClassTag::starlike_e)
        return cauchy_coeffs([&](cplx z) { return z * std::exp(log_integral(w, z)); }, count);
    const auto fp = cauchy_coeffs([&](cplx z) { return std::exp(log_integral(w, z)); }, count);
    std::vector<cplx> a(static_cast<std::size_t>(count));
    for (int n = 1; n < count; ++n)
        a[static_cast<std::size_t>(n)] = fp[static_cast<std::size_t>(n) - 1] / static_cast<double>(n);
    return a;
}

ClassMember from_c(ClassTag tag, std::vector<cplx> c)
{
    const CaratheodoryCoeffs cc(std::move(c));
    return tag == ClassTag::starlike_e ? star_coeffs(cc) : convex_coeffs(cc);
}

} // namespace

TEST_CASE("closed-form starlike coefficients")
{
    const auto f1 = from_c(ClassTag::starlike_e, {2, 2, 2, 2});
    CHECK(std::abs(f1.coeff(2) - 1.0) < 1e-15);
    CHECK(std::abs(f1.coeff(3) - 0.75) < 1e-15);

    const auto id = from_c(ClassTag::starlike_e, {0, 0, 0, 0});
    for (int n = 2; n <= 5; ++n)
        CHECK(id.coeff(n) == cplx{});

    const auto f2 = from_c(ClassTag::starlike_e, {0, 2, 0, 2});
    CHECK(std::abs(f2.coeff(2)) < 1e-15);
    CHECK(std::abs(f2.coeff(3) - 0.5) < 1e-15);
    CHECK(std::abs(f2.coeff(4)) < 1e-15);

    CHECK_THROWS_AS(star_coeffs(CaratheodoryCoeffs({1.0, 1.0, 1.0})), insufficient_coeffs);
}

TEST_CASE("closed-form convex coefficients")
{
    const auto f5 = from_c(ClassTag::convex_e, {2, 2, 2, 2});
    CHECK(std::abs(f5.coeff(2) - 0.5) < 1e-15);
    CHECK(std::abs(f5.coeff(3) - 0.25) < 1e-15);

    const auto f6 = from_c(ClassTag::convex_e, {0, 2, 0, 2});
    CHECK(std::abs(f6.coeff(2)) < 1e-15);
    CHECK(std::abs(f6.coeff(3) - 1.0 / 6.0) < 1e-15);
    CHECK(std::abs(f6.coeff(4)) < 1e-15);

    const auto f7 = from_c(ClassTag::convex_e, {0, 0, 2, 0});
    CHECK(std::abs(f7.coeff(4) - 1.0 / 12.0) < 1e-15);

    CHECK_THROWS_AS(convex_coeffs(CaratheodoryCoeffs({1.0})), insufficient_coeffs);
}

TEST_CASE("ODE route examples")
{
    const auto f1 = coeffs_via_ode(PowerSeries::identity(8), ClassTag::starlike_e);
    CHECK(std::abs(f1.coeff(2) - 1.0) < 1e-15);
    CHECK(std::abs(f1.coeff(3) - 0.75) < 1e-15);

    for (const auto tag : {ClassTag::starlike_e, ClassTag::convex_e}) {
        const auto id = coeffs_via_ode(PowerSeries(8), tag);
        CHECK(id.max_index() == 8);
        CHECK(id.coeff(1) == cplx(1.0));
        for (int n = 2; n <= 8; ++n)
            CHECK(id.coeff(n) == cplx{});
    }

    // a_5 = c_4/40 with c_4 = 2.
    const auto g = coeffs_via_ode(PowerSeries::monomial(1.0, 4, 8), ClassTag::convex_e);
    CHECK(std::abs(g.coeff(5) - 1.0 / 20.0) < 1e-15);

    const auto f3 = coeffs_via_ode(PowerSeries::monomial(1.0, 3, 8), ClassTag::starlike_e);
    CHECK(std::abs(f3.coeff(4) - 1.0 / 3.0) < 1e-15);
}

TEST_CASE("ODE route matches the pointwise quadrature oracle")
{
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 60; ++trial) {
        const auto s = random_schwarz(rng, trial % 5);
        const auto tag = trial % 2 == 0 ? ClassTag::starlike_e : ClassTag::convex_e;
        const auto ref = member_pointwise([&](cplx z) { return blaschke_at(s, z); }, tag, 9);
        const auto m = coeffs_via_ode(schwarz_series(s, 8), tag);
        CHECK(max_diff(m.a, ref) < 1e-9);
    }
}

TEST_CASE("closed form agrees with the ODE route on 10^4 Schwarz draws")
{
    std::mt19937_64 rng(73);
    double worst = 0.0;
    for (int trial = 0; trial < 10000; ++trial) {
        const auto w = schwarz_series(random_schwarz(rng, trial % 5), 8);
        const auto c = schwarz_to_p(w);
        const std::vector<cplx> c4(c.values().begin(), c.values().begin() + 4);
        for (const auto tag : {ClassTag::starlike_e, ClassTag::convex_e}) {
            const auto closed = from_c(tag, c4);
            const auto ode = coeffs_via_ode(w, tag);
            for (int n = 2; n <= 5; ++n)
                worst = std::max(worst, std::abs(closed.coeff(n) - ode.coeff(n)));
        }
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("Alexander relation between the classes")
{
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto w = schwarz_series(random_schwarz(rng, trial % 5), 8);
        const auto g = coeffs_via_ode(w, ClassTag::convex_e);
        const auto f = coeffs_via_ode(w, ClassTag::starlike_e);
        for (int n = 1; n <= 8; ++n)
            CHECK(std::abs(static_cast<double>(n) * g.coeff(n) - f.coeff(n)) < 1e-12);
    }
}

TEST_CASE("extremal catalog expansions")
{
    auto a = [](ClassTag tag, std::string_view id, int n) {
        return extremal_member(catalog_entry(tag, id)).member.coeff(n);
    };
    const auto S = ClassTag::starlike_e, C = ClassTag::convex_e;
    CHECK(std::abs(a(S, "f1", 2) - 1.0) < 1e-12);
    CHECK(std::abs(a(S, "f1", 3) - 0.75) < 1e-12);
    CHECK(std::abs(a(S, "f2", 3) - 0.5) < 1e-12);
    CHECK(std::abs(a(S, "f3", 4) - 1.0 / 3.0) < 1e-12);
    CHECK(std::abs(a(S, "f4_star", 5) - 0.25) < 1e-12);
    CHECK(std::abs(a(C, "f5", 2) - 0.5) < 1e-12);
    CHECK(std::abs(a(C, "f5", 3) - 0.25) < 1e-12);
    CHECK(std::abs(a(C, "f6", 3) - 1.0 / 6.0) < 1e-12);
    CHECK(std::abs(a(C, "f7", 4) - 1.0 / 12.0) < 1e-12);
    CHECK(std::abs(a(C, "f4_convex", 5) - 1.0 / 20.0) < 1e-12);

    // f1's higher coefficients from the pointwise oracle with w = z.
    const auto ref = member_pointwise([](cplx z) { return z; }, S, 6);
    CHECK(std::abs(a(S, "f1", 4) - ref[4]) < 1e-10);
    CHECK(std::abs(a(S, "f1", 5) - ref[5]) < 1e-10);

    CHECK_THROWS_AS(catalog_entry(S, "f5"), std::out_of_range);
    CHECK(extremal_catalog(S).size() == 5);
    CHECK(extremal_catalog(C).size() == 4);
}

TEST_CASE("extremal p has positive real part")
{
    for (const auto tag : {ClassTag::starlike_e, ClassTag::convex_e})
        for (const auto &spec : extremal_catalog(tag)) {
            const auto e = extremal_member(spec, 32);
            CHECK(validate_positive_real_part(e.p, 0.9, 720).positive);
        }
}

TEST_CASE("catalog json")
{
    const auto j = catalog_json(ClassTag::convex_e);
    REQUIRE(j.is_array());
    CHECK(j.size() == 4);
    CHECK(j[0]["id"] == "f5");
    CHECK(j[0]["class"] == "convex_e");
}

TEST_CASE("class tag parsing")
{
    CHECK(parse_class_tag("star_e") == ClassTag::starlike_e);
    CHECK(parse_class_tag("convex_e") == ClassTag::convex_e);
    CHECK_FALSE(parse_class_tag("starlike").has_value());
    CHECK(to_string(ClassTag::starlike_e) == "star_e");
}
