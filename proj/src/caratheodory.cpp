#include "sharpcoef/caratheodory.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace sharpcoef
{

namespace
{

constexpr double unit_tol = 1e-12;

void check_in_disk(cplx t, const char *name)
{
    if (std::abs(t) > 1.0 + unit_tol)
        throw tau_out_of_disk(std::string(name) + " outside the closed unit disk");
}

bool unimodular(cplx t) { return std::abs(std::abs(t) - 1.0) <= unit_tol; }
bool interior(cplx t) { return std::abs(t) < 1.0 - unit_tol; }

} // namespace

CaratheodoryCoeffs::CaratheodoryCoeffs(std::vector<cplx> c) : c_(std::move(c))
{
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!(std::abs(c_[k]) <= 2.0 + 1e-10))
            throw coefficient_bound_violation("|c_" + std::to_string(k + 1) + "| exceeds 2");
}

CaratheodoryCoeffs tau_to_c(const TauParams &t)
{
    check_in_disk(t.tau1, "tau1");
    check_in_disk(t.tau2, "tau2");
    check_in_disk(t.tau3, "tau3");
    if (std::abs(t.tau1.imag()) > unit_tol || t.tau1.real() < -unit_tol)
        throw tau_out_of_disk("tau1 must be real in [0, 1]");

    const double t1 = t.tau1.real();
    const cplx t2 = t.tau2;
    const cplx t3 = t.tau3;
    const double s = 1.0 - t1 * t1;
    const double s2 = 1.0 - std::norm(t2);

    const cplx c1 = 2.0 * t1;
    const cplx c2 = 2.0 * t1 * t1 + 2.0 * s * t2;
    const cplx c3 = 2.0 * t1 * t1 * t1 + 4.0 * s * t1 * t2 - 2.0 * s * t1 * t2 * t2 + 2.0 * s * s2 * t3;
    return CaratheodoryCoeffs({c1, c2, c3});
}

PowerSeries schwarz_series(const SchwarzSpec &s, int order)
{
    PowerSeries w = PowerSeries::monomial(std::polar(1.0, s.phase), 1, order);
    const PowerSeries z = PowerSeries::identity(order);
    for (const cplx a : s.zeros) {
        if (std::abs(a) > zero_modulus_limit)
            throw zero_on_boundary("Blaschke zero too close to the unit circle");
        const PowerSeries num = sub(PowerSeries::constant(a, order), z);
        const PowerSeries den = sub(PowerSeries::constant(1.0, order), scale(z, std::conj(a)));
        w = mul(w, div(num, den));
    }
    return w;
}

PowerSeries schur_chain_series(std::span<const cplx> taus, int order)
{
    if (taus.empty())
        throw tau_out_of_disk("empty Schur parameter chain");
    for (const cplx t : taus)
        check_in_disk(t, "Schur parameter");

    const PowerSeries z = PowerSeries::identity(order);
    const PowerSeries one = PowerSeries::constant(1.0, order);
    PowerSeries phi = PowerSeries::constant(taus.back(), order);
    for (auto k = static_cast<std::ptrdiff_t>(taus.size()) - 2; k >= 0; --k) {
        const cplx t = taus[static_cast<std::size_t>(k)];
        const PowerSeries zphi = mul(z, phi);
        phi = div(add(PowerSeries::constant(t, order), zphi), add(one, scale(zphi, std::conj(t))));
    }
    return mul(z, phi);
}

PowerSeries p_from_schwarz(const PowerSeries &w)
{
    const PowerSeries one = PowerSeries::constant(1.0, w.order());
    return div(add(one, w), sub(one, w));
}

PowerSeries schwarz_from_p(const PowerSeries &p)
{
    const PowerSeries one = PowerSeries::constant(1.0, p.order());
    return div(sub(p, one), add(p, one));
}

CaratheodoryCoeffs schwarz_to_p(const PowerSeries &w)
{
    if (std::abs(w[0]) > 1e-14)
        throw inner_not_vanishing();
    const PowerSeries p = p_from_schwarz(w);
    return CaratheodoryCoeffs(std::vector<cplx>(p.coeffs().begin() + 1, p.coeffs().end()));
}

PowerSeries boundary_p_from_tau(const TauParams &t, BoundaryCase which, int order)
{
    const cplx t1 = t.tau1, t2 = t.tau2, t3 = t.tau3;
    std::vector<cplx> num, den;
    switch (which) {
    case BoundaryCase::t1_unimodular:
        if (!unimodular(t1))
            throw case_mismatch("T1 case requires |tau1| = 1");
        num = {1.0, t1};
        den = {1.0, -t1};
        break;
    case BoundaryCase::t2_unimodular:
        if (!interior(t1) || !unimodular(t2))
            throw case_mismatch("T2 case requires |tau1| < 1 and |tau2| = 1");
        num = {1.0, std::conj(t1) * t2 + t1, t2};
        den = {1.0, std::conj(t1) * t2 - t1, -t2};
        break;
    case BoundaryCase::t3_unimodular: {
        if (!interior(t1) || !interior(t2) || !unimodular(t3))
            throw case_mismatch("T3 case requires |tau1|, |tau2| < 1 and |tau3| = 1");
        const cplx b1 = std::conj(t2) * t3 + std::conj(t1) * t2;
        const cplx b2 = std::conj(t1) * t3;
        const cplx b3 = t1 * std::conj(t2) * t3;
        num = {1.0, b1 + t1, b2 + b3 + t2, t3};
        den = {1.0, b1 - t1, b2 - b3 - t2, -t3};
        break;
    }
    }
    return div(PowerSeries(num, order), PowerSeries(den, order));
}

PowerSeries two_parameter_p(double t1, cplx t2, int order)
{
    if (t1 < -unit_tol || t1 > 1.0 + unit_tol || !unimodular(t2))
        throw case_mismatch("two-parameter form needs t1 in [0, 1] and |t2| = 1");
    const PowerSeries num({1.0, t1 * t2 + t1, t2}, order);
    const PowerSeries den({1.0, t1 * t2 - t1, -t2}, order);
    return div(num, den);
}

PositivityCheck validate_positive_real_part(const PowerSeries &p, double radius, int gridpoints)
{
    if (!(radius > 0.0 && radius < 1.0))
        throw std::invalid_argument("positivity check radius must lie in (0, 1)");
    if (gridpoints < 1)
        throw std::invalid_argument("positivity check needs at least one grid point");

    PositivityCheck out{true, std::numeric_limits<double>::infinity(), 0.0};
    for (int k = 0; k < gridpoints; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / gridpoints;
        const double re = p.evaluate(std::polar(radius, theta)).real();
        if (re < out.min_real_part) {
            out.min_real_part = re;
            out.at_angle = theta;
        }
    }
    out.positive = out.min_real_part > -1e-9;
    return out;
}

} // namespace sharpcoef
