#include "sharpcoef/class_maps.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sharpcoef
{

std::string_view to_string(ClassTag tag) noexcept
{
    return tag == ClassTag::starlike_e ? "star_e" : "convex_e";
}

std::optional<ClassTag> parse_class_tag(std::string_view s) noexcept
{
    if (s == "star_e" || s == "starlike_e")
        return ClassTag::starlike_e;
    if (s == "convex_e")
        return ClassTag::convex_e;
    return std::nullopt;
}

namespace
{

std::string fmt_c(cplx z) { return fmt::format("{:.17g}{:+.17g}i", z.real(), z.imag()); }

struct ProvenancePrinter
{
    std::string operator()(const FromCoeffs &) const { return "coeffs"; }
    std::string operator()(const FromTau &t) const
    {
        return fmt::format("tau(t1={}, t2={}, t3={}, tail={})", fmt_c(t.tau.tau1), fmt_c(t.tau.tau2),
                           fmt_c(t.tau.tau3), fmt_c(t.tail));
    }
    std::string operator()(const FromSchwarz &s) const
    {
        std::string out = fmt::format("schwarz(phase={:.17g}, zeros=[", s.spec.phase);
        for (std::size_t k = 0; k < s.spec.zeros.size(); ++k)
            out += (k ? ", " : "") + fmt_c(s.spec.zeros[k]);
        return out + "])";
    }
    std::string operator()(const FromExtremal &e) const { return e.id; }
};

std::vector<cplx> first_four(const CaratheodoryCoeffs &c)
{
    if (c.size() < 4)
        throw insufficient_coeffs("closed-form coefficient map needs c_1..c_4");
    return {c(1), c(2), c(3), c(4)};
}

} // namespace

std::string describe(const Provenance &p) { return std::visit(ProvenancePrinter{}, p); }

PowerSeries ClassMember::series() const { return PowerSeries(a, max_index()); }

ClassMember star_coeffs(const CaratheodoryCoeffs &c)
{
    const auto v = first_four(c);
    const cplx c1 = v[0], c2 = v[1], c3 = v[2], c4 = v[3];
    const cplx c1_2 = c1 * c1;
    ClassMember m{ClassTag::starlike_e, std::vector<cplx>(6), FromCoeffs{}};
    m.a[1] = 1.0;
    m.a[2] = c1 / 2.0;
    m.a[3] = c1_2 / 16.0 + c2 / 4.0;
    m.a[4] = c1 * c2 / 24.0 - c1_2 * c1 / 288.0 + c3 / 6.0;
    m.a[5] = c1_2 * c1_2 / 1152.0 - c2 * c1_2 / 96.0 + c1 * c3 / 48.0 + c4 / 8.0;
    return m;
}

ClassMember convex_coeffs(const CaratheodoryCoeffs &c)
{
    const auto v = first_four(c);
    const cplx c1 = v[0], c2 = v[1], c3 = v[2], c4 = v[3];
    const cplx c1_2 = c1 * c1;
    ClassMember m{ClassTag::convex_e, std::vector<cplx>(6), FromCoeffs{}};
    m.a[1] = 1.0;
    m.a[2] = c1 / 4.0;
    m.a[3] = c2 / 12.0 + c1_2 / 48.0;
    m.a[4] = c1 * c2 / 96.0 - c1_2 * c1 / 1152.0 + c3 / 24.0;
    m.a[5] = c1_2 * c1_2 / 5760.0 - c1_2 * c2 / 480.0 + c1 * c3 / 240.0 + c4 / 40.0;
    return m;
}

ClassMember coeffs_via_ode(const PowerSeries &w, ClassTag tag, Provenance provenance)
{
    if (std::abs(w[0]) > 1e-14)
        throw inner_not_vanishing();
    const int order = w.order();
    const PowerSeries e = exp_series(w);

    ClassMember m{tag, std::vector<cplx>(static_cast<std::size_t>(order) + 1), std::move(provenance)};
    m.a[1] = 1.0;
    if (tag == ClassTag::starlike_e) {
        // z f' = f e^w:  (n - 1) a_n = sum_{k=1}^{n-1} e_k a_{n-k}
        for (int n = 2; n <= order; ++n) {
            cplx acc{};
            for (int k = 1; k < n; ++k)
                acc += e[k] * m.a[n - k];
            m.a[n] = acc / static_cast<double>(n - 1);
        }
    } else {
        // h = f':  z h' = h (e^w - 1),  n b_n = sum_{k=1}^{n} e_k b_{n-k}
        std::vector<cplx> b(static_cast<std::size_t>(order));
        b[0] = 1.0;
        for (int n = 1; n < order; ++n) {
            cplx acc{};
            for (int k = 1; k <= n; ++k)
                acc += e[k] * b[n - k];
            b[n] = acc / static_cast<double>(n);
        }
        for (int n = 2; n <= order; ++n)
            m.a[n] = b[n - 1] / static_cast<double>(n);
    }
    return m;
}

ExtremalMember extremal_member(const ExtremalSpec &spec, int order)
{
    PowerSeries p = std::visit(
        [order](const auto &g) -> PowerSeries {
            using G = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<G, MonomialGenerator>) {
                if (g.power < 1)
                    throw std::invalid_argument("monomial generator power must be positive");
                const PowerSeries zn = PowerSeries::monomial(1.0, g.power, order);
                const PowerSeries one = PowerSeries::constant(1.0, order);
                return div(add(one, zn), sub(one, zn));
            } else {
                return two_parameter_p(g.t1, g.t2, order);
            }
        },
        spec.generator);
    const PowerSeries w = schwarz_from_p(p);
    ClassMember member = coeffs_via_ode(w, spec.class_tag, FromExtremal{spec.id});
    PowerSeries f = member.series();
    return {std::move(member), std::move(f), std::move(p)};
}

std::vector<ExtremalSpec> extremal_catalog(ClassTag tag)
{
    if (tag == ClassTag::starlike_e) {
        return {
            {"f1", tag, MonomialGenerator{1}},
            {"f2", tag, MonomialGenerator{2}},
            {"f3", tag, MonomialGenerator{3}},
            {"f4_star", tag, MonomialGenerator{4}},
            // |a2 a3 - a4| witness: tau1 = 2/sqrt(7), tau2 = -1.
            {"zalcman_star", tag, TwoParameterGenerator{2.0 / std::sqrt(7.0), -1.0}},
        };
    }
    return {
        {"f5", tag, MonomialGenerator{1}},
        {"f6", tag, MonomialGenerator{2}},
        {"f7", tag, MonomialGenerator{3}},
        {"f4_convex", tag, MonomialGenerator{4}},
    };
}

ExtremalSpec catalog_entry(ClassTag tag, std::string_view id)
{
    for (auto &spec : extremal_catalog(tag))
        if (spec.id == id)
            return spec;
    throw std::out_of_range(fmt::format("no catalog entry '{}' for class {}", id, to_string(tag)));
}

nlohmann::json catalog_json(ClassTag tag, int order)
{
    auto out = nlohmann::json::array();
    for (const auto &spec : extremal_catalog(tag)) {
        const auto em = extremal_member(spec, order);
        std::string pdesc = std::visit(
            [](const auto &g) -> std::string {
                using G = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<G, MonomialGenerator>)
                    return fmt::format("(1+z^{0})/(1-z^{0})", g.power);
                else
                    return fmt::format("(1+(t1 t2+t1)z+t2 z^2)/(1+(t1 t2-t1)z-t2 z^2), t1={:.17g}, t2={}", g.t1,
                                       fmt_c(g.t2));
            },
            spec.generator);
        auto coeffs = nlohmann::json::array();
        for (int n = 2; n <= em.member.max_index(); ++n)
            coeffs.push_back({em.member.coeff(n).real(), em.member.coeff(n).imag()});
        out.push_back({{"id", spec.id}, {"class", to_string(tag)}, {"p", pdesc}, {"a", coeffs}});
    }
    return out;
}

} // namespace sharpcoef
