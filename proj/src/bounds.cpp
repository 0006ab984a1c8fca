#include "sharpcoef/bounds.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace sharpcoef
{

// ---------------------------------------------------------------------------
// Y(A, B, C)

int top_level_case(YBranch b) noexcept
{
    switch (b) {
    case YBranch::ac_nonneg_sum:
        return 0;
    case YBranch::ac_nonneg_interior:
        return 1;
    case YBranch::ac_neg_interior_minus:
        return 2;
    case YBranch::ac_neg_interior_plus:
        return 3;
    default:
        return 4;
    }
}

std::string to_string(YBranch b)
{
    switch (b) {
    case YBranch::ac_nonneg_sum:
        return "AC>=0, |B|>=2(1-|C|)";
    case YBranch::ac_nonneg_interior:
        return "AC>=0, |B|<2(1-|C|)";
    case YBranch::ac_neg_interior_minus:
        return "AC<0, -4AC(C^-2-1)<=B^2, |B|<2(1-|C|)";
    case YBranch::ac_neg_interior_plus:
        return "AC<0, B^2<min(4(1+|C|)^2, -4AC(C^-2-1))";
    case YBranch::r_sum:
        return "AC<0, R: |C|(|B|+4|A|)<=|AB|";
    case YBranch::r_alt:
        return "AC<0, R: |AB|<=|C|(|B|-4|A|)";
    case YBranch::r_sqrt:
        return "AC<0, R: otherwise";
    }
    return "?";
}

YValue y_closed_form(const YArgs &a)
{
    const double A = a.A, B = a.B, C = a.C;
    const double aA = std::abs(A), aB = std::abs(B), aC = std::abs(C);
    const double B2 = B * B;

    if (A * C >= 0.0) {
        if (aB >= 2.0 * (1.0 - aC))
            return {aA + aB + aC, YBranch::ac_nonneg_sum};
        return {1.0 + aA + B2 / (4.0 * (1.0 - aC)), YBranch::ac_nonneg_interior};
    }

    const double q = -4.0 * A * C * (1.0 / (C * C) - 1.0);
    if (q <= B2 && aB < 2.0 * (1.0 - aC))
        return {1.0 - aA + B2 / (4.0 * (1.0 - aC)), YBranch::ac_neg_interior_minus};
    if (B2 < std::min(4.0 * (1.0 + aC) * (1.0 + aC), q))
        return {1.0 + aA + B2 / (4.0 * (1.0 + aC)), YBranch::ac_neg_interior_plus};
    if (aC * (aB + 4.0 * aA) <= std::abs(A * B))
        return {aA + aB - aC, YBranch::r_sum};
    if (std::abs(A * B) <= aC * (aB - 4.0 * aA))
        return {-aA + aB + aC, YBranch::r_alt};
    return {(aC + aA) * std::sqrt(1.0 - B2 / (4.0 * A * C)), YBranch::r_sqrt};
}

namespace
{

double y_objective(const YArgs &a, double r, double theta)
{
    const cplx z = std::polar(r, theta);
    return std::abs(a.A + a.B * z + a.C * z * z) + 1.0 - r * r;
}

} // namespace

double y_bruteforce(const YArgs &a, int grid)
{
    if (grid < 100)
        throw std::invalid_argument("y_bruteforce needs grid >= 100");

    const int nr = grid + 1; // radii 0..1 inclusive
    const int nt = grid;     // angles on [0, 2pi)
    const double dr = 1.0 / grid;
    const double dt = 2.0 * std::numbers::pi / nt;

    std::vector<double> v(static_cast<std::size_t>(nr) * nt);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nt; ++j)
            v[static_cast<std::size_t>(i) * nt + j] = y_objective(a, i * dr, j * dt);
    auto at = [&](int i, int j) { return v[static_cast<std::size_t>(i) * nt + ((j % nt) + nt) % nt]; };

    // Local maxima of the grid (angles periodic, radii clamped).
    struct Cell
    {
        double value;
        int i, j;
    };
    std::vector<Cell> peaks;
    for (int i = 0; i < nr; ++i) {
        for (int j = 0; j < nt; ++j) {
            const double c = at(i, j);
            bool peak = true;
            for (int di = -1; di <= 1 && peak; ++di)
                for (int dj = -1; dj <= 1; ++dj) {
                    const int ii = i + di;
                    if ((di == 0 && dj == 0) || ii < 0 || ii >= nr)
                        continue;
                    if (at(ii, j + dj) > c) {
                        peak = false;
                        break;
                    }
                }
            if (peak)
                peaks.push_back({c, i, j});
        }
    }
    std::sort(peaks.begin(), peaks.end(), [](const Cell &x, const Cell &y) { return x.value > y.value; });
    if (peaks.size() > 8)
        peaks.resize(8);

    double best = peaks.empty() ? *std::max_element(v.begin(), v.end()) : peaks.front().value;
    for (const auto &p : peaks) {
        double r = p.i * dr, t = p.j * dt, val = p.value;
        double sr = dr, st = dt;
        while (sr > 1e-13 || st > 1e-13) {
            bool moved = false;
            const std::array<std::pair<double, double>, 8> moves{
                {{sr, 0}, {-sr, 0}, {0, st}, {0, -st}, {sr, st}, {sr, -st}, {-sr, st}, {-sr, -st}}};
            for (const auto &[mr, mt] : moves) {
                const double nr_ = std::clamp(r + mr, 0.0, 1.0);
                const double cand = y_objective(a, nr_, t + mt);
                if (cand > val) {
                    val = cand;
                    r = nr_;
                    t += mt;
                    moved = true;
                }
            }
            if (!moved) {
                sr *= 0.5;
                st *= 0.5;
            }
        }
        best = std::max(best, val);
    }
    return best;
}

// ---------------------------------------------------------------------------
// Auxiliary maxima

double fs_caratheodory_bound(double v)
{
    if (v < 0.0)
        return -4.0 * v + 2.0;
    if (v <= 1.0)
        return 2.0;
    return 4.0 * v - 2.0;
}

bool lemma_c3_premises(double B, double D) { return 0.0 <= B && B <= 1.0 && B * (2.0 * B - 1.0) <= D && D <= B; }

double lemma_c4_premise_value(double alpha, double beta, double gamma, double lambda)
{
    if (!(alpha > 0.0 && alpha < 1.0) || !(lambda > 0.0 && lambda < 1.0))
        throw bounds_domain_error("lemma on c4 needs alpha, lambda in (0, 1)");
    const double t1 = alpha * beta - 2.0 * gamma;
    const double t2 = alpha * (lambda + alpha) - beta;
    const double t3 = beta - 2.0 * lambda * alpha;
    const double lhs = 8.0 * lambda * (1.0 - lambda) * (t1 * t1 + t2 * t2) + alpha * (1.0 - alpha) * t3 * t3;
    const double rhs = 4.0 * alpha * alpha * (1.0 - alpha) * (1.0 - alpha) * lambda * (1.0 - lambda);
    return lhs - rhs;
}

double simthomas_phi(const SimThomasArgs &s, cplx c1, cplx c2)
{
    return std::abs(s.K * c1 * c1 + s.L * c2) - std::abs(s.J * c1);
}

UpperValue simthomas_upper(const SimThomasArgs &s)
{
    if (std::abs(2.0 * s.K + s.L) >= std::abs(s.L) + s.J)
        return {s.M() - 2.0 * s.J, UpperBranch::large_k};
    return {2.0 * std::abs(s.L), UpperBranch::otherwise};
}

LowerValue simthomas_lower(const SimThomasArgs &s)
{
    const double M = s.M();
    const double L2 = 2.0 * std::abs(s.L);
    if (s.J >= M + L2)
        return {2.0 * s.J - M, LowerBranch::j_dominant};
    if (s.J * s.J <= L2 * (M + L2))
        return {2.0 * s.J * std::sqrt(L2 / (M + L2)), LowerBranch::radical};
    return {L2 + s.J * s.J / (M + L2), LowerBranch::mixed};
}

// ---------------------------------------------------------------------------
// Closed-form bounds

std::string to_string(TheoremId id)
{
    switch (id) {
    case TheoremId::gamma:
        return "gamma";
    case TheoremId::t21:
        return "t21";
    case TheoremId::zalcman:
        return "zalcman";
    case TheoremId::fs_upper:
        return "fs_upper";
    case TheoremId::fs_lower:
        return "fs_lower";
    case TheoremId::conjecture_gamma:
        return "conjecture_gamma";
    }
    return "?";
}

FsReduction fs_reduction(ClassTag tag, cplx lambda, double mu)
{
    if (!(mu > 0.0))
        throw bounds_domain_error("Fekete-Szego weight mu must be positive");
    if (tag == ClassTag::starlike_e)
        return {{8.0 * mu, 1.0 - 4.0 * lambda, 4.0}, 16.0};
    return {{12.0 * mu, 1.0 - 3.0 * lambda, 4.0}, 48.0};
}

namespace
{

std::string fs_upper_label(ClassTag tag, UpperBranch b)
{
    if (tag == ClassTag::starlike_e)
        return b == UpperBranch::large_k ? "|3-4l|>=2+4mu" : "|3-4l|<2+4mu";
    return b == UpperBranch::large_k ? "|1-l|>=(2/3)(1+3mu)" : "|1-l|<(2/3)(1+3mu)";
}

std::string fs_lower_label(ClassTag tag, LowerBranch b)
{
    if (tag == ClassTag::starlike_e) {
        switch (b) {
        case LowerBranch::j_dominant:
            return "|3-4l|<=2mu-2";
        case LowerBranch::radical:
            return "|3-4l|>=2mu^2-2";
        case LowerBranch::mixed:
            return "2mu-2<|3-4l|<2mu^2-2";
        }
    }
    switch (b) {
    case LowerBranch::j_dominant:
        return "|1-l|<=(3mu-2)/3";
    case LowerBranch::radical:
        return "|1-l|>=(9mu^2-4)/6";
    case LowerBranch::mixed:
        return "(3mu-2)/3<|1-l|<(9mu^2-4)/6";
    }
    return "?";
}

std::string fs_params_tag(const TheoremParams &p)
{
    return fmt::format("l={:.17g}{:+.17g}i,mu={:.17g}", p.lambda.real(), p.lambda.imag(), p.mu);
}

} // namespace

PiecewiseBound theorem_bound(TheoremId id, ClassTag tag, const TheoremParams &params)
{
    const bool star = tag == ClassTag::starlike_e;
    const std::string cls(to_string(tag));
    switch (id) {
    case TheoremId::gamma: {
        const int n = params.n;
        const std::string name = fmt::format("gamma{}_{}", n, cls);
        if (star && n >= 1 && n <= 4)
            return {name, fmt::format("n={}", n), std::nullopt, 1.0 / (2.0 * n)};
        if (!star && n >= 1 && n <= 3)
            return {name, fmt::format("n={}", n), std::nullopt, 1.0 / (2.0 * n * (n + 1))};
        if (!star && n == 4)
            return {name, "n=4", std::nullopt, 1.0 / 8.0};
        throw unknown_theorem(fmt::format("no gamma_{} theorem for class {}", n, cls));
    }
    case TheoremId::conjecture_gamma:
        if (!star || params.n < 1)
            throw unknown_theorem("the log-coefficient conjecture concerns the starlike class, n >= 1");
        return {fmt::format("conjecture_gamma{}_{}", params.n, cls), fmt::format("n={}", params.n), std::nullopt,
                1.0 / (2.0 * params.n)};
    case TheoremId::t21:
        if (star)
            return {"t21_" + cls, "two-sided", -1.0 / 16.0, 15.0 / 64.0};
        return {"t21_" + cls, "two-sided", -1.0 / 144.0, 15.0 / 256.0};
    case TheoremId::zalcman:
        if (star)
            return {"zalcman_" + cls, "tau1=2/sqrt7", std::nullopt, 8.0 / (9.0 * std::sqrt(7.0))};
        return {"zalcman_" + cls, "tau1=0", std::nullopt, 1.0 / 12.0};
    case TheoremId::fs_upper: {
        const auto red = fs_reduction(tag, params.lambda, params.mu);
        const auto up = simthomas_upper(red.args);
        return {fmt::format("fs_upper_{}[{}]", cls, fs_params_tag(params)), fs_upper_label(tag, up.branch),
                std::nullopt, up.value / red.scale};
    }
    case TheoremId::fs_lower: {
        const auto red = fs_reduction(tag, params.lambda, params.mu);
        const auto lo = simthomas_lower(red.args);
        return {fmt::format("fs_lower_{}[{}]", cls, fs_params_tag(params)), fs_lower_label(tag, lo.branch),
                -lo.value / red.scale, std::nullopt};
    }
    }
    throw unknown_theorem("unknown theorem id");
}

Witnesses sharpness_witnesses(TheoremId id, ClassTag tag, const TheoremParams &params)
{
    const bool star = tag == ClassTag::starlike_e;
    auto entry = [tag](std::string_view name) { return catalog_entry(tag, name); };
    switch (id) {
    case TheoremId::gamma: {
        static const std::array<const char *, 4> star_ids{"f1", "f2", "f3", "f4_star"};
        static const std::array<const char *, 4> convex_ids{"f5", "f6", "f7", "f4_convex"};
        if (params.n < 1 || params.n > 4)
            throw unknown_theorem("gamma witnesses exist for n = 1..4");
        return {std::nullopt, entry((star ? star_ids : convex_ids)[static_cast<std::size_t>(params.n) - 1])};
    }
    case TheoremId::conjecture_gamma:
        return {std::nullopt, ExtremalSpec{fmt::format("f{}_monomial", params.n), tag, MonomialGenerator{params.n}}};
    case TheoremId::t21:
        return star ? Witnesses{entry("f2"), entry("f1")} : Witnesses{entry("f6"), entry("f5")};
    case TheoremId::zalcman:
        return {std::nullopt, entry(star ? "zalcman_star" : "f7")};
    case TheoremId::fs_upper: {
        const auto up = simthomas_upper(fs_reduction(tag, params.lambda, params.mu).args);
        if (up.branch == UpperBranch::large_k)
            return {std::nullopt, entry(star ? "f1" : "f5")};
        return {std::nullopt, entry(star ? "f2" : "f6")};
    }
    case TheoremId::fs_lower: {
        const auto red = fs_reduction(tag, params.lambda, params.mu);
        const auto &s = red.args;
        const auto lo = simthomas_lower(s);
        if (lo.branch == LowerBranch::j_dominant)
            return {entry(star ? "f1" : "f5"), std::nullopt};
        const double M = s.M();
        const double L2 = 2.0 * std::abs(s.L);
        const cplx t2 = M > 1e-15 ? -std::abs(s.L) * (4.0 * s.K + 2.0 * s.L) / (s.L * M) : cplx{1.0};
        if (lo.branch == LowerBranch::radical)
            return {ExtremalSpec{star ? "f7" : "f9", tag, TwoParameterGenerator{std::sqrt(L2 / (M + L2)), t2}},
                    std::nullopt};
        return {ExtremalSpec{star ? "f8" : "f10", tag, TwoParameterGenerator{s.J / (M + L2), t2}}, std::nullopt};
    }
    }
    throw unknown_theorem("unknown theorem id");
}

std::vector<PrintedBranch> fs_bound_printed(ClassTag tag, bool lower, cplx lambda, double mu)
{
    if (!(mu > 0.0))
        throw bounds_domain_error("Fekete-Szego weight mu must be positive");
    std::vector<PrintedBranch> out;
    if (tag == ClassTag::starlike_e) {
        const double x = std::abs(3.0 - 4.0 * lambda);
        if (!lower) {
            if (x >= 2.0 + 4.0 * mu)
                out.push_back({"|3-4l|>=2+4mu", (x - 4.0 * mu) / 4.0});
            if (x < 2.0 + 4.0 * mu)
                out.push_back({"|3-4l|<2+4mu", 0.5});
            return out;
        }
        const double lo = (mu + 1.0) / 2.0, hi = (mu * mu + 1.0) / 2.0;
        if (lo >= x)
            out.push_back({"(mu+1)/2>=|3-4l|", -(4.0 * mu - x) / 4.0});
        if (x >= hi)
            out.push_back({"|3-4l|>=(mu^2+1)/2", -mu * std::sqrt(2.0 / (x + 2.0))});
        if (lo < x && x < hi)
            out.push_back({"(mu+1)/2<|3-4l|<(mu^2+1)/2", -(x + 16.0 * mu * mu + 16.0) / (2.0 * (x + 2.0))});
        return out;
    }
    const double y = std::abs(1.0 - lambda);
    if (!lower) {
        if (y >= 2.0 / 3.0 * (2.0 + 3.0 * mu))
            out.push_back({"|1-l|>=(2/3)(2+3mu)", (y - 2.0 * mu) / 4.0});
        if (y < 2.0 / 3.0 * (2.0 + 3.0 * mu))
            out.push_back({"|1-l|<(2/3)(2+3mu)", 1.0 / 6.0});
        return out;
    }
    const double lo = (3.0 * mu - 2.0) / 3.0, hi = (9.0 * mu * mu - 4.0) / 6.0;
    if (lo >= y)
        out.push_back({"(3mu-2)/3>=|1-l|", -(2.0 * mu - y) / 4.0});
    if (hi <= y)
        out.push_back({"(9mu^2-4)/6<=|1-l|", -0.5 * mu * std::sqrt(2.0 / (3.0 * y + 2.0))});
    if (hi > y && y > lo)
        out.push_back({"(9mu^2-4)/6>|1-l|>(3mu-2)/3",
                       -(9.0 * mu * mu + 6.0 * y + 4.0) / (12.0 * (3.0 * y + 2.0))});
    return out;
}

// ---------------------------------------------------------------------------
// Proof-internal functions

double proof_surface(Surface s, double x, double y)
{
    if (!(x >= 0.0 && x <= 4.0 && y >= 0.0 && y <= 1.0))
        throw bounds_domain_error("proof surfaces live on [0, 4] x [0, 1]");
    const double u = 4.0 - x;
    switch (s) {
    case Surface::F:
        return -x * x + 64.0 * x + 4.0 * x * u * y - 4.0 * u * u * y * y;
    case Surface::G:
        return -x * x + 64.0 * x - 4.0 * x * u * y - 4.0 * u * u * y * y;
    case Surface::Phi:
        return -9.0 * x * x + 576.0 * x + 24.0 * x * u * y - 16.0 * u * u * y * y;
    case Surface::Psi:
        return -9.0 * x * x + 576.0 * x - 24.0 * x * u * y - 16.0 * u * u * y * y;
    }
    return 0.0;
}

namespace
{

// Cubic coefficients c0 + c1 t + c2 t^2 + c3 t^3.
std::array<double, 4> univariate_poly(Univariate u)
{
    switch (u) {
    case Univariate::psi1:
        return {0.0, 12.0, 0.0, -7.0};
    case Univariate::psi2:
        return {12.0, 0.0, -9.0, 13.0};
    case Univariate::psi3:
        return {0.0, 30.0, 0.0, -29.0};
    case Univariate::psi4:
        return {192.0, 0.0, -84.0, 124.0};
    }
    return {};
}

double eval_cubic(const std::array<double, 4> &c, double t) { return ((c[3] * t + c[2]) * t + c[1]) * t + c[0]; }

bool in_domain(const DomainInterval &d, double t)
{
    const bool lo_ok = d.lo_closed ? t >= d.lo : t > d.lo;
    const bool hi_ok = d.hi_closed ? t <= d.hi : t < d.hi;
    return lo_ok && hi_ok;
}

} // namespace

DomainInterval univariate_domain(Univariate u) noexcept
{
    switch (u) {
    case Univariate::psi1:
        return {2.0 / 3.0, 1.0, true, false};
    case Univariate::psi2:
        return {0.0, 2.0 / 3.0, false, false};
    case Univariate::psi3:
        return {4.0 / 7.0, 1.0, true, false};
    case Univariate::psi4:
        return {0.0, 4.0 / 7.0, false, false};
    }
    return {};
}

double proof_univariate(Univariate u, double t)
{
    const auto d = univariate_domain(u);
    if (!(t >= d.lo && t <= d.hi))
        throw bounds_domain_error("argument outside the closed domain of the proof function");
    return eval_cubic(univariate_poly(u), t);
}

UnivariateExtremum proof_univariate_sup(Univariate u)
{
    const auto c = univariate_poly(u);
    const auto d = univariate_domain(u);

    // Candidates: both endpoints of the closure and the roots of
    // c1 + 2 c2 t + 3 c3 t^2 inside the interval.
    std::vector<double> cand{d.lo, d.hi};
    const double qa = 3.0 * c[3], qb = 2.0 * c[2], qc = c[1];
    if (qa != 0.0) {
        const double disc = qb * qb - 4.0 * qa * qc;
        if (disc >= 0.0) {
            cand.push_back((-qb + std::sqrt(disc)) / (2.0 * qa));
            cand.push_back((-qb - std::sqrt(disc)) / (2.0 * qa));
        }
    }
    UnivariateExtremum best{d.lo, -std::numeric_limits<double>::infinity(), false};
    for (const double t : cand) {
        if (t < d.lo || t > d.hi)
            continue;
        const double v = eval_cubic(c, t);
        if (v > best.value)
            best = {t, v, in_domain(d, t)};
    }
    return best;
}

} // namespace sharpcoef
