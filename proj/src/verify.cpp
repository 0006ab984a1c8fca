#include "sharpcoef/verify.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <thread>

namespace sharpcoef
{

using nlohmann::json;

// ---------------------------------------------------------------------------
// Functionals and selectors

std::string FunctionalSpec::key() const
{
    switch (kind) {
    case Functional::gamma:
        return fmt::format("gamma{}", n);
    case Functional::series_gamma:
        return fmt::format("series_gamma{}", n);
    case Functional::t21:
        return "t21";
    case Functional::zalcman:
        return "zalcman";
    case Functional::fekete_szego:
        return fmt::format("fs[l={:.17g}{:+.17g}i,mu={:.17g}]", lambda.real(), lambda.imag(), mu);
    }
    return "unknown";
}

double FunctionalSpec::evaluate(const ClassMember &m) const
{
    switch (kind) {
    case Functional::gamma:
        return std::abs(log_coeffs(m)(n));
    case Functional::series_gamma:
        return std::abs(log_coeff_from_series(m, n));
    case Functional::t21:
        return toeplitz_t21(rotate_normalize(m));
    case Functional::zalcman:
        return zalcman_23(m);
    case Functional::fekete_szego:
        return fekete_szego(m, lambda, mu);
    }
    return 0.0;
}

std::vector<LambdaMu> default_fs_grid()
{
    const std::array<cplx, 7> lambdas{cplx{0.0}, cplx{0.5}, cplx{1.0}, cplx{1.5}, cplx{2.0}, cplx{1.0, 0.5},
                                      cplx{1.0, -0.5}};
    const std::array<double, 5> mus{0.1, 0.5, 1.0, 2.0, 4.0};
    std::vector<LambdaMu> out;
    for (const auto l : lambdas)
        for (const double m : mus)
            out.push_back({l, m});
    return out;
}

std::optional<std::vector<Selector>> parse_selector(std::string_view s)
{
    static const std::map<std::string, Selector, std::less<>> names{
        {"gamma1", Selector::gamma1},   {"gamma2", Selector::gamma2}, {"gamma3", Selector::gamma3},
        {"gamma4", Selector::gamma4},   {"t21", Selector::t21},       {"zalcman", Selector::zalcman},
        {"fekete-szego", Selector::fekete_szego}, {"fs", Selector::fekete_szego},
    };
    if (s == "all")
        return std::vector<Selector>{Selector::gamma1, Selector::gamma2, Selector::gamma3, Selector::gamma4,
                                     Selector::t21,    Selector::zalcman, Selector::fekete_szego};
    const auto it = names.find(s);
    if (it == names.end())
        return std::nullopt;
    return std::vector<Selector>{it->second};
}

namespace
{

std::string_view selector_name(Selector s)
{
    switch (s) {
    case Selector::gamma1:
        return "gamma1";
    case Selector::gamma2:
        return "gamma2";
    case Selector::gamma3:
        return "gamma3";
    case Selector::gamma4:
        return "gamma4";
    case Selector::t21:
        return "t21";
    case Selector::zalcman:
        return "zalcman";
    case Selector::fekete_szego:
        return "fekete-szego";
    }
    return "?";
}

std::string_view format_name(OutputFormat f)
{
    switch (f) {
    case OutputFormat::json:
        return "json";
    case OutputFormat::csv:
        return "csv";
    case OutputFormat::markdown:
        return "md";
    }
    return "?";
}

} // namespace

void RunConfig::validate() const
{
    if (functionals.empty() && conjecture.empty())
        throw config_error("no functional selected");
    if (sample_count < 1)
        throw config_error("sample count must be at least 1");
    if (schwarz_degree < 0 || schwarz_degree > 4)
        throw config_error("Schwarz degree must lie in 0..4");
    if (tau_grid_density < 0)
        throw config_error("tau grid density must be non-negative");
    if (refine_iterations < 0)
        throw config_error("refine iterations must be non-negative");
    if (order < 5 || order > max_order)
        throw config_error(fmt::format("series order must lie in 5..{}", max_order));
    for (const auto &p : fs_points)
        if (!(p.mu > 0.0) || !std::isfinite(p.mu) || !std::isfinite(p.lambda.real()) ||
            !std::isfinite(p.lambda.imag()))
            throw config_error("Fekete-Szego parameters need finite lambda and mu > 0");
    for (const int n : conjecture) {
        if (class_tag != ClassTag::starlike_e)
            throw config_error("the log-coefficient conjecture probe runs on the starlike class only");
        if (n < 5 || n > 7)
            throw config_error("conjecture probe index must lie in 5..7");
        if (order < n + 1)
            throw truncation_too_low(fmt::format("gamma_{} needs series order >= {}, have {}", n, n + 1, order));
    }
}

json RunConfig::to_json() const
{
    json sel = json::array();
    for (const auto s : functionals)
        sel.push_back(selector_name(s));
    json fs = json::array();
    for (const auto &p : fs_points.empty() ? default_fs_grid() : fs_points)
        fs.push_back({{"lambda", {p.lambda.real(), p.lambda.imag()}}, {"mu", p.mu}});
    return {
        {"class", std::string(to_string(class_tag))},
        {"functionals", sel},
        {"samples", sample_count},
        {"degree", schwarz_degree},
        {"tau_grid", tau_grid_density},
        {"seed", seed},
        {"refine", refine_iterations},
        {"order", order},
        {"fs_points", fs},
        {"conjecture", conjecture},
        {"format", std::string(format_name(output_format))},
    };
}

// ---------------------------------------------------------------------------
// Sampling

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept
{
    std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double uniform01(std::mt19937_64 &rng) noexcept { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

SchwarzSpec draw_schwarz(std::mt19937_64 &rng, int max_degree)
{
    SchwarzSpec s;
    const int degree = std::min(max_degree, static_cast<int>(uniform01(rng) * (max_degree + 1)));
    s.phase = 2.0 * std::numbers::pi * uniform01(rng);
    for (int k = 0; k < degree; ++k) {
        const double r = (1.0 - 1e-6) * std::sqrt(uniform01(rng));
        const double t = 2.0 * std::numbers::pi * uniform01(rng);
        s.zeros.push_back(std::polar(r, t));
    }
    return s;
}

MemberStream::MemberStream(const RunConfig &cfg)
    : tag_(cfg.class_tag), order_(cfg.order), degree_(cfg.schwarz_degree), grid_(cfg.tau_grid_density),
      seed_(cfg.seed), samples_(cfg.sample_count)
{
    for (const auto &spec : extremal_catalog(tag_))
        catalog_.push_back(extremal_member(spec, order_).member);
}

std::int64_t MemberStream::tau_grid_size() const noexcept
{
    if (grid_ == 0)
        return 0;
    const std::int64_t g = grid_;
    return (g + 1) * (1 + 2 * g * g) * (1 + 2 * g);
}

std::int64_t MemberStream::size() const noexcept { return catalog_size() + tau_grid_size() + samples_; }

ClassMember MemberStream::tau_member(std::int64_t k) const
{
    const std::int64_t g = grid_;
    const std::int64_t n3 = 1 + 2 * g;
    const std::int64_t n2 = 1 + 2 * g * g;
    const std::int64_t i3 = k % n3;
    const std::int64_t i2 = (k / n3) % n2;
    const std::int64_t i1 = k / (n3 * n2);
    const double step = std::numbers::pi / static_cast<double>(g);

    const double t1 = static_cast<double>(i1) / static_cast<double>(g);
    cplx t2{};
    if (i2 > 0) {
        const std::int64_t j = i2 - 1;
        t2 = std::polar(static_cast<double>(j / (2 * g) + 1) / static_cast<double>(g),
                        step * static_cast<double>(j % (2 * g)));
    }
    const cplx t3 = i3 == 0 ? cplx{} : std::polar(1.0, step * static_cast<double>(i3 - 1));
    const cplx tail{1.0};

    const std::array<cplx, 4> taus{cplx{t1}, t2, t3, tail};
    return coeffs_via_ode(schur_chain_series(taus, order_), tag_, FromTau{{cplx{t1}, t2, t3}, tail});
}

void MemberStream::visit(std::int64_t begin, std::int64_t end,
                         const std::function<void(std::int64_t, const ClassMember &)> &fn) const
{
    end = std::min(end, size());
    std::int64_t i = std::max<std::int64_t>(begin, 0);
    for (; i < end && i < catalog_size(); ++i)
        fn(i, catalog_[static_cast<std::size_t>(i)]);
    const std::int64_t grid_end = catalog_size() + tau_grid_size();
    for (; i < end && i < grid_end; ++i)
        fn(i, tau_member(i - catalog_size()));
    if (i >= end)
        return;

    std::int64_t j = i - grid_end;
    const std::int64_t j_end = end - grid_end;
    while (j < j_end) {
        const std::int64_t chunk = j / chunk_size;
        std::mt19937_64 rng(derive_seed(seed_, static_cast<std::uint64_t>(chunk)));
        const std::int64_t chunk_begin = chunk * chunk_size;
        const std::int64_t stop = std::min(j_end, chunk_begin + chunk_size);
        for (std::int64_t k = chunk_begin; k < stop; ++k) {
            auto spec = draw_schwarz(rng, degree_);
            if (k < j)
                continue;
            const auto w = schwarz_series(spec, order_);
            fn(grid_end + k, coeffs_via_ode(w, tag_, FromSchwarz{std::move(spec)}));
        }
        j = stop;
    }
}

std::vector<ClassMember> sample_members(const RunConfig &cfg)
{
    cfg.validate();
    const MemberStream stream(cfg);
    std::vector<ClassMember> out;
    out.reserve(static_cast<std::size_t>(stream.size()));
    stream.visit(0, stream.size(), [&](std::int64_t, const ClassMember &m) { out.push_back(m); });
    return out;
}

// ---------------------------------------------------------------------------
// Extremization

namespace
{

struct Side
{
    double value;
    std::int64_t index = -1;
    std::string provenance;
    std::optional<SchwarzSpec> schwarz; // best Blaschke draw on this side
    double schwarz_value;
};

struct Accumulator
{
    Side lo{std::numeric_limits<double>::infinity(), -1, {}, std::nullopt, std::numeric_limits<double>::infinity()};
    Side hi{-std::numeric_limits<double>::infinity(), -1, {}, std::nullopt,
            -std::numeric_limits<double>::infinity()};

    void add(std::int64_t i, const ClassMember &m, double v)
    {
        const auto *sch = std::get_if<FromSchwarz>(&m.provenance);
        if (v < lo.value) {
            lo.value = v;
            lo.index = i;
            lo.provenance = describe(m.provenance);
        }
        if (v > hi.value) {
            hi.value = v;
            hi.index = i;
            hi.provenance = describe(m.provenance);
        }
        if (sch != nullptr) {
            if (v < lo.schwarz_value) {
                lo.schwarz_value = v;
                lo.schwarz = sch->spec;
            }
            if (v > hi.schwarz_value) {
                hi.schwarz_value = v;
                hi.schwarz = sch->spec;
            }
        }
    }

    // `later` covers indices after this one: it wins only when strictly better.
    void merge(const Accumulator &later)
    {
        if (later.lo.value < lo.value) {
            lo.value = later.lo.value;
            lo.index = later.lo.index;
            lo.provenance = later.lo.provenance;
        }
        if (later.hi.value > hi.value) {
            hi.value = later.hi.value;
            hi.index = later.hi.index;
            hi.provenance = later.hi.provenance;
        }
        if (later.lo.schwarz_value < lo.schwarz_value) {
            lo.schwarz_value = later.lo.schwarz_value;
            lo.schwarz = later.lo.schwarz;
        }
        if (later.hi.schwarz_value > hi.schwarz_value) {
            hi.schwarz_value = later.hi.schwarz_value;
            hi.schwarz = later.hi.schwarz;
        }
    }
};

template <class Fn> void parallel_for(std::size_t count, unsigned threads, Fn &&fn)
{
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += threads)
                fn(i);
        });
    for (auto &th : pool)
        th.join();
}

std::vector<double> spec_coords(const SchwarzSpec &s)
{
    std::vector<double> x{s.phase};
    for (const auto z : s.zeros) {
        x.push_back(z.real());
        x.push_back(z.imag());
    }
    return x;
}

SchwarzSpec coords_spec(const std::vector<double> &x)
{
    SchwarzSpec s;
    s.phase = x[0];
    for (std::size_t k = 1; k + 1 < x.size(); k += 2) {
        cplx z{x[k], x[k + 1]};
        if (std::abs(z) > zero_modulus_limit)
            z *= zero_modulus_limit / std::abs(z);
        s.zeros.push_back(z);
    }
    return s;
}

// Coordinate search with step halving; sign = +1 maximizes, -1 minimizes.
std::pair<double, SchwarzSpec> refine(const RunConfig &cfg, const FunctionalSpec &fn, SchwarzSpec start,
                                      double start_value, double sign)
{
    auto eval = [&](const SchwarzSpec &s) {
        return fn.evaluate(coeffs_via_ode(schwarz_series(s, cfg.order), cfg.class_tag, FromSchwarz{s}));
    };
    auto x = spec_coords(start);
    double best = start_value;
    double step = 1e-4;
    for (int it = 0; it < cfg.refine_iterations && step > 1e-15; ++it) {
        bool improved = false;
        for (std::size_t k = 0; k < x.size(); ++k) {
            for (const double dir : {1.0, -1.0}) {
                auto y = x;
                y[k] += dir * step;
                const auto spec = coords_spec(y);
                const double v = eval(spec);
                if (sign * v > sign * best) {
                    best = v;
                    x = spec_coords(spec);
                    improved = true;
                    break;
                }
            }
        }
        if (!improved)
            step *= 0.5;
    }
    return {best, coords_spec(x)};
}

} // namespace

std::vector<Extrema> empirical_extrema(const RunConfig &cfg, const std::vector<FunctionalSpec> &functionals)
{
    cfg.validate();
    const MemberStream stream(cfg);
    const std::int64_t total = stream.size();
    const std::int64_t block = MemberStream::chunk_size;
    const auto blocks = static_cast<std::size_t>((total + block - 1) / block);

    std::vector<std::vector<Accumulator>> partial(blocks, std::vector<Accumulator>(functionals.size()));
    parallel_for(blocks, cfg.threads, [&](std::size_t b) {
        auto &acc = partial[b];
        const auto begin = static_cast<std::int64_t>(b) * block;
        stream.visit(begin, begin + block, [&](std::int64_t i, const ClassMember &m) {
            for (std::size_t f = 0; f < functionals.size(); ++f)
                acc[f].add(i, m, functionals[f].evaluate(m));
        });
    });
    std::vector<Accumulator> acc(functionals.size());
    for (const auto &p : partial)
        for (std::size_t f = 0; f < functionals.size(); ++f)
            acc[f].merge(p[f]);

    std::vector<Extrema> out(functionals.size());
    parallel_for(functionals.size(), cfg.threads, [&](std::size_t f) {
        auto &a = acc[f];
        if (cfg.refine_iterations > 0) {
            if (a.hi.schwarz) {
                auto [v, s] = refine(cfg, functionals[f], *a.hi.schwarz, a.hi.schwarz_value, 1.0);
                if (v > a.hi.value) {
                    a.hi.value = v;
                    a.hi.index = -1;
                    a.hi.provenance = "refined " + describe(FromSchwarz{s});
                }
            }
            if (a.lo.schwarz) {
                auto [v, s] = refine(cfg, functionals[f], *a.lo.schwarz, a.lo.schwarz_value, -1.0);
                if (v < a.lo.value) {
                    a.lo.value = v;
                    a.lo.index = -1;
                    a.lo.provenance = "refined " + describe(FromSchwarz{s});
                }
            }
        }
        out[f] = Extrema{a.lo.value, a.hi.value, a.lo.provenance, a.hi.provenance, a.lo.index, a.hi.index};
    });
    return out;
}

Extrema empirical_extrema(const RunConfig &cfg, const FunctionalSpec &functional)
{
    return empirical_extrema(cfg, std::vector<FunctionalSpec>{functional}).front();
}

// ---------------------------------------------------------------------------
// Reports

std::string_view to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::consistent:
        return "CONSISTENT";
    case Verdict::sharpness_attained:
        return "SHARPNESS_ATTAINED";
    case Verdict::discrepancy_flagged:
        return "DISCREPANCY_FLAGGED";
    }
    return "?";
}

Verdict judge(const BoundReport &r)
{
    if (r.claimed_upper && r.empirical.max > *r.claimed_upper + bound_tolerance)
        return Verdict::discrepancy_flagged;
    if (r.claimed_lower && r.empirical.min < *r.claimed_lower - bound_tolerance)
        return Verdict::discrepancy_flagged;
    bool any_witness = false;
    auto attained = [&](const std::optional<double> &claim, const std::optional<WitnessValue> &w) {
        if (!claim)
            return true;
        if (!w)
            return false;
        any_witness = true;
        return std::abs(w->value - *claim) <= sharpness_tolerance;
    };
    const bool lo = attained(r.claimed_lower, r.witness_lower);
    const bool hi = attained(r.claimed_upper, r.witness_upper);
    if (!any_witness)
        return Verdict::consistent;
    return lo && hi ? Verdict::sharpness_attained : Verdict::discrepancy_flagged;
}

namespace
{

struct Plan
{
    TheoremId id;
    TheoremParams params;
    FunctionalSpec functional;
};

std::vector<Plan> make_plans(const RunConfig &cfg)
{
    std::vector<Plan> plans;
    for (const auto s : cfg.functionals) {
        switch (s) {
        case Selector::gamma1:
        case Selector::gamma2:
        case Selector::gamma3:
        case Selector::gamma4: {
            const int n = static_cast<int>(s) - static_cast<int>(Selector::gamma1) + 1;
            plans.push_back({TheoremId::gamma, {n, {}, 0.0}, {Functional::gamma, n}});
            break;
        }
        case Selector::t21:
            plans.push_back({TheoremId::t21, {}, {Functional::t21}});
            break;
        case Selector::zalcman:
            plans.push_back({TheoremId::zalcman, {}, {Functional::zalcman}});
            break;
        case Selector::fekete_szego:
            for (const auto &p : cfg.fs_points.empty() ? default_fs_grid() : cfg.fs_points) {
                const FunctionalSpec fn{Functional::fekete_szego, 0, p.lambda, p.mu};
                plans.push_back({TheoremId::fs_upper, {0, p.lambda, p.mu}, fn});
                plans.push_back({TheoremId::fs_lower, {0, p.lambda, p.mu}, fn});
            }
            break;
        }
    }
    for (const int n : cfg.conjecture)
        plans.push_back({TheoremId::conjecture_gamma, {n, {}, 0.0}, {Functional::series_gamma, n}});
    return plans;
}

std::optional<WitnessValue> witness_value(const std::optional<ExtremalSpec> &spec, const FunctionalSpec &fn,
                                          int order)
{
    if (!spec)
        return std::nullopt;
    return WitnessValue{spec->id, fn.evaluate(extremal_member(*spec, order).member)};
}

BoundReport build_report(const RunConfig &cfg, const Plan &plan, Extrema ext)
{
    const auto bound = theorem_bound(plan.id, cfg.class_tag, plan.params);
    const auto wit = sharpness_witnesses(plan.id, cfg.class_tag, plan.params);

    BoundReport r;
    r.theorem = bound.name;
    r.class_tag = cfg.class_tag;
    r.branch = bound.branch;
    r.claimed_lower = bound.lower;
    r.claimed_upper = bound.upper;
    r.witness_lower = witness_value(wit.lower, plan.functional, cfg.order);
    r.witness_upper = witness_value(wit.upper, plan.functional, cfg.order);

    // Witnesses outside the fixed catalog join the candidate set.
    if (r.witness_lower && r.witness_lower->value < ext.min) {
        ext.min = r.witness_lower->value;
        ext.argmin = describe(FromExtremal{r.witness_lower->id});
        ext.min_index = -1;
    }
    if (r.witness_upper && r.witness_upper->value > ext.max) {
        ext.max = r.witness_upper->value;
        ext.argmax = describe(FromExtremal{r.witness_upper->id});
        ext.max_index = -1;
    }
    r.empirical = ext;
    if (r.claimed_lower)
        r.gap_lower = ext.min - *r.claimed_lower;
    if (r.claimed_upper)
        r.gap_upper = *r.claimed_upper - ext.max;

    r.verdict = judge(r);
    if (r.verdict == Verdict::discrepancy_flagged) {
        std::vector<std::string> notes;
        if (r.claimed_upper && ext.max > *r.claimed_upper + bound_tolerance)
            notes.push_back(fmt::format("empirical max {:.17g} exceeds claimed upper bound {:.17g} ({})", ext.max,
                                        *r.claimed_upper, ext.argmax));
        if (r.claimed_lower && ext.min < *r.claimed_lower - bound_tolerance)
            notes.push_back(fmt::format("empirical min {:.17g} falls below claimed lower bound {:.17g} ({})",
                                        ext.min, *r.claimed_lower, ext.argmin));
        auto unattained = [&](const std::optional<double> &claim, const std::optional<WitnessValue> &w,
                              std::string_view side) {
            if (claim && w && std::abs(w->value - *claim) > sharpness_tolerance)
                notes.push_back(fmt::format("claimed sharp {} bound {:.17g} but witness {} gives {:.17g}", side,
                                            *claim, w->id, w->value));
        };
        unattained(r.claimed_lower, r.witness_lower, "lower");
        unattained(r.claimed_upper, r.witness_upper, "upper");
        for (const auto &n : notes)
            r.note += (r.note.empty() ? "" : "; ") + n;
    }
    return r;
}

json opt_number(const std::optional<double> &v) { return v ? json(*v) : json(nullptr); }

json report_to_json(const BoundReport &r)
{
    auto wit = [](const std::optional<WitnessValue> &w) {
        return w ? json{{"id", w->id}, {"value", w->value}} : json(nullptr);
    };
    return {
        {"theorem", r.theorem},
        {"class", std::string(to_string(r.class_tag))},
        {"branch", r.branch},
        {"claimed", {{"lower", opt_number(r.claimed_lower)}, {"upper", opt_number(r.claimed_upper)}}},
        {"empirical_min", r.empirical.min},
        {"empirical_max", r.empirical.max},
        {"attained_by", {{"min", r.empirical.argmin}, {"max", r.empirical.argmax}}},
        {"witness", {{"lower", wit(r.witness_lower)}, {"upper", wit(r.witness_upper)}}},
        {"verdict", std::string(to_string(r.verdict))},
        {"gap", {{"lower", opt_number(r.gap_lower)}, {"upper", opt_number(r.gap_upper)}}},
        {"tolerances", {{"bound", bound_tolerance}, {"sharpness", sharpness_tolerance}}},
        {"note", r.note},
    };
}

json check(std::string name, double printed, double computed, double tol)
{
    const bool ok = std::abs(printed - computed) <= tol;
    return {{"name", std::move(name)},
            {"printed", printed},
            {"computed", computed},
            {"tolerance", tol},
            {"status", ok ? "ok" : "flagged"}};
}

double surface_extremum(Surface s, bool maximize)
{
    double best = maximize ? -std::numeric_limits<double>::infinity() : std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 4000; ++i) {
        const double x = 4.0 * i / 4000.0;
        for (int j = 0; j <= 1000; ++j) {
            const double v = proof_surface(s, x, j / 1000.0);
            best = maximize ? std::max(best, v) : std::min(best, v);
        }
    }
    return best;
}

json fs_printed_discrepancies(const RunConfig &cfg)
{
    json out = json::array();
    if (std::find(cfg.functionals.begin(), cfg.functionals.end(), Selector::fekete_szego) == cfg.functionals.end())
        return out;
    for (const auto &p : cfg.fs_points.empty() ? default_fs_grid() : cfg.fs_points) {
        for (const bool lower : {false, true}) {
            const auto id = lower ? TheoremId::fs_lower : TheoremId::fs_upper;
            const auto bound = theorem_bound(id, cfg.class_tag, {0, p.lambda, p.mu});
            const double value = lower ? *bound.lower : *bound.upper;
            const auto printed = fs_bound_printed(cfg.class_tag, lower, p.lambda, p.mu);
            const bool ok = printed.size() == 1 && std::abs(printed.front().value - value) <= bound_tolerance;
            if (ok)
                continue;
            json branches = json::array();
            for (const auto &b : printed)
                branches.push_back({{"condition", b.condition}, {"value", b.value}});
            out.push_back({{"source", "printed_branch"},
                           {"theorem", bound.name},
                           {"computed", value},
                           {"computed_branch", bound.branch},
                           {"printed_branches", branches},
                           {"description", printed.empty() ? "no printed condition holds"
                                           : printed.size() > 1
                                               ? "several printed conditions hold"
                                               : "printed branch value differs from the derived bound"}});
        }
    }
    return out;
}

} // namespace

json proof_checks()
{
    json out = json::array();
    out.push_back(check("surface F max on [0,4]x[0,1]", 240.0, surface_extremum(Surface::F, true), 1e-6));
    out.push_back(check("surface G min on [0,4]x[0,1]", -64.0, surface_extremum(Surface::G, false), 1e-6));
    out.push_back(check("surface Phi max on [0,4]x[0,1]", 2160.0, surface_extremum(Surface::Phi, true), 1e-6));
    out.push_back(check("surface Psi min on [0,4]x[0,1]", -256.0, surface_extremum(Surface::Psi, false), 1e-6));
    out.push_back(check("surface G(4,y)", 260.0, proof_surface(Surface::G, 4.0, 0.5), 1e-9));

    out.push_back(check("c4 premise value, star_e gamma4", 45.0 / 2048.0,
                        lemma_c4_premise_value(0.25, 1.0 / 12.0, -1.0 / 192.0, 0.25), 1e-12));
    out.push_back(check("c4 premise value, convex_e gamma4", -45.0 / 2048.0,
                        lemma_c4_premise_value(0.25, 1.0 / 12.0, -1.0 / 192.0, 0.25), 1e-12));
    out.push_back(check("c3 premises hold, gamma3 (B=1/4, D=1/24)", 1.0,
                        lemma_c3_premises(0.25, 1.0 / 24.0) ? 1.0 : 0.0, 0.0));

    const auto sup = [](Univariate u) { return proof_univariate_sup(u).value; };
    out.push_back(check("psi1 max", 16.0 / std::sqrt(7.0), sup(Univariate::psi1), 1e-9));
    out.push_back(check("psi2 sup", 12.0, sup(Univariate::psi2), 1e-9));
    out.push_back(check("psi2(2/3)", 320.0 / 27.0, proof_univariate(Univariate::psi2, 2.0 / 3.0), 1e-9));
    out.push_back(check("psi3 argmax", std::sqrt(10.0 / 29.0), proof_univariate_sup(Univariate::psi3).argument,
                        1e-9));
    out.push_back(check("zalcman convex_e bound (1/12) psi3 at argmax vs stated 5/36 sqrt(10/29)",
                        sup(Univariate::psi3) / 12.0, 5.0 / 36.0 * std::sqrt(10.0 / 29.0), 1e-9));
    out.push_back(check("psi4 sup", 192.0, sup(Univariate::psi4), 1e-9));
    out.push_back(check("psi4(4/7)", 64288.0 / 343.0, proof_univariate(Univariate::psi4, 4.0 / 7.0), 1e-9));

    // The convex T21 display with 32 c1^2 Re c2, evaluated at c = (2, 2), against the
    // coefficient route on the same c.
    const CaratheodoryCoeffs c({2.0, 2.0, 2.0, 2.0});
    const double printed_t21 = (-16.0 + 576.0 * 4.0 + 32.0 * 4.0 * 2.0 - 64.0 * 4.0) / 36864.0;
    out.push_back(check("convex_e T21 polynomial at c1=c2=2", printed_t21, toeplitz_t21(convex_coeffs(c)), 1e-12));
    return out;
}

bool RunResult::flagged() const
{
    return std::any_of(reports.begin(), reports.end(),
                       [](const BoundReport &r) { return r.verdict == Verdict::discrepancy_flagged; });
}

BoundReport conjecture_probe(const RunConfig &cfg, int n)
{
    auto c = cfg;
    c.functionals.clear();
    c.conjecture = {n};
    c.validate();
    const Plan plan{TheoremId::conjecture_gamma, {n, {}, 0.0}, {Functional::series_gamma, n}};
    return build_report(c, plan, empirical_extrema(c, plan.functional));
}

RunResult run_report(const RunConfig &cfg)
{
    cfg.validate();
    const auto plans = make_plans(cfg);

    std::vector<FunctionalSpec> fns;
    std::vector<std::size_t> slot;
    std::map<std::string, std::size_t> seen;
    for (const auto &p : plans) {
        const auto [it, fresh] = seen.emplace(p.functional.key(), fns.size());
        if (fresh)
            fns.push_back(p.functional);
        slot.push_back(it->second);
    }
    const auto ext = empirical_extrema(cfg, fns);

    RunResult res;
    for (std::size_t k = 0; k < plans.size(); ++k)
        res.reports.push_back(build_report(cfg, plans[k], ext[slot[k]]));

    res.proof_checks = proof_checks();
    res.discrepancies = json::array();
    for (const auto &r : res.reports)
        if (r.verdict == Verdict::discrepancy_flagged)
            res.discrepancies.push_back({{"source", "report"}, {"theorem", r.theorem}, {"description", r.note}});
    for (const auto &pc : res.proof_checks)
        if (pc["status"] == "flagged")
            res.discrepancies.push_back({{"source", "proof_check"},
                                         {"name", pc["name"]},
                                         {"printed", pc["printed"]},
                                         {"computed", pc["computed"]}});
    for (auto &d : fs_printed_discrepancies(cfg))
        res.discrepancies.push_back(std::move(d));
    return res;
}

// ---------------------------------------------------------------------------
// Writers

json report_json(const RunConfig &cfg, const RunResult &result)
{
    json doc = json::object();
    if (cfg.timestamp) {
        const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm tm{};
        gmtime_r(&now, &tm);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        doc["timestamp"] = buf;
    }
    doc["config"] = cfg.to_json();
    json reports = json::array();
    for (const auto &r : result.reports)
        reports.push_back(report_to_json(r));
    doc["reports"] = reports;
    doc["discrepancies"] = result.discrepancies;
    doc["proof_checks"] = result.proof_checks;
    return doc;
}

namespace
{

std::string number(double v)
{
    if (!std::isfinite(v))
        return "null";
    auto s = fmt::format("{:.17g}", v);
    if (s.find_first_of(".eEn") == std::string::npos)
        s += ".0";
    return s;
}

// Insertion order is not preserved by nlohmann::json, so keys print sorted; this
// keeps output independent of construction order.
void emit(const json &j, std::string &out, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
    case json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first)
                out += ",\n";
            first = false;
            out += inner + json(it.key()).dump() + ": ";
            emit(it.value(), out, indent + 1);
        }
        out += "\n" + pad + "}";
        return;
    }
    case json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        const bool flat = std::all_of(j.begin(), j.end(), [](const json &e) { return e.is_primitive(); });
        if (flat) {
            out += "[";
            for (std::size_t k = 0; k < j.size(); ++k) {
                if (k > 0)
                    out += ", ";
                emit(j[k], out, indent + 1);
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t k = 0; k < j.size(); ++k) {
            if (k > 0)
                out += ",\n";
            out += inner;
            emit(j[k], out, indent + 1);
        }
        out += "\n" + pad + "]";
        return;
    }
    case json::value_t::number_float:
        out += number(j.get<double>());
        return;
    default:
        out += j.dump();
        return;
    }
}

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (const char ch : s) {
        if (ch == '"')
            q += '"';
        q += ch;
    }
    return q + "\"";
}

std::string opt_text(const std::optional<double> &v) { return v ? number(*v) : std::string(); }

} // namespace

std::string render_json(const json &doc)
{
    std::string out;
    emit(doc, out, 0);
    out += "\n";
    return out;
}

std::string render_csv(const RunResult &result)
{
    static const std::array<const char *, 14> header{
        "theorem",         "class",       "branch",         "claimed_lower",  "claimed_upper",
        "empirical_min",   "empirical_max", "attained_by_min", "attained_by_max", "verdict",
        "gap_lower",       "gap_upper",   "tolerance_bound", "note"};
    std::string out;
    for (std::size_t k = 0; k < header.size(); ++k)
        out += (k ? "," : "") + std::string(header[k]);
    out += "\r\n";
    for (const auto &r : result.reports) {
        const std::array<std::string, 14> row{r.theorem,
                                              std::string(to_string(r.class_tag)),
                                              r.branch,
                                              opt_text(r.claimed_lower),
                                              opt_text(r.claimed_upper),
                                              number(r.empirical.min),
                                              number(r.empirical.max),
                                              r.empirical.argmin,
                                              r.empirical.argmax,
                                              std::string(to_string(r.verdict)),
                                              opt_text(r.gap_lower),
                                              opt_text(r.gap_upper),
                                              number(bound_tolerance),
                                              r.note};
        for (std::size_t k = 0; k < row.size(); ++k)
            out += (k ? "," : "") + csv_field(row[k]);
        out += "\r\n";
    }
    return out;
}

std::string render_markdown(const RunConfig &cfg, const RunResult &result)
{
    auto cell = [](std::string s) {
        std::string o;
        for (const char ch : s)
            o += ch == '|' ? std::string("\\|") : std::string(1, ch);
        return o;
    };
    std::string out = fmt::format("# Bound verification: {}\n\nsamples {}, degree {}, seed {}, refine {}\n\n",
                                  to_string(cfg.class_tag), cfg.sample_count, cfg.schwarz_degree, cfg.seed,
                                  cfg.refine_iterations);
    out += "| theorem | branch | claimed lower | claimed upper | empirical min | empirical max | verdict |\n";
    out += "|---|---|---|---|---|---|---|\n";
    for (const auto &r : result.reports)
        out += fmt::format("| {} | {} | {} | {} | {} | {} | {} |\n", cell(r.theorem), cell(r.branch),
                           opt_text(r.claimed_lower), opt_text(r.claimed_upper), number(r.empirical.min),
                           number(r.empirical.max), to_string(r.verdict));
    if (!result.discrepancies.empty()) {
        out += "\n## Discrepancies\n\n";
        for (const auto &d : result.discrepancies) {
            const std::string what =
                d.contains("theorem") ? d["theorem"].get<std::string>() : d["name"].get<std::string>();
            std::string detail;
            if (d.contains("description"))
                detail = d["description"].get<std::string>();
            else
                detail = fmt::format("printed {}, computed {}", number(d["printed"].get<double>()),
                                     number(d["computed"].get<double>()));
            out += fmt::format("- {}: {}\n", what, detail);
        }
    }
    return out;
}

std::string render(const RunConfig &cfg, const RunResult &result)
{
    switch (cfg.output_format) {
    case OutputFormat::json:
        return render_json(report_json(cfg, result));
    case OutputFormat::csv:
        return render_csv(result);
    case OutputFormat::markdown:
        return render_markdown(cfg, result);
    }
    return {};
}

} // namespace sharpcoef
