#include "sharpcoef/verify.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace
{

sharpcoef::cplx parse_complex(const std::string &s)
{
    const auto comma = s.find(',');
    try {
        if (comma == std::string::npos)
            return {std::stod(s), 0.0};
        return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
    } catch (const std::exception &) {
        throw sharpcoef::config_error(fmt::format("cannot parse lambda '{}' (expected RE or RE,IM)", s));
    }
}

} // namespace

int main(int argc, char **argv)
{
    using namespace sharpcoef;

    CLI::App app{"Empirical verification of sharp coefficient bounds for the starlike and convex exponential classes"};
    std::string cls = "star_e";
    std::vector<std::string> selectors;
    std::string lambda;
    std::optional<double> mu;
    std::string format = "json";
    std::string out;
    std::vector<int> conjecture;
    bool allow_flags = false;
    bool no_timestamp = false;
    bool catalog = false;
    RunConfig cfg;
    cfg.threads = std::max(1U, std::thread::hardware_concurrency());

    app.add_option("--class", cls, "Function class")->check(CLI::IsMember({"star_e", "convex_e"}));
    app.add_option("--functional", selectors,
                   "gamma1..gamma4, t21, zalcman, fekete-szego or all (repeatable, comma separated)")
        ->delimiter(',');
    app.add_option("--samples", cfg.sample_count, "Random Schwarz draws");
    app.add_option("--degree", cfg.schwarz_degree, "Maximum Blaschke degree (0..4)");
    app.add_option("--tau-grid", cfg.tau_grid_density, "Tau grid density (0 disables the grid)");
    app.add_option("--seed", cfg.seed, "64-bit seed");
    app.add_option("--refine", cfg.refine_iterations, "Local refinement sweeps");
    app.add_option("--order", cfg.order, "Series truncation order");
    app.add_option("--lambda", lambda, "Fekete-Szego lambda as RE,IM (default grid when neither --lambda nor --mu)");
    app.add_option("--mu", mu, "Fekete-Szego mu > 0");
    app.add_option("--conjecture", conjecture, "Probe |gamma_n| <= 1/(2n) for n in 5..7")->delimiter(',');
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "md"}));
    app.add_option("--out", out, "Output path (stdout when omitted)");
    app.add_option("--threads", cfg.threads, "Worker threads (output does not depend on it)");
    app.add_flag("--allow-flags", allow_flags, "Exit 0 even when a discrepancy is flagged");
    app.add_flag("--no-timestamp", no_timestamp, "Omit the timestamp field");
    app.add_flag("--catalog", catalog, "Print the extremal catalog of the class as JSON and exit");

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.class_tag = *parse_class_tag(cls);
        if (catalog) {
            std::cout << render_json(catalog_json(cfg.class_tag, cfg.order));
            return 0;
        }
        for (const auto &s : selectors) {
            const auto parsed = parse_selector(s);
            if (!parsed)
                throw config_error(fmt::format("unknown functional '{}'", s));
            for (const auto sel : *parsed)
                if (std::find(cfg.functionals.begin(), cfg.functionals.end(), sel) == cfg.functionals.end())
                    cfg.functionals.push_back(sel);
        }
        if (!lambda.empty() || mu) {
            if (!mu)
                throw config_error("--lambda needs --mu");
            cfg.fs_points = {{lambda.empty() ? cplx{} : parse_complex(lambda), *mu}};
        }
        cfg.conjecture = conjecture;
        cfg.output_format = format == "csv" ? OutputFormat::csv
                            : format == "md" ? OutputFormat::markdown
                                             : OutputFormat::json;
        cfg.output_path = out;
        cfg.timestamp = !no_timestamp;
        cfg.validate();

        const auto result = run_report(cfg);
        const auto text = render(cfg, result);
        if (out.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(out, std::ios::binary);
            if (!f || !(f << text))
                throw std::runtime_error(fmt::format("cannot write report to '{}'", out));
        }
        std::size_t flagged = 0;
        for (const auto &r : result.reports)
            flagged += r.verdict == Verdict::discrepancy_flagged ? 1 : 0;
        std::cerr << fmt::format("{} reports, {} flagged, {} discrepancies noted\n", result.reports.size(),
                                 flagged, result.discrepancies.size());
        return flagged > 0 && !allow_flags ? 1 : 0;
    } catch (const config_error &e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
