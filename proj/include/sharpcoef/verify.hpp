#ifndef SHARPCOEF_VERIFY_HPP
#define SHARPCOEF_VERIFY_HPP

#include "sharpcoef/bounds.hpp"
#include "sharpcoef/class_maps.hpp"
#include "sharpcoef/functionals.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace sharpcoef
{

class config_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class truncation_too_low : public config_error
{
public:
    using config_error::config_error;
};

enum class Functional
{
    gamma,        // |gamma_n| from the polynomial expressions (n = 1..4)
    series_gamma, // |gamma_n| from log(f/z) (any n < M)
    t21,          // gamma_1^2 - |gamma_2|^2 on the rotation-normalized member
    zalcman,      // |a2 a3 - a4|
    fekete_szego, // |a3 - l a2^2| - mu |a2|
};

struct FunctionalSpec
{
    Functional kind;
    int n = 0;
    cplx lambda{};
    double mu = 0.0;

    [[nodiscard]] std::string key() const;
    [[nodiscard]] double evaluate(const ClassMember &m) const;
};

enum class OutputFormat
{
    json,
    csv,
    markdown,
};

struct LambdaMu
{
    cplx lambda;
    double mu;
};

/// lambda in {0, 1/2, 1, 3/2, 2, 1 +- i/2} x mu in {1/10, 1/2, 1, 2, 4}.
std::vector<LambdaMu> default_fs_grid();

enum class Selector
{
    gamma1,
    gamma2,
    gamma3,
    gamma4,
    t21,
    zalcman,
    fekete_szego,
};

std::optional<std::vector<Selector>> parse_selector(std::string_view s);

struct RunConfig
{
    ClassTag class_tag = ClassTag::starlike_e;
    std::vector<Selector> functionals;
    std::int64_t sample_count = 20000;
    int schwarz_degree = 4;
    int tau_grid_density = 6;
    std::uint64_t seed = 42;
    int refine_iterations = 100;
    int order = default_order;
    /// Empty: default_fs_grid().
    std::vector<LambdaMu> fs_points;
    std::vector<int> conjecture;
    OutputFormat output_format = OutputFormat::json;
    std::string output_path;
    bool timestamp = true;
    unsigned threads = 1;

    /// Throws config_error (truncation_too_low for conjecture orders the
    /// truncation cannot reach).
    void validate() const;
    [[nodiscard]] nlohmann::json to_json() const;
};

// ---------------------------------------------------------------------------
// Sampling

/// Counter-based stream derivation: splitmix64 of (seed, stream index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Uniform [0, 1) with 53 random bits, independent of the standard library's
/// distribution implementations.
double uniform01(std::mt19937_64 &rng) noexcept;

/// Uniform phase; degree uniform in 0..max_degree; zeros uniform in the disk
/// of radius 1 - 1e-6.
SchwarzSpec draw_schwarz(std::mt19937_64 &rng, int max_degree);

/// Deterministic member stream: fixed catalog, then the tau grid, then seeded
/// Blaschke draws in chunks of chunk_size (each chunk has its own sub-stream,
/// so the stream for N samples is a prefix of the stream for N + k).
class MemberStream
{
public:
    static constexpr std::int64_t chunk_size = 2048;

    explicit MemberStream(const RunConfig &cfg);

    [[nodiscard]] std::int64_t size() const noexcept;
    [[nodiscard]] std::int64_t catalog_size() const noexcept { return static_cast<std::int64_t>(catalog_.size()); }
    [[nodiscard]] std::int64_t tau_grid_size() const noexcept;

    /// Visits members [begin, end) in index order.
    void visit(std::int64_t begin, std::int64_t end,
               const std::function<void(std::int64_t, const ClassMember &)> &fn) const;

private:
    [[nodiscard]] ClassMember tau_member(std::int64_t k) const;

    ClassTag tag_;
    int order_;
    int degree_;
    int grid_;
    std::uint64_t seed_;
    std::int64_t samples_;
    std::vector<ClassMember> catalog_;
};

std::vector<ClassMember> sample_members(const RunConfig &cfg);

// ---------------------------------------------------------------------------
// Extremization

struct Extrema
{
    double min = std::numeric_limits<double>::infinity();
    double max = -std::numeric_limits<double>::infinity();
    std::string argmin;
    std::string argmax;
    std::int64_t min_index = -1;
    std::int64_t max_index = -1;
};

/// Running min/max over the stream followed by refine_iterations sweeps of
/// derivative-free coordinate search (step 1e-4, halved on failure) from
/// the best Blaschke draws.
Extrema empirical_extrema(const RunConfig &cfg, const FunctionalSpec &functional);

/// Same as empirical_extrema for several functionals in one pass.
std::vector<Extrema> empirical_extrema(const RunConfig &cfg, const std::vector<FunctionalSpec> &functionals);

// ---------------------------------------------------------------------------
// Reports

enum class Verdict
{
    consistent,
    sharpness_attained,
    discrepancy_flagged,
};

std::string_view to_string(Verdict v) noexcept;

inline constexpr double bound_tolerance = 1e-9;
inline constexpr double sharpness_tolerance = 1e-7;

struct WitnessValue
{
    std::string id;
    double value;
};

struct BoundReport
{
    std::string theorem;
    ClassTag class_tag;
    std::string branch;
    std::optional<double> claimed_lower;
    std::optional<double> claimed_upper;
    Extrema empirical;
    std::optional<WitnessValue> witness_lower;
    std::optional<WitnessValue> witness_upper;
    Verdict verdict = Verdict::consistent;
    std::optional<double> gap_lower; // empirical_min - claimed_lower
    std::optional<double> gap_upper; // claimed_upper - empirical_max
    std::string note;
};

/// Verdict from claim, extrema and witness values.
Verdict judge(const BoundReport &r);

BoundReport conjecture_probe(const RunConfig &cfg, int n);

struct RunResult
{
    std::vector<BoundReport> reports;
    nlohmann::json proof_checks;
    nlohmann::json discrepancies;

    [[nodiscard]] bool flagged() const;
};

RunResult run_report(const RunConfig &cfg);

nlohmann::json report_json(const RunConfig &cfg, const RunResult &result);
/// JSON with every floating value printed to 17 significant digits.
std::string render_json(const nlohmann::json &doc);
std::string render_csv(const RunResult &result);
std::string render_markdown(const RunConfig &cfg, const RunResult &result);
std::string render(const RunConfig &cfg, const RunResult &result);

/// Static checks of printed proof values (surface extrema, premise signs,
/// univariate suprema); returned as an array of {name, printed, computed,
/// status}.
nlohmann::json proof_checks();

} // namespace sharpcoef

#endif
