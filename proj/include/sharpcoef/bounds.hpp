#ifndef SHARPCOEF_BOUNDS_HPP
#define SHARPCOEF_BOUNDS_HPP

#include "sharpcoef/class_maps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sharpcoef
{

class bounds_domain_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

class unknown_theorem : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Y(A, B, C) = max_{|z| <= 1} |A + B z + C z^2| + 1 - |z|^2

struct YArgs
{
    double A;
    double B;
    double C;
};

enum class YBranch
{
    ac_nonneg_sum,        // |A| + |B| + |C|
    ac_nonneg_interior,   // 1 + |A| + B^2 / (4(1 - |C|))
    ac_neg_interior_minus, // 1 - |A| + B^2 / (4(1 - |C|))
    ac_neg_interior_plus, // 1 + |A| + B^2 / (4(1 + |C|))
    r_sum,                // |A| + |B| - |C|
    r_alt,                // -|A| + |B| + |C|
    r_sqrt,               // (|C| + |A|) sqrt(1 - B^2 / (4AC))
};

/// The five top-level cases: the two AC >= 0 cases, the two interior
/// AC < 0 cases and R(A, B, C) (which has three sub-branches).
int top_level_case(YBranch b) noexcept;
std::string to_string(YBranch b);

struct YValue
{
    double value;
    YBranch branch;
};

YValue y_closed_form(const YArgs &a);

/// Polar grid (grid radii x grid angles) followed by pattern-search
/// refinement from the best local maxima. grid >= 100.
double y_bruteforce(const YArgs &a, int grid);

// ---------------------------------------------------------------------------
// Coefficient lemmas for the Caratheodory class

/// Sharp bound of |c_2 - v c_1^2|.
double fs_caratheodory_bound(double v);

/// 0 <= B <= 1 and B(2B - 1) <= D <= B, under which |c3 - 2B c1 c2 + D c1^3| <= 2.
bool lemma_c3_premises(double B, double D);

/// LHS - RHS of the premise on (alpha, beta, gamma, lambda) guaranteeing
/// |gamma c1^4 + lambda c2^2 + 2 alpha c1 c3 - (3/2) beta c1^2 c2 - c4| <= 2;
/// the premise holds iff the value is <= 0. alpha, lambda in (0, 1).
double lemma_c4_premise_value(double alpha, double beta, double gamma, double lambda);

struct SimThomasArgs
{
    double J = 0.0;
    cplx K{};
    double L = 0.0;

    /// |4K + 2L|, recomputed on every call.
    [[nodiscard]] double M() const noexcept { return std::abs(4.0 * K + 2.0 * L); }
};

enum class UpperBranch
{
    large_k,   // |2K + L| >= |L| + J
    otherwise, // 2|L|
};

enum class LowerBranch
{
    j_dominant, // J >= M + 2|L|
    radical,    // J^2 <= 2|L| (M + 2|L|)
    mixed,      // otherwise
};

struct UpperValue
{
    double value;
    UpperBranch branch;
};

struct LowerValue
{
    double value;
    LowerBranch branch;
};

/// Phi(c1, c2) = |K c1^2 + L c2| - |J c1|.
double simthomas_phi(const SimThomasArgs &s, cplx c1, cplx c2);
/// Sharp upper bound of Phi.
UpperValue simthomas_upper(const SimThomasArgs &s);
/// Sharp upper bound of -Phi.
LowerValue simthomas_lower(const SimThomasArgs &s);

// ---------------------------------------------------------------------------
// Closed-form bounds

enum class TheoremId
{
    gamma,            // |gamma_n|
    t21,              // gamma_1^2 - |gamma_2|^2
    zalcman,          // |a2 a3 - a4|
    fs_upper,         // upper bound of |a3 - l a2^2| - mu |a2|
    fs_lower,         // lower bound of the same
    conjecture_gamma, // |gamma_n| <= 1/(2n), n >= 5, starlike class
};

std::string to_string(TheoremId id);

struct TheoremParams
{
    int n = 0;
    cplx lambda{};
    double mu = 0.0;
};

struct PiecewiseBound
{
    std::string name;
    std::string branch;
    std::optional<double> lower;
    std::optional<double> upper;
};

/// The Fekete-Szego functional as (1/scale) Phi(c1, c2) for the class.
struct FsReduction
{
    SimThomasArgs args;
    double scale;
};

FsReduction fs_reduction(ClassTag tag, cplx lambda, double mu);

/// Claimed bound(s) of a theorem. Fekete-Szego branches follow the
/// Sim-Thomas case split of the reduced functional.
PiecewiseBound theorem_bound(TheoremId id, ClassTag tag, const TheoremParams &params = {});

/// Sharpness witnesses for the lower and upper claims (empty when the claim
/// has none).
struct Witnesses
{
    std::optional<ExtremalSpec> lower;
    std::optional<ExtremalSpec> upper;
};

Witnesses sharpness_witnesses(TheoremId id, ClassTag tag, const TheoremParams &params = {});

/// The Fekete-Szego displays exactly as printed (conditions and values), for
/// comparison with theorem_bound. Returns every branch whose printed
/// condition holds.
struct PrintedBranch
{
    std::string condition;
    double value;
};

std::vector<PrintedBranch> fs_bound_printed(ClassTag tag, bool lower, cplx lambda, double mu);

// ---------------------------------------------------------------------------
// Proof-internal functions

enum class Surface
{
    F,   // -x^2 + 64x + 4x(4-x)y - 4(4-x)^2 y^2
    G,   // -x^2 + 64x - 4x(4-x)y - 4(4-x)^2 y^2
    Phi, // -9x^2 + 576x + 24x(4-x)y - 16(4-x)^2 y^2
    Psi, // -9x^2 + 576x - 24x(4-x)y - 16(4-x)^2 y^2
};

/// (x, y) in [0, 4] x [0, 1].
double proof_surface(Surface s, double x, double y);

enum class Univariate
{
    psi1, // 12t - 7t^3 on [2/3, 1)
    psi2, // 12 - 9t^2 + 13t^3 on (0, 2/3)
    psi3, // 30t - 29t^3 on [4/7, 1)
    psi4, // 192 - 84t^2 + 124t^3 on (0, 4/7)
};

/// Evaluates on the closure of the domain (open endpoints carry the suprema).
double proof_univariate(Univariate u, double t);

struct DomainInterval
{
    double lo;
    double hi;
    bool lo_closed;
    bool hi_closed;
};

DomainInterval univariate_domain(Univariate u) noexcept;

struct UnivariateExtremum
{
    double argument;
    double value;
    bool attained; // false when the supremum sits at an open endpoint
};

/// Supremum over the domain from the critical-point analysis.
UnivariateExtremum proof_univariate_sup(Univariate u);

} // namespace sharpcoef

#endif
