#ifndef SHARPCOEF_CLASS_MAPS_HPP
#define SHARPCOEF_CLASS_MAPS_HPP

#include "sharpcoef/caratheodory.hpp"
#include "sharpcoef/series.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sharpcoef
{

enum class ClassTag
{
    starlike_e, // z f'/f  subordinate to e^z
    convex_e,   // 1 + z f''/f'  subordinate to e^z
};

std::string_view to_string(ClassTag tag) noexcept;
/// Accepts "star_e" / "convex_e" (and the long forms "starlike_e").
std::optional<ClassTag> parse_class_tag(std::string_view s) noexcept;

class insufficient_coeffs : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Point of the tau grid: Schur parameters tau1..tau3 plus the chain tail.
struct FromTau
{
    TauParams tau;
    cplx tail;
};

struct FromSchwarz
{
    SchwarzSpec spec;
};

struct FromExtremal
{
    std::string id;
};

/// Raw Caratheodory coefficients with no further structure (closed-form route).
struct FromCoeffs
{
};

using Provenance = std::variant<FromCoeffs, FromTau, FromSchwarz, FromExtremal>;

std::string describe(const Provenance &p);

struct ClassMember
{
    ClassTag class_tag;
    /// a[n] is the coefficient of z^n; a[0] = 0 and a[1] = 1.
    std::vector<cplx> a;
    Provenance provenance;

    [[nodiscard]] cplx coeff(int n) const { return a.at(static_cast<std::size_t>(n)); }
    /// Highest available n (M).
    [[nodiscard]] int max_index() const noexcept { return static_cast<int>(a.size()) - 1; }
    /// The series z + a_2 z^2 + ... + a_M z^M.
    [[nodiscard]] PowerSeries series() const;
};

/// a_2..a_5 of the starlike class from c_1..c_4.
ClassMember star_coeffs(const CaratheodoryCoeffs &c);
/// a_2..a_5 of the convex class from c_1..c_4.
ClassMember convex_coeffs(const CaratheodoryCoeffs &c);

/// Solves z f'/f = e^w (starlike) or 1 + z f''/f' = e^w (convex) term by
/// term; a_2..a_M with M = w.order().
ClassMember coeffs_via_ode(const PowerSeries &w, ClassTag tag, Provenance provenance = FromCoeffs{});

struct MonomialGenerator
{
    int power; // p(z) = (1 + z^n)/(1 - z^n)
};

struct TwoParameterGenerator
{
    double t1;
    cplx t2;
};

struct ExtremalSpec
{
    std::string id;
    ClassTag class_tag;
    std::variant<MonomialGenerator, TwoParameterGenerator> generator;
};

struct ExtremalMember
{
    ClassMember member;
    PowerSeries f;
    PowerSeries p;
};

/// Builds p, converts to w = (p - 1)/(p + 1) and solves the class ODE.
ExtremalMember extremal_member(const ExtremalSpec &spec, int order = default_order);

/// The fixed sharpness witnesses of a class (those not depending on
/// Fekete-Szego parameters): f1, f2, f3, f4_star, zalcman_star for the
/// starlike class; f5, f6, f7, f4_convex for the convex class.
std::vector<ExtremalSpec> extremal_catalog(ClassTag tag);

/// Looks up a fixed catalog entry by id; throws std::out_of_range.
ExtremalSpec catalog_entry(ClassTag tag, std::string_view id);

/// {id, class, p, a: [[re, im], ...]} entries for a2..aM.
nlohmann::json catalog_json(ClassTag tag, int order = default_order);

} // namespace sharpcoef

#endif
