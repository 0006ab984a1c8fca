#ifndef SHARPCOEF_CARATHEODORY_HPP
#define SHARPCOEF_CARATHEODORY_HPP

#include "sharpcoef/series.hpp"

#include <span>
#include <vector>

namespace sharpcoef
{

class caratheodory_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class tau_out_of_disk : public caratheodory_error
{
public:
    using caratheodory_error::caratheodory_error;
};

class zero_on_boundary : public caratheodory_error
{
public:
    using caratheodory_error::caratheodory_error;
};

class case_mismatch : public caratheodory_error
{
public:
    using caratheodory_error::caratheodory_error;
};

class coefficient_bound_violation : public caratheodory_error
{
public:
    using caratheodory_error::caratheodory_error;
};

/// Coefficients c_1..c_N of p(z) = 1 + sum c_n z^n with Re p > 0.
/// Construction enforces |c_n| <= 2 + 1e-10.
class CaratheodoryCoeffs
{
public:
    explicit CaratheodoryCoeffs(std::vector<cplx> c);

    /// c_n, 1-based.
    [[nodiscard]] cplx operator()(int n) const { return c_.at(static_cast<std::size_t>(n) - 1); }
    [[nodiscard]] int size() const noexcept { return static_cast<int>(c_.size()); }
    [[nodiscard]] std::span<const cplx> values() const noexcept { return c_; }

private:
    std::vector<cplx> c_;
};

struct TauParams
{
    cplx tau1;
    cplx tau2;
    cplx tau3;
};

/// w(z) = e^{i phase} z prod_k (a_k - z)/(1 - conj(a_k) z).
struct SchwarzSpec
{
    double phase = 0.0;
    std::vector<cplx> zeros;
};

inline constexpr double zero_modulus_limit = 1.0 - 1e-9;

/// (c_1, c_2, c_3) of the tau parametrization. tau1 must be real in [0, 1];
/// the formulas carry (1 - tau1^2) and are only valid in that reading.
CaratheodoryCoeffs tau_to_c(const TauParams &t);

PowerSeries schwarz_series(const SchwarzSpec &s, int order);

/// w = z phi_0 with phi_{k-1} = (tau_k + z phi_k) / (1 + conj(tau_k) z phi_k) and
/// phi_m = tau_m constant: the Schur-parameter chain whose first three
/// parameters reproduce tau_to_c for real tau1.
PowerSeries schur_chain_series(std::span<const cplx> taus, int order);

/// p = (1 + w)/(1 - w) as a series.
PowerSeries p_from_schwarz(const PowerSeries &w);
/// w = (p - 1)/(p + 1).
PowerSeries schwarz_from_p(const PowerSeries &p);
/// c_1..c_N of p = (1 + w)/(1 - w).
CaratheodoryCoeffs schwarz_to_p(const PowerSeries &w);

enum class BoundaryCase
{
    t1_unimodular,
    t2_unimodular,
    t3_unimodular,
};

/// The unique p in P determined by the tau's when the designated tau is
/// unimodular (and the lower-index ones lie in the open disk).
PowerSeries boundary_p_from_tau(const TauParams &t, BoundaryCase which, int order);

/// p(z) = (1 + (t1 t2 + t1) z + t2 z^2)/(1 + (t1 t2 - t1) z - t2 z^2): the
/// tau2-boundary form with real tau1 = t1, without the open-disk check on t1.
PowerSeries two_parameter_p(double t1, cplx t2, int order);

struct PositivityCheck
{
    bool positive;
    double min_real_part;
    double at_angle;
};

/// Spot check of Re p > 0 on |z| = radius at equally spaced angles
/// (passes when the minimum exceeds -1e-9).
PositivityCheck validate_positive_real_part(const PowerSeries &p, double radius, int gridpoints);

} // namespace sharpcoef

#endif
