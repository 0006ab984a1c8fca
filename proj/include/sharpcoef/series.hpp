#ifndef SHARPCOEF_SERIES_HPP
#define SHARPCOEF_SERIES_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sharpcoef
{

using cplx = std::complex<double>;

/// Default truncation order for class members: a_2..a_5 plus headroom
/// for probing gamma_5..gamma_7.
inline constexpr int default_order = 8;
inline constexpr int max_order = 64;

class series_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class division_by_zero_constant_term : public series_error
{
public:
    division_by_zero_constant_term() : series_error("series division: divisor has vanishing constant term") {}
};

class not_normalized : public series_error
{
public:
    explicit not_normalized(const std::string &what) : series_error("series not normalized: " + what) {}
};

class inner_not_vanishing : public series_error
{
public:
    inner_not_vanishing() : series_error("composition: inner series has nonzero constant term") {}
};

class non_finite_coefficient : public series_error
{
public:
    explicit non_finite_coefficient(std::size_t k)
        : series_error("series coefficient " + std::to_string(k) + " is not finite")
    {
    }
};

// Truncated power series sum_{k=0}^{N} c[k] z^k with complex double coefficients.
class PowerSeries
{
public:
    /// Zero series of order N.
    explicit PowerSeries(int order = default_order);
    /// Coefficients c[0..], padded with zeros (or cut) to length order+1.
    PowerSeries(std::span<const cplx> coeffs, int order);
    PowerSeries(std::initializer_list<cplx> coeffs, int order);

    static PowerSeries constant(cplx value, int order);
    /// The series of z (identity map).
    static PowerSeries identity(int order);
    /// c * z^k
    static PowerSeries monomial(cplx c, int k, int order);

    [[nodiscard]] int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const cplx &operator[](std::size_t k) const { return coeffs_[k]; }
    [[nodiscard]] cplx coeff(std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : cplx{}; }
    [[nodiscard]] std::span<const cplx> coeffs() const noexcept { return coeffs_; }

    /// Same coefficients, cut down to a lower order.
    [[nodiscard]] PowerSeries truncated(int order) const;
    /// Evaluates the truncated polynomial at z (Horner).
    [[nodiscard]] cplx evaluate(cplx z) const noexcept;
    /// max_k |c[k] - other[k]| over the common range.
    [[nodiscard]] double max_abs_diff(const PowerSeries &other) const noexcept;

private:
    void check_finite() const;

    std::vector<cplx> coeffs_;
};

PowerSeries add(const PowerSeries &a, const PowerSeries &b);
PowerSeries sub(const PowerSeries &a, const PowerSeries &b);
PowerSeries scale(const PowerSeries &a, cplx s);
PowerSeries mul(const PowerSeries &a, const PowerSeries &b);

/// q with q*b = a up to truncation. Throws division_by_zero_constant_term
/// when |b[0]| < 1e-300.
PowerSeries div(const PowerSeries &a, const PowerSeries &b);

/// exp(a) from (e^a)' = a' e^a; k e_k = sum_{j=1}^{k} j a_j e_{k-j}.
PowerSeries exp_series(const PowerSeries &a);

/// log(f(z)/z) for normalized f (f[0] = 0, f[1] = 1), constant term 0.
/// Truncation order drops by one because of the division by z.
PowerSeries log_ratio(const PowerSeries &f);

/// Termwise derivative; order N-1.
PowerSeries derivative(const PowerSeries &a);

/// Antiderivative with zero constant term; order N+1.
PowerSeries integral(const PowerSeries &a);

/// outer(inner(z)), inner[0] must vanish (|inner[0]| <= 1e-14).
PowerSeries compose(const PowerSeries &outer, const PowerSeries &inner);

PowerSeries operator+(const PowerSeries &a, const PowerSeries &b);
PowerSeries operator-(const PowerSeries &a, const PowerSeries &b);
PowerSeries operator*(const PowerSeries &a, const PowerSeries &b);
PowerSeries operator/(const PowerSeries &a, const PowerSeries &b);

} // namespace sharpcoef

#endif
