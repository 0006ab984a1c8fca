#include "sharpcoef/series.hpp"

#include <algorithm>
#include <cmath>

namespace sharpcoef
{

namespace
{

int checked_order(int order)
{
    if (order < 0 || order > max_order)
        throw std::invalid_argument("truncation order out of range: " + std::to_string(order));
    return order;
}

} // namespace

PowerSeries::PowerSeries(int order) : coeffs_(static_cast<std::size_t>(checked_order(order)) + 1) {}

PowerSeries::PowerSeries(std::span<const cplx> coeffs, int order) : PowerSeries(order)
{
    const auto n = std::min(coeffs.size(), coeffs_.size());
    std::copy_n(coeffs.begin(), n, coeffs_.begin());
    check_finite();
}

PowerSeries::PowerSeries(std::initializer_list<cplx> coeffs, int order)
    : PowerSeries(std::span<const cplx>(coeffs.begin(), coeffs.size()), order)
{
}

PowerSeries PowerSeries::constant(cplx value, int order)
{
    PowerSeries s(order);
    s.coeffs_[0] = value;
    s.check_finite();
    return s;
}

PowerSeries PowerSeries::identity(int order) { return monomial(1.0, 1, order); }

PowerSeries PowerSeries::monomial(cplx c, int k, int order)
{
    PowerSeries s(order);
    if (k >= 0 && k <= order)
        s.coeffs_[static_cast<std::size_t>(k)] = c;
    s.check_finite();
    return s;
}

PowerSeries PowerSeries::truncated(int order) const
{
    return PowerSeries(std::span<const cplx>(coeffs_), std::min(order, this->order()));
}

cplx PowerSeries::evaluate(cplx z) const noexcept
{
    cplx acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

double PowerSeries::max_abs_diff(const PowerSeries &other) const noexcept
{
    const auto n = std::min(coeffs_.size(), other.coeffs_.size());
    double e = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        e = std::max(e, std::abs(coeffs_[k] - other.coeffs_[k]));
    return e;
}

void PowerSeries::check_finite() const
{
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!std::isfinite(coeffs_[k].real()) || !std::isfinite(coeffs_[k].imag()))
            throw non_finite_coefficient(k);
}

PowerSeries add(const PowerSeries &a, const PowerSeries &b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        c[k] = a[k] + b[k];
    return PowerSeries(c, n);
}

PowerSeries sub(const PowerSeries &a, const PowerSeries &b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        c[k] = a[k] - b[k];
    return PowerSeries(c, n);
}

PowerSeries scale(const PowerSeries &a, cplx s)
{
    std::vector<cplx> c(a.coeffs().begin(), a.coeffs().end());
    for (auto &x : c)
        x *= s;
    return PowerSeries(c, a.order());
}

PowerSeries mul(const PowerSeries &a, const PowerSeries &b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        cplx acc{};
        for (int j = 0; j <= k; ++j)
            acc += a[j] * b[k - j];
        c[k] = acc;
    }
    return PowerSeries(c, n);
}

PowerSeries div(const PowerSeries &a, const PowerSeries &b)
{
    if (std::abs(b[0]) < 1e-300)
        throw division_by_zero_constant_term();
    const int n = std::min(a.order(), b.order());
    std::vector<cplx> q(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        cplx acc = a[k];
        for (int j = 1; j <= k; ++j)
            acc -= b[j] * q[k - j];
        q[k] = acc / b[0];
    }
    return PowerSeries(q, n);
}

PowerSeries exp_series(const PowerSeries &a)
{
    const int n = a.order();
    std::vector<cplx> e(static_cast<std::size_t>(n) + 1);
    e[0] = std::exp(a[0]);
    for (int k = 1; k <= n; ++k) {
        cplx acc{};
        for (int j = 1; j <= k; ++j)
            acc += static_cast<double>(j) * a[j] * e[k - j];
        e[k] = acc / static_cast<double>(k);
    }
    return PowerSeries(e, n);
}

PowerSeries log_ratio(const PowerSeries &f)
{
    if (f.order() < 1)
        throw not_normalized("order below 1");
    if (std::abs(f[0]) > 1e-14)
        throw not_normalized("f(0) != 0");
    if (std::abs(f[1] - 1.0) > 1e-14)
        throw not_normalized("f'(0) != 1");

    // g = f/z, g[0] = 1; k L_k = k g_k - sum_{j=1}^{k-1} j L_j g_{k-j}.
    const int n = f.order() - 1;
    std::vector<cplx> log_g(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        cplx acc = static_cast<double>(k) * f[k + 1];
        for (int j = 1; j < k; ++j)
            acc -= static_cast<double>(j) * log_g[j] * f[k - j + 1];
        log_g[k] = acc / static_cast<double>(k);
    }
    return PowerSeries(log_g, n);
}

PowerSeries derivative(const PowerSeries &a)
{
    const int n = std::max(a.order() - 1, 0);
    std::vector<cplx> d(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= a.order(); ++k)
        d[k - 1] = static_cast<double>(k) * a[k];
    return PowerSeries(d, n);
}

PowerSeries integral(const PowerSeries &a)
{
    const int n = a.order() + 1;
    std::vector<cplx> s(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= a.order(); ++k)
        s[k + 1] = a[k] / static_cast<double>(k + 1);
    return PowerSeries(s, n);
}

PowerSeries compose(const PowerSeries &outer, const PowerSeries &inner)
{
    if (std::abs(inner[0]) > 1e-14)
        throw inner_not_vanishing();
    const int n = std::min(outer.order(), inner.order());
    // Horner in series arithmetic; the vanishing constant term of inner makes
    // coefficients above n irrelevant.
    PowerSeries acc = PowerSeries::constant(outer[n], n);
    const PowerSeries h = inner.truncated(n);
    for (int k = n - 1; k >= 0; --k)
        acc = add(mul(acc, h), PowerSeries::constant(outer[k], n));
    return acc;
}

PowerSeries operator+(const PowerSeries &a, const PowerSeries &b) { return add(a, b); }
PowerSeries operator-(const PowerSeries &a, const PowerSeries &b) { return sub(a, b); }
PowerSeries operator*(const PowerSeries &a, const PowerSeries &b) { return mul(a, b); }
PowerSeries operator/(const PowerSeries &a, const PowerSeries &b) { return div(a, b); }

} // namespace sharpcoef
