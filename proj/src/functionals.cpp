#include "sharpcoef/functionals.hpp"

#include <cmath>

namespace sharpcoef
{

namespace
{

void require_index(const ClassMember &m, int n)
{
    if (m.max_index() < n)
        throw insufficient_coeffs("member lacks a_" + std::to_string(n));
}

} // namespace

LogCoeffs log_coeffs(const ClassMember &m)
{
    require_index(m, 5);
    const cplx a2 = m.coeff(2), a3 = m.coeff(3), a4 = m.coeff(4), a5 = m.coeff(5);
    const cplx a2_2 = a2 * a2;
    return LogCoeffs{{
        0.5 * a2,
        0.5 * (a3 - 0.5 * a2_2),
        0.5 * (a4 - a2 * a3 + a2_2 * a2 / 3.0),
        0.5 * (a5 - a2 * a4 + a2_2 * a3 - 0.5 * a3 * a3 - 0.25 * a2_2 * a2_2),
    }};
}

cplx log_coeff_from_series(const ClassMember &m, int n)
{
    if (n < 1 || n > m.max_index() - 1)
        throw insufficient_coeffs("log coefficient index exceeds truncation");
    return 0.5 * log_ratio(m.series())[n];
}

ClassMember rotate_normalize(const ClassMember &m)
{
    double theta = 0.0;
    if (m.max_index() >= 2 && m.coeff(2) != cplx{})
        theta = -std::arg(m.coeff(2));
    else if (m.max_index() >= 3 && m.coeff(3) != cplx{})
        theta = -std::arg(m.coeff(3)) / 2.0;
    else
        return m;

    ClassMember out = m;
    for (int n = 2; n <= out.max_index(); ++n)
        out.a[n] *= std::polar(1.0, (n - 1) * theta);
    // The rotation is exact in the modulus; pin the normalized entry to the real axis.
    if (m.coeff(2) != cplx{})
        out.a[2] = std::abs(m.coeff(2));
    else
        out.a[3] = std::abs(m.coeff(3));
    return out;
}

double toeplitz_t21(const ClassMember &m)
{
    require_index(m, 3);
    if (std::abs(m.coeff(2).imag()) > 1e-10)
        throw non_real_a2("T21 needs a rotation-normalized member (real a_2)");
    const double a2 = m.coeff(2).real();
    const cplx a3 = m.coeff(3);
    const double a2_2 = a2 * a2;
    return (-a2_2 * a2_2 + 4.0 * a2_2 + 4.0 * a2_2 * a3.real() - 4.0 * std::norm(a3)) / 16.0;
}

double generalized_zalcman(const ClassMember &m, int n, int k)
{
    if (n < 2 || k < 2)
        throw std::invalid_argument("Zalcman indices must be at least 2");
    require_index(m, n + k - 1);
    return std::abs(m.coeff(n) * m.coeff(k) - m.coeff(n + k - 1));
}

double zalcman_23(const ClassMember &m) { return generalized_zalcman(m, 2, 3); }

double fekete_szego(const ClassMember &m, cplx lambda, double mu)
{
    if (!(mu > 0.0))
        throw non_positive_mu("Fekete-Szego weight mu must be positive");
    require_index(m, 3);
    const cplx a2 = m.coeff(2);
    return std::abs(m.coeff(3) - lambda * a2 * a2) - mu * std::abs(a2);
}

} // namespace sharpcoef
