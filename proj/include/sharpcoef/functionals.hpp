#ifndef SHARPCOEF_FUNCTIONALS_HPP
#define SHARPCOEF_FUNCTIONALS_HPP

#include "sharpcoef/class_maps.hpp"

#include <array>

namespace sharpcoef
{

class non_real_a2 : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class non_positive_mu : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// gamma_1..gamma_4 from the polynomial expressions in a_2..a_5.
struct LogCoeffs
{
    std::array<cplx, 4> gamma;

    [[nodiscard]] cplx operator()(int n) const { return gamma.at(static_cast<std::size_t>(n) - 1); }
};

LogCoeffs log_coeffs(const ClassMember &m);

/// gamma_n as half the n-th coefficient of log(f(z)/z); valid for any
/// n <= M - 1.
cplx log_coeff_from_series(const ClassMember &m, int n);

/// a_n -> a_n e^{i(n-1) theta} with theta chosen so a_2 >= 0 (or a_3 >= 0 when
/// a_2 = 0).
ClassMember rotate_normalize(const ClassMember &m);

/// gamma_1^2 - |gamma_2|^2 via
/// (-a2^4 + 4 a2^2 + 4 a2^2 Re a3 - 4 |a3|^2)/16; needs real a_2 (|Im a_2| <= 1e-10).
double toeplitz_t21(const ClassMember &m);

/// |a_n a_m - a_{n+m-1}|.
double generalized_zalcman(const ClassMember &m, int n, int k);

/// |a_2 a_3 - a_4|.
double zalcman_23(const ClassMember &m);

/// |a_3 - lambda a_2^2| - mu |a_2|,  mu > 0.
double fekete_szego(const ClassMember &m, cplx lambda, double mu);

} // namespace sharpcoef

#endif
