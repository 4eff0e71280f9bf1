#ifndef EOB_DETAIL_SCATTERING_HPP
#define EOB_DETAIL_SCATTERING_HPP

#include "eob/model.hpp"

#include <array>
#include <cmath>
#include <complex>

// Shared closed forms for both pump sidebands. The two interactions differ
// only in the sign of the |g a|^2 term of the characteristic polynomial and
// in the conjugated microwave row, so both scattering matrices come from one
// code path with sign = +1 (red) or -1 (blue).
namespace eob::detail
{

using cd = std::complex<double>;

inline cd char_poly(cd s, double Gamma_a, double Gamma_b, double coupling)
{
    return (s + Gamma_a / 2.0) * (s + Gamma_b / 2.0) + coupling;
}

inline std::array<std::array<cd, 4>, 2> scattering_entries(const SystemParams &p, cd s,
                                                           double sign)
{
    const double Ga = p.Gamma_a();
    const double Gb = p.Gamma_b();
    const double pump = std::norm(p.g_alpha);
    const cd D = char_poly(s, Ga, Gb, sign * pump);
    const cd i_ga = cd(0.0, 1.0) * p.g_alpha;
    const cd i_ga_conj = sign * cd(0.0, 1.0) * std::conj(p.g_alpha);

    const double sq_ab = std::sqrt(p.gamma_a * p.gamma_b);
    const double sq_aap = std::sqrt(p.gamma_a * p.gamma_a_p);
    const double sq_abp = std::sqrt(p.gamma_a * p.gamma_b_p);
    const double sq_apb = std::sqrt(p.gamma_a_p * p.gamma_b);
    const double sq_bbp = std::sqrt(p.gamma_b * p.gamma_b_p);

    const cd half_b = s + Gb / 2.0;
    const cd half_a = s + Ga / 2.0;

    std::array<std::array<cd, 4>, 2> m;
    m[0][0] = ((-s + (p.gamma_a - p.gamma_a_p) / 2.0) * half_b - sign * pump) / D;
    m[0][1] = i_ga * sq_ab / D;
    m[0][2] = sq_aap * half_b / D;
    m[0][3] = i_ga * sq_abp / D;
    m[1][0] = i_ga_conj * sq_ab / D;
    m[1][1] = ((-s + (p.gamma_b - p.gamma_b_p) / 2.0) * half_a - sign * pump) / D;
    m[1][2] = i_ga_conj * sq_apb / D;
    m[1][3] = sq_bbp * half_a / D;
    return m;
}

// Numerator of the transient map F(s) = M(s)/D(s); M is linear in s with
// s-coefficient diag(sqrt(gamma_a), sqrt(gamma_b)).
inline std::array<std::array<cd, 2>, 2> transient_numerator(const SystemParams &p, cd s,
                                                            double sign)
{
    const double sqa = std::sqrt(p.gamma_a);
    const double sqb = std::sqrt(p.gamma_b);
    std::array<std::array<cd, 2>, 2> m;
    m[0][0] = sqa * (s + p.Gamma_b() / 2.0);
    m[0][1] = cd(0.0, 1.0) * p.g_alpha * sqa;
    m[1][0] = sign * cd(0.0, 1.0) * std::conj(p.g_alpha) * sqb;
    m[1][1] = sqb * (s + p.Gamma_a() / 2.0);
    return m;
}

} // namespace eob::detail

#endif // EOB_DETAIL_SCATTERING_HPP
