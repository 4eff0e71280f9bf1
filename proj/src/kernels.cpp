#include "eob/kernels.hpp"

#include <stdexcept>

namespace eob::kernels
{

namespace scalar
{

void pole_gain_grid(const double *omega, std::size_t n, std::complex<double> p_plus,
                    std::complex<double> p_minus, double numer, double *out)
{
    const double rp = p_plus.real();
    const double ip = p_plus.imag();
    const double rm = p_minus.real();
    const double im = p_minus.imag();
    const double rp2 = rp * rp;
    const double rm2 = rm * rm;
    for (std::size_t i = 0; i < n; ++i)
    {
        const double w = omega[i];
        const double dp = w + ip;
        const double dm = w + im;
        const double fp = rp2 + dp * dp;
        const double fm = rm2 + dm * dm;
        out[i] = numer / (fp * fm);
    }
}

void cooperativity_peak_grid(const double *g0, std::size_t n, double sign, double *out)
{
    for (std::size_t i = 0; i < n; ++i)
    {
        const double g = g0[i];
        const double d = 1.0 + sign * g;
        out[i] = 4.0 * g / (d * d);
    }
}

} // namespace scalar

namespace
{

bool avx2_supported()
{
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend &current_backend()
{
    static Backend backend = avx2_supported() ? Backend::Avx2 : Backend::Scalar;
    return backend;
}

} // namespace

std::string to_string(Backend b)
{
    return b == Backend::Avx2 ? "avx2" : "scalar";
}

bool backend_available(Backend b)
{
    return b == Backend::Scalar || avx2_supported();
}

Backend active_backend()
{
    return current_backend();
}

void set_backend(Backend b)
{
    if (!backend_available(b))
    {
        throw std::runtime_error("kernel backend unavailable on this host: " + to_string(b));
    }
    current_backend() = b;
}

void pole_gain_grid(const double *omega, std::size_t n, std::complex<double> p_plus,
                    std::complex<double> p_minus, double numer, double *out)
{
#if defined(__x86_64__) || defined(__i386__)
    if (current_backend() == Backend::Avx2)
    {
        avx2::pole_gain_grid(omega, n, p_plus, p_minus, numer, out);
        return;
    }
#endif
    scalar::pole_gain_grid(omega, n, p_plus, p_minus, numer, out);
}

void cooperativity_peak_grid(const double *g0, std::size_t n, double sign, double *out)
{
#if defined(__x86_64__) || defined(__i386__)
    if (current_backend() == Backend::Avx2)
    {
        avx2::cooperativity_peak_grid(g0, n, sign, out);
        return;
    }
#endif
    scalar::cooperativity_peak_grid(g0, n, sign, out);
}

} // namespace eob::kernels
