// AVX2 variants of the grid kernels. Compiled with -mavx2 and without FP
// contraction; the operation order matches the scalar reference exactly, so
// results are bit-identical lane by lane. FMA is deliberately not used.

#if defined(__x86_64__) || defined(__i386__)

#include "eob/kernels.hpp"

#include <immintrin.h>

namespace eob::kernels::avx2
{

void pole_gain_grid(const double *omega, std::size_t n, std::complex<double> p_plus,
                    std::complex<double> p_minus, double numer, double *out)
{
    const double rp = p_plus.real();
    const double ip = p_plus.imag();
    const double rm = p_minus.real();
    const double im = p_minus.imag();
    const double rp2s = rp * rp;
    const double rm2s = rm * rm;

    const __m256d vip = _mm256_set1_pd(ip);
    const __m256d vim = _mm256_set1_pd(im);
    const __m256d vrp2 = _mm256_set1_pd(rp2s);
    const __m256d vrm2 = _mm256_set1_pd(rm2s);
    const __m256d vnum = _mm256_set1_pd(numer);

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
    {
        const __m256d w = _mm256_loadu_pd(omega + i);
        const __m256d dp = _mm256_add_pd(w, vip);
        const __m256d dm = _mm256_add_pd(w, vim);
        const __m256d fp = _mm256_add_pd(vrp2, _mm256_mul_pd(dp, dp));
        const __m256d fm = _mm256_add_pd(vrm2, _mm256_mul_pd(dm, dm));
        const __m256d res = _mm256_div_pd(vnum, _mm256_mul_pd(fp, fm));
        _mm256_storeu_pd(out + i, res);
    }
    if (i < n)
    {
        scalar::pole_gain_grid(omega + i, n - i, p_plus, p_minus, numer, out + i);
    }
}

void cooperativity_peak_grid(const double *g0, std::size_t n, double sign, double *out)
{
    const __m256d vsign = _mm256_set1_pd(sign);
    const __m256d vone = _mm256_set1_pd(1.0);
    const __m256d vfour = _mm256_set1_pd(4.0);

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
    {
        const __m256d g = _mm256_loadu_pd(g0 + i);
        const __m256d d = _mm256_add_pd(vone, _mm256_mul_pd(vsign, g));
        const __m256d res = _mm256_div_pd(_mm256_mul_pd(vfour, g), _mm256_mul_pd(d, d));
        _mm256_storeu_pd(out + i, res);
    }
    if (i < n)
    {
        scalar::cooperativity_peak_grid(g0 + i, n - i, sign, out + i);
    }
}

} // namespace eob::kernels::avx2

#else

// Non-x86 hosts never dispatch here; provide stubs so the target links.
#include "eob/kernels.hpp"

namespace eob::kernels::avx2
{
void pole_gain_grid(const double *omega, std::size_t n, std::complex<double> p_plus,
                    std::complex<double> p_minus, double numer, double *out)
{
    scalar::pole_gain_grid(omega, n, p_plus, p_minus, numer, out);
}
void cooperativity_peak_grid(const double *g0, std::size_t n, double sign, double *out)
{
    scalar::cooperativity_peak_grid(g0, n, sign, out);
}
} // namespace eob::kernels::avx2

#endif
