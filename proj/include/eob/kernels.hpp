#ifndef EOB_KERNELS_HPP
#define EOB_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <string>

// Grid-evaluation kernels for the sweep and figure-dataset paths. Each
// kernel has a scalar reference implementation and an AVX2 variant; the
// unqualified entry points dispatch at runtime to the widest variant the
// host supports. Both variants are compiled without FP contraction and
// perform the arithmetic in the same order, so scalar and SIMD results are
// bit-identical (the equivalence tests assert exactly that).
namespace eob::kernels
{

enum class Backend
{
    Scalar,
    Avx2,
};

std::string to_string(Backend b);

bool backend_available(Backend b);

// Backend the dispatched entry points currently use.
Backend active_backend();

// Force a backend (tests, benchmarking). Throws std::runtime_error if the
// requested backend is unavailable on this host.
void set_backend(Backend b);

// out[i] = numer / (|(-i w_i) - p_plus|^2 * |(-i w_i) - p_minus|^2)
//        = numer / ((re+^2 + (w_i + im+)^2) * (re-^2 + (w_i + im-)^2)).
// This is the squared-magnitude response of a two-pole transfer function
// along the imaginary axis: conversion efficiency for complex conjugate
// poles, idler gain and noise densities for real poles.
void pole_gain_grid(const double *omega, std::size_t n,
                    std::complex<double> p_plus, std::complex<double> p_minus,
                    double numer, double *out);

// out[i] = 4 g0[i] / (1 + sign * g0[i])^2. Zero-detuning conversion
// efficiency over eta (sign = +1) or idler gain over eta (sign = -1) as a
// function of cooperativity.
void cooperativity_peak_grid(const double *g0, std::size_t n, double sign,
                             double *out);

// Reference implementations, always available.
namespace scalar
{
void pole_gain_grid(const double *omega, std::size_t n,
                    std::complex<double> p_plus, std::complex<double> p_minus,
                    double numer, double *out);
void cooperativity_peak_grid(const double *g0, std::size_t n, double sign,
                             double *out);
} // namespace scalar

namespace avx2
{
// Only callable when backend_available(Backend::Avx2); otherwise these
// symbols exist but must not be invoked.
void pole_gain_grid(const double *omega, std::size_t n,
                    std::complex<double> p_plus, std::complex<double> p_minus,
                    double numer, double *out);
void cooperativity_peak_grid(const double *g0, std::size_t n, double sign,
                             double *out);
} // namespace avx2

} // namespace eob::kernels

#endif // EOB_KERNELS_HPP
