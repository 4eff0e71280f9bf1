#ifndef EOB_BLUE_HPP
#define EOB_BLUE_HPP

#include "eob/model.hpp"

#include <array>
#include <complex>
#include <vector>

// Blue-sideband pumping: nondegenerate parametric amplification between the
// optical field and the conjugated microwave field. Spectral quantities are
// defined below threshold only (G0 < 1); above threshold the operations
// throw physics_error, with the exception of the pole locus.
namespace eob::blue
{

using cd = std::complex<double>;

struct BluePoleSet
{
    double pi_plus = 0.0;  // slow pole, crosses 0 at threshold
    double pi_minus = 0.0; // fast pole
    bool above_threshold = false;
};

// 2x4 Bogoliubov matrix relating (A_out(w), B_out^dag(-w)) to
// (A(w), B^dag(-w), A'(w), B'^dag(-w)). Satisfies the symplectic identity
// S J_in S^dag = J_out with J_in = diag(+1,-1,+1,-1), J_out = diag(+1,-1).
struct BogoliubovMatrix
{
    std::array<std::array<cd, 4>, 2> s{};
    double omega = 0.0;
    Sideband sideband = Sideband::Blue;
};

struct NoiseSpectra
{
    double pair_gain = 0.0;     // R(w): idler gain / pair rate per Hz
    double accidental_a = 0.0;  // R'_A(w) = |S_AB'|^2
    double accidental_b = 0.0;  // R'_B(w) = |S_BA'|^2
    cd cross_correlation{0.0, 0.0}; // K(w), phase-sensitive covariance density
};

struct Nonclassicality
{
    double value = 0.0;
    bool diverged = false; // pair gain was zero; value is +infinity
};

// Two-mode pair-generation summary over a detuning grid. The amplitude
// column holds S_AB(-i w); a pair at +w on the optical side is matched at
// -w on the microwave side.
struct PairStateSummary
{
    std::vector<double> omega;
    std::vector<cd> pair_amplitude;
    std::vector<double> pair_rate_density; // R(w)
    std::vector<double> accidental_a;      // R'_A(w)
    std::vector<double> accidental_b;      // R'_B(w)
    double heralding_efficiency_b = 0.0;   // gamma_b / Gamma_b
    bool perturbative = true;
};

// Script-D(s) = (s + Gamma_a/2)(s + Gamma_b/2) - |g a|^2 = (s - pi+)(s - pi-).
cd denominator(const SystemParams &p, cd s);

// pi+- = -(Gamma_a + Gamma_b)/4 +- sqrt(((Gamma_a - Gamma_b)/4)^2 + |g a|^2).
// Always real; pi+ >= 0 exactly when G0 >= 1 (parametric oscillation
// threshold).
BluePoleSet poles(const SystemParams &p);

BogoliubovMatrix scattering_matrix(const SystemParams &p, double omega);

// R(w) = |g a|^2 gamma_a gamma_b / ((w^2 + pi+^2)(w^2 + pi-^2));
// R(0) = 4 eta G0 / (1 - G0)^2.
double idler_gain(const SystemParams &p, double omega);

NoiseSpectra noise_spectra(const SystemParams &p, double omega);

// Lambda(w) = ln(1 + eta / R(w)); at zero detuning ln((1+G0)^2 / (4 G0)),
// independent of eta. Reported as +infinity (flagged) when g a = 0.
Nonclassicality nonclassicality(const SystemParams &p, double omega);

// Perturbative pair-state quantities over a detuning grid. Requires
// G0 < 1; sets perturbative = false when G0 exceeds the given threshold.
PairStateSummary pair_state(const SystemParams &p, const std::vector<double> &omega_grid,
                            double perturbative_threshold = 0.01);

} // namespace eob::blue

#endif // EOB_BLUE_HPP
