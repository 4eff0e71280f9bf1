#ifndef EOB_RED_HPP
#define EOB_RED_HPP

#include "eob/model.hpp"
#include "eob/sweep.hpp"

#include <array>
#include <complex>
#include <vector>

// Red-sideband pumping: the modulator behaves as a variable beam splitter
// between the traveling optical and microwave fields. Everything here is a
// closed-form function of SystemParams; the time-domain module provides the
// independent cross-check.
namespace eob::red
{

using cd = std::complex<double>;
using Mat2 = std::array<std::array<cd, 2>, 2>;

enum class Regime
{
    Overdamped, // real, distinct poles
    Critical,   // degenerate poles (within tolerance)
    RabiSplit,  // complex-conjugate pair, oscillatory response
};

std::string to_string(Regime r);

struct PoleSet
{
    cd p_plus{0.0, 0.0};
    cd p_minus{0.0, 0.0};
    Regime regime = Regime::Overdamped;
};

// Input column order of the 2x4 scattering matrix.
enum : std::size_t
{
    col_A = 0,  // optical input
    col_B = 1,  // microwave input
    col_Ap = 2, // optical parasitic (Langevin) input
    col_Bp = 3, // microwave parasitic input
};

// S(-i omega) relating (A_out, B_out) to (A, B, A', B'). Rows are
// orthonormal for every parameter set (flux/commutator conservation).
struct ScatteringMatrix
{
    std::array<std::array<cd, 4>, 2> s{};
    double omega = 0.0;
    Sideband sideband = Sideband::Red;
};

struct TransientResponse
{
    cd a_out{0.0, 0.0};
    cd b_out{0.0, 0.0};
    bool confluent = false; // degenerate poles: t exp(p t) branch was used
};

struct Efficiency
{
    double conversion = 0.0;   // R = |S_AB|^2 = |S_BA|^2
    double transmission = 0.0; // T = |S_AA|^2
};

// D(s) = (s + Gamma_a/2)(s + Gamma_b/2) + |g a|^2 = (s - p+)(s - p-).
cd denominator(const SystemParams &p, cd s);

// p+- = -(Gamma_a + Gamma_b)/4 +- sqrt(((Gamma_a - Gamma_b)/4)^2 - |g a|^2).
// Complex (RabiSplit) exactly when |g a| > |Gamma_a - Gamma_b|/4.
PoleSet poles(const SystemParams &p);

// F(s): maps the initial resonator amplitudes (a0, b0) to the transient
// part of the outputs in the Laplace domain. Throws std::domain_error if s
// coincides with a pole.
Mat2 transient_matrix(const SystemParams &p, cd s);

// Analytic inverse Laplace of F(s) (a0, b0)^T at time t >= 0, by partial
// fractions over the two poles; the confluent limit is used for degenerate
// poles and flagged in the result.
TransientResponse transient_response(const SystemParams &p, cd a0, cd b0, double t);

ScatteringMatrix scattering_matrix(const SystemParams &p, double omega);

Efficiency conversion_efficiency(const SystemParams &p, double omega);

// Pump strength |g a| that gives G0 = 1 (critical coupling).
double critical_pump(double Gamma_a, double Gamma_b);

// Axis variable for the 2-D conversion-efficiency maps. Cooperativity
// sweeps G0 at the parameter set's decay rates; LogRatio sweeps
// ln(Gamma_b/Gamma_a) at fixed sqrt(Gamma_a Gamma_b) and fixed G0.
enum class MapAxis
{
    Cooperativity,
    LogRatio,
};

struct EfficiencyMapSpec
{
    MapAxis axis = MapAxis::Cooperativity;
    std::vector<double> axis_values;
    std::vector<double> omega_norm; // Omega = 2 omega / sqrt(Gamma_a Gamma_b)
};

// R(omega)/eta over axis x Omega, with the pole imaginary parts (in Omega
// units) attached as overlay curves. Throws config_error on an empty grid.
SweepResult efficiency_map(const SystemParams &p, const EfficiencyMapSpec &spec);

} // namespace eob::red

#endif // EOB_RED_HPP
