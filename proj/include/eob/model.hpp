#ifndef EOB_MODEL_HPP
#define EOB_MODEL_HPP

#include <complex>
#include <string>

namespace eob
{

// Which optical pump sideband drives the modulator. Red pumping gives a
// beam-splitter (frequency conversion) interaction between the optical and
// microwave modes; blue pumping a two-mode-squeezing (parametric amplifier)
// interaction.
enum class Sideband
{
    Red,
    Blue,
};

std::string to_string(Sideband sb);

// Physical description of the modulator from which the electro-optic
// coupling rate is computed. All frequencies are angular (rad/s), all
// lengths in meters, capacitance in farads.
struct DeviceGeometry
{
    double omega_a = 0.0; // optical resonance, rad/s
    double omega_b = 0.0; // microwave resonance, rad/s
    double n = 0.0;       // optical refractive index
    double r = 0.0;       // electro-optic coefficient, m/V
    double l = 0.0;       // length of the electro-optic medium, m
    double d = 0.0;       // thickness of the medium, m
    double tau = 0.0;     // optical round-trip time, s
    double C = 0.0;       // capacitance of the microwave resonator, F
};

// Dynamical description of the coupled system: traveling-field coupling
// rates, parasitic decay rates, and the complex pump product g*alpha.
// Every rate is angular (rad/s); this library never stores cyclic values.
struct SystemParams
{
    double gamma_a = 0.0;   // optical traveling-field coupling rate
    double gamma_a_p = 0.0; // optical parasitic decay rate
    double gamma_b = 0.0;   // microwave traveling-field coupling rate
    double gamma_b_p = 0.0; // microwave parasitic decay rate
    std::complex<double> g_alpha{0.0, 0.0}; // pump-coupling product

    double Gamma_a() const { return gamma_a + gamma_a_p; }
    double Gamma_b() const { return gamma_b + gamma_b_p; }
};

struct DerivedRates
{
    double Gamma_a = 0.0; // total optical decay
    double Gamma_b = 0.0; // total microwave decay
    double G0 = 0.0;      // cooperativity 4|g a|^2 / (Gamma_a Gamma_b)
    double eta = 0.0;     // intrinsic efficiency gamma_a gamma_b / (Gamma_a Gamma_b)
};

// Throw std::domain_error naming the offending field if the invariants do
// not hold (positive rates, nonnegative parasitics).
void validate(const SystemParams &p);

// Same for the device description. r == 0 is accepted (no electro-optic
// response, g = 0); every other field must be strictly positive and
// omega_a > omega_b.
void validate(const DeviceGeometry &dev);

// Electro-optic coupling rate
//   g = omega_a n^3 r l / (c tau d) * sqrt(hbar omega_b / (2 C)),
// in rad/s given angular inputs.
double coupling_coefficient(const DeviceGeometry &dev);

DerivedRates derive_rates(const SystemParams &p);

} // namespace eob

#endif // EOB_MODEL_HPP
