#include "eob/model.hpp"

#include "eob/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace eob
{

namespace
{
void require_positive(double v, const char *field)
{
    if (!(v > 0.0) || !std::isfinite(v))
    {
        throw std::domain_error(std::string(field) + " must be strictly positive");
    }
}

void require_nonnegative(double v, const char *field)
{
    if (!(v >= 0.0) || !std::isfinite(v))
    {
        throw std::domain_error(std::string(field) + " must be nonnegative");
    }
}
} // namespace

std::string to_string(Sideband sb)
{
    return sb == Sideband::Red ? "red" : "blue";
}

void validate(const SystemParams &p)
{
    require_positive(p.gamma_a, "gamma_a");
    require_positive(p.gamma_b, "gamma_b");
    require_nonnegative(p.gamma_a_p, "gamma_a_p");
    require_nonnegative(p.gamma_b_p, "gamma_b_p");
    if (!std::isfinite(p.g_alpha.real()) || !std::isfinite(p.g_alpha.imag()))
    {
        throw std::domain_error("g_alpha must be finite");
    }
}

void validate(const DeviceGeometry &dev)
{
    require_positive(dev.omega_a, "omega_a");
    require_positive(dev.omega_b, "omega_b");
    require_positive(dev.n, "n");
    require_nonnegative(dev.r, "r"); // r = 0 means no electro-optic response
    require_positive(dev.l, "l");
    require_positive(dev.d, "d");
    require_positive(dev.tau, "tau");
    require_positive(dev.C, "C");
    if (!(dev.omega_a > dev.omega_b))
    {
        throw std::domain_error("omega_a must exceed omega_b");
    }
}

double coupling_coefficient(const DeviceGeometry &dev)
{
    validate(dev);
    const double geometric = dev.omega_a * dev.n * dev.n * dev.n * dev.r * dev.l /
                             (constants::speed_of_light * dev.tau * dev.d);
    const double zero_point = std::sqrt(constants::hbar * dev.omega_b / (2.0 * dev.C));
    return geometric * zero_point;
}

DerivedRates derive_rates(const SystemParams &p)
{
    validate(p);
    DerivedRates out;
    out.Gamma_a = p.Gamma_a();
    out.Gamma_b = p.Gamma_b();
    const double pump = std::norm(p.g_alpha);
    out.G0 = 4.0 * pump / (out.Gamma_a * out.Gamma_b);
    out.eta = p.gamma_a * p.gamma_b / (out.Gamma_a * out.Gamma_b);
    return out;
}

} // namespace eob
