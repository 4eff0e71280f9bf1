#ifndef EOB_ERRORS_HPP
#define EOB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eob
{

// Malformed or inconsistent user input (config files, CLI arguments,
// out-of-range grids). Maps to process exit code 1.
class config_error : public std::runtime_error
{
public:
    explicit config_error(const std::string &what) : std::runtime_error(what) {}
};

// Physically invalid request: above-threshold spectra, unstable drift,
// diverging trajectories. Maps to process exit code 2.
class physics_error : public std::runtime_error
{
public:
    explicit physics_error(const std::string &what) : std::runtime_error(what) {}
};

// Steady state could not be extracted from a time-domain run.
class convergence_error : public std::runtime_error
{
public:
    convergence_error(const std::string &what, double residual)
        : std::runtime_error(what), residual_(residual)
    {
    }

    double residual() const { return residual_; }

private:
    double residual_ = 0.0;
};

} // namespace eob

#endif // EOB_ERRORS_HPP
