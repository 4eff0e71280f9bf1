#ifndef EOB_TIMEDOMAIN_HPP
#define EOB_TIMEDOMAIN_HPP

#include "eob/model.hpp"

#include <array>
#include <complex>
#include <string>
#include <vector>

// Independent numerical oracle for the closed-form modules: a fixed-step
// RK4 integration of the coupled-mode mean-field equations and a direct
// steady-state second-moment (Lyapunov) solver. Nothing here evaluates the
// analytic transfer functions.
namespace eob::timedomain
{

using cd = std::complex<double>;
using Mat2 = std::array<std::array<cd, 2>, 2>;

// Drift of the mode vector (a, b) for red pumping or (a, b^dag) for blue,
// plus the sqrt(gamma) couplings to the four traveling/parasitic inputs in
// the order (A, B, A', B') (conjugated microwave inputs for blue).
struct DriftMatrix
{
    Mat2 m{};
    std::array<std::array<double, 4>, 2> input_couplings{};
};

DriftMatrix drift_matrix(const SystemParams &p, Sideband sb);

// Eigenvalues from the trace/determinant quadratic of the literal matrix
// entries; agrees with the analytic pole formulas to machine precision.
std::array<cd, 2> drift_eigenvalues(const DriftMatrix &d);

enum class DrivePort
{
    A,
    B,
};

// Monochromatic classical drive at a detuning. For red pumping the
// amplitude is the traveling-field amplitude at the chosen port. For blue
// pumping with port B, the amplitude is the conjugated-field (B^dag input)
// amplitude, matching the column convention of blue::scattering_matrix.
struct DriveSpec
{
    DrivePort port = DrivePort::A;
    cd amplitude{0.0, 0.0};
    double detuning = 0.0;
};

struct Trajectory
{
    std::vector<double> t;
    std::vector<cd> a;
    std::vector<cd> b; // <b> for red, <b^dag> for blue
};

struct MeanFieldResult
{
    Trajectory trajectory; // decimated; only filled when requested
    // Steady-state output/drive amplitude ratios. With a drive on port P at
    // detuning w these equal column P of the analytic scattering matrix at
    // -i w: a_out_ratio = S_{A,P}, b_out_ratio = S_{B,P} (B_out^dag for
    // blue). Zero and meaningless for undriven runs.
    cd a_out_ratio{0.0, 0.0};
    cd b_out_ratio{0.0, 0.0};
    double residual = 0.0; // window-to-window steady-state drift estimate
    double t_final = 0.0;
    double dt = 0.0;
    bool driven = false;
};

struct IntegrationOptions
{
    double t_final = 0.0; // 0: choose from the slowest pole
    double dt = 0.0;      // 0: choose from the fastest rate
    bool store_trajectory = false;
    std::size_t max_trajectory_samples = 4096;
};

double recommended_dt(const SystemParams &p, Sideband sb, double detuning);
double recommended_t_final(const SystemParams &p, Sideband sb, double detuning);

// Fixed-step RK4 integration from (a0, b0) with an optional drive. The
// steady-state amplitude is extracted by projecting the trajectory tail
// onto exp(-i w t) over whole drive periods. Throws physics_error when the
// trajectory diverges (blue at or above threshold), std::invalid_argument
// for a dt that under-resolves the fastest scale, and convergence_error
// when the tail has not settled.
MeanFieldResult integrate_mean_field(const SystemParams &p, Sideband sb,
                                     const DriveSpec &drive, cd a0, cd b0,
                                     const IntegrationOptions &opts = {});

struct SteadyStateMoments
{
    double n_a = 0.0; // <a^dag a>
    double n_b = 0.0; // <b^dag b>
    cd cross{0.0, 0.0}; // <a^dag b> for red, <a b> for blue
};

// Steady-state normal-ordered second moments with vacuum inputs, from a
// direct Gaussian-elimination solve of the 4 real moment equations. Red is
// passive (all moments zero); blue requires G0 < 1 and yields the
// amplified occupations. Throws physics_error on an unstable drift.
SteadyStateMoments lyapunov_steady_state(const SystemParams &p, Sideband sb);

// Debug dump: t, Re a, Im a, Re b, Im b. Format is stable.
void write_trajectory_csv(const std::string &path, const Trajectory &traj);

} // namespace eob::timedomain

#endif // EOB_TIMEDOMAIN_HPP
