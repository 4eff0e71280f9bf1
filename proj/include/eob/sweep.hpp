#ifndef EOB_SWEEP_HPP
#define EOB_SWEEP_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace eob
{

// Tabulated result of a 1-D or 2-D parameter sweep. For two axes the grid
// is stored axis1-major (axis2 varies fastest); every value column has
// axis1.size() * max(axis2.size(), 1) entries. Overlays are curves aligned
// with axis1 only (e.g. pole trajectories drawn over an efficiency map).
struct SweepResult
{
    std::string axis1_name;
    std::vector<double> axis1;
    std::string axis2_name;           // empty for 1-D sweeps
    std::vector<double> axis2;
    std::vector<std::string> column_names;
    std::vector<std::vector<double>> columns;
    std::vector<std::pair<std::string, std::vector<double>>> overlays;

    std::size_t grid_size() const
    {
        return axis1.size() * (axis2.empty() ? 1 : axis2.size());
    }
    bool is_2d() const { return !axis2.empty(); }
};

// Format with up to 17 significant digits ("%.17g"), enough to round-trip
// a double. Used for every numeric field the tool writes.
std::string fmt_g17(double v);

// One row per grid point: axis1[,axis2],columns... with an LF-terminated
// header line. Infinities are written as "inf"/"-inf".
void write_sweep_csv(const std::string &path, const SweepResult &sweep);

// Overlay curves as their own table: axis1,overlay columns.
void write_overlay_csv(const std::string &path, const SweepResult &sweep);

// Full result (axes, columns, overlays) as a single JSON document.
void write_sweep_json(const std::string &path, const SweepResult &sweep);

std::vector<double> linspace(double lo, double hi, std::size_t n);
std::vector<double> logspace(double lo_exp10, double hi_exp10, std::size_t n);

} // namespace eob

#endif // EOB_SWEEP_HPP
