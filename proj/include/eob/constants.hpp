#ifndef EOB_CONSTANTS_HPP
#define EOB_CONSTANTS_HPP

namespace eob::constants
{

// CODATA 2018.
inline constexpr double hbar = 1.054571817e-34;      // reduced Planck constant, J s
inline constexpr double speed_of_light = 299792458.0; // m/s (exact)

inline constexpr double two_pi = 6.283185307179586476925286766559;

} // namespace eob::constants

#endif // EOB_CONSTANTS_HPP
