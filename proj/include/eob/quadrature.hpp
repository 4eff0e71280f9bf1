#ifndef EOB_QUADRATURE_HPP
#define EOB_QUADRATURE_HPP

#include <cmath>
#include <cstddef>

namespace eob
{

namespace detail
{
template <typename F>
double adaptive_simpson_step(const F &f, double a, double m, double b,
                             double fa, double fm, double fb, double whole,
                             double tol, int depth)
{
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    {
        return left + right + delta / 15.0;
    }
    return adaptive_simpson_step(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_step(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
} // namespace detail

// Adaptive Simpson quadrature of f over [a, b] with absolute tolerance tol.
template <typename F>
double adaptive_simpson(const F &f, double a, double b, double tol, int max_depth = 40)
{
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::adaptive_simpson_step(f, a, m, b, fa, fm, fb, whole, tol, max_depth);
}

} // namespace eob

#endif // EOB_QUADRATURE_HPP
