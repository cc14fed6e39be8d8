#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <type_traits>

#include "lprog/summation.hpp"

namespace lprog {

template <class T>
struct QuadratureResult {
    T value{};
    double errorEstimate = 0.0;
    bool converged = true;
    long evaluations = 0;
};

namespace detail {

template <class T>
struct SumOf;
template <>
struct SumOf<double> {
    using type = NeumaierSum;
};
template <>
struct SumOf<std::complex<double>> {
    using type = ComplexNeumaierSum;
};

template <class F, class T>
T simpsonStep(F& f, double a, double b, T fa, T fm, T fb, double tol, int depth,
              QuadratureResult<T>& acc, T whole)
{
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const T flm = f(lm);
    const T frm = f(rm);
    acc.evaluations += 2;
    const T left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const T right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const T delta = left + right - whole;
    using std::abs;
    const double err = abs(delta) / 15.0;
    if (err <= tol || depth <= 0 || !(b - a > 0.0)) {
        if (err > tol) acc.converged = false;
        acc.errorEstimate += err;
        return left + right + delta / 15.0;
    }
    return simpsonStep(f, a, m, fa, flm, fm, 0.5 * tol, depth - 1, acc, left)
        + simpsonStep(f, m, b, fm, frm, fb, 0.5 * tol, depth - 1, acc, right);
}

} // namespace detail

/// Adaptive Simpson rule on [a, b] with Richardson correction. T may be any
/// vector-like type with +, -, scalar * and an abs() norm found by lookup.
/// The result is
/// flagged unconverged if any subinterval hits the depth cap before its share
/// of the absolute tolerance is met.
template <class F>
auto adaptiveSimpson(F&& f, double a, double b, double absTol, int maxDepth = 40)
{
    using T = std::decay_t<decltype(f(a))>;
    QuadratureResult<T> res;
    if (a == b) return res;
    const double m = 0.5 * (a + b);
    const T fa = f(a);
    const T fm = f(m);
    const T fb = f(b);
    res.evaluations = 3;
    const T whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    res.value = detail::simpsonStep(f, a, b, fa, fm, fb, absTol, maxDepth, res, whole);
    return res;
}

/// Integrates over consecutive panels [p0,p1], [p1,p2], ... where the
/// integrand may be non-smooth at panel boundaries. Each panel gets the full
/// absolute tolerance; panel results are combined in order with compensation.
template <class F>
auto integratePanels(F&& f, std::span<const double> breakpoints, double absTol, int maxDepth = 40)
{
    using T = std::decay_t<decltype(f(0.0))>;
    QuadratureResult<T> total;
    typename detail::SumOf<T>::type sum;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        auto panel = adaptiveSimpson(f, breakpoints[i], breakpoints[i + 1], absTol, maxDepth);
        sum += panel.value;
        total.errorEstimate += panel.errorEstimate;
        total.evaluations += panel.evaluations;
        total.converged = total.converged && panel.converged;
    }
    total.value = sum.value();
    return total;
}

} // namespace lprog
