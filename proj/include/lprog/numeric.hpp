#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <thread>
#include <vector>

namespace lprog {

/// ||x||: distance from x to the nearest integer. Exactly 1/2 at half-integers.
inline double nearestIntegerDistance(double x) noexcept { return std::fabs(x - std::nearbyint(x)); }

/// k * theta written as m + frac with m an integer and |frac| <= 1/2, the
/// product's rounding error recovered with an FMA so that frac is accurate to
/// a few ulp of itself rather than of k * theta.
struct ReducedTurns {
    double frac = 0.0;
    bool oddInteger = false;
};

inline ReducedTurns reduceProduct(double k, double theta) noexcept
{
    const double p = k * theta;
    const double err = std::fma(k, theta, -p);
    const double m = std::nearbyint(p);
    return {(p - m) + err, std::fmod(m, 2.0) != 0.0};
}

/// sin(pi k theta) and cos(pi k theta) with exact argument reduction.
inline double sinPiProduct(double k, double theta) noexcept
{
    const auto r = reduceProduct(k, theta);
    const double v = std::sin(M_PI * r.frac);
    return r.oddInteger ? -v : v;
}

inline double cosPiProduct(double k, double theta) noexcept
{
    const auto r = reduceProduct(k, theta);
    const double v = std::cos(M_PI * r.frac);
    return r.oddInteger ? -v : v;
}

/// Runs fn(i) for i in [0, count) across hardware threads in contiguous
/// blocks. fn must write only to slot i of its output so that results do not
/// depend on scheduling; callers reduce sequentially afterwards.
template <class F>
void parallelFor(std::size_t count, F&& fn)
{
    const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 64);
    if (workers == 1 || count < 2 * workers) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::jthread> pool;
    const std::size_t block = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * block;
        const std::size_t hi = std::min(count, lo + block);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
}

} // namespace lprog
