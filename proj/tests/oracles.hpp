#pragma once

// Independent reference computations used only by the tests. None of these
// share code with the library: factorization is by trial division, sums are
// plain loops, and constants are derived here rather than read back from the
// code under test.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

inline std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n)
{
    std::vector<std::pair<std::int64_t, int>> f;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

inline int mobius(std::int64_t n)
{
    int mu = 1;
    for (auto [p, e] : factor(n)) {
        if (e > 1) return 0;
        mu = -mu;
    }
    return mu;
}

inline double vonMangoldt(std::int64_t n)
{
    if (n < 2) return 0.0;
    const auto f = factor(n);
    return f.size() == 1 ? std::log(static_cast<double>(f[0].first)) : 0.0;
}

inline int omega(std::int64_t n) { return n < 2 ? 0 : static_cast<int>(factor(n).size()); }

inline std::int64_t gcd(std::int64_t a, std::int64_t b)
{
    while (b) {
        const auto r = a % b;
        a = b;
        b = r;
    }
    return a < 0 ? -a : a;
}

inline cplx expi(double x) { return {std::cos(x), std::sin(x)}; }

/// n^{-s} from std::pow on complex numbers.
inline cplx powNeg(double n, cplx s) { return std::pow(cplx{n, 0.0}, -s); }

/// Kahan-summed sum_{n=0}^{N-1} (n + alpha)^{-s} plus the three-term
/// Euler–Maclaurin tail at N + alpha.
inline cplx hurwitzBrute(cplx s, double alpha, std::int64_t N)
{
    cplx sum{0.0, 0.0};
    cplx comp{0.0, 0.0};
    for (std::int64_t n = N - 1; n >= 0; --n) {
        const cplx term = powNeg(static_cast<double>(n) + alpha, s);
        const cplx y = term - comp;
        const cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    const double a = static_cast<double>(N) + alpha;
    const cplx tail = std::pow(cplx{a, 0.0}, 1.0 - s) / (s - 1.0) + 0.5 * powNeg(a, s) + s / 12.0 * powNeg(a, s + 1.0);
    return sum + tail;
}

/// Cohen–Rodriguez Villegas–Zagier acceleration of sum_{k>=0} (-1)^k a_k.
template <class F>
double alternatingSum(F&& a, int n)
{
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0;
    double c = -d;
    double s = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        s += c * a(k);
        b = (static_cast<double>(k + n) * static_cast<double>(k - n) * b)
            / ((static_cast<double>(k) + 0.5) * static_cast<double>(k + 1));
    }
    return s / d;
}

inline double catalan()
{
    return alternatingSum([](int k) { return 1.0 / ((2.0 * k + 1.0) * (2.0 * k + 1.0)); }, 40);
}

/// All homomorphisms of the cyclic group (Z/p)^* into C^*, from a generator g:
/// chi_j(g^k) = e(jk/(p-1)). Returns value tables indexed 0..p-1.
inline std::vector<std::vector<cplx>> cyclicCharacters(std::int64_t p, std::int64_t g)
{
    const std::int64_t n = p - 1;
    std::vector<std::int64_t> dlog(p, -1);
    std::int64_t x = 1;
    for (std::int64_t k = 0; k < n; ++k) {
        dlog[x] = k;
        x = x * g % p;
    }
    std::vector<std::vector<cplx>> out;
    for (std::int64_t j = 0; j < n; ++j) {
        std::vector<cplx> v(p, cplx{0.0, 0.0});
        for (std::int64_t a = 1; a < p; ++a)
            v[a] = expi(2.0 * std::numbers::pi * static_cast<double>(j * dlog[a] % n) / static_cast<double>(n));
        out.push_back(std::move(v));
    }
    return out;
}

/// Dense double loop over (l, m) pairs for the convolution coefficients.
inline std::vector<double> bruteConvolution(bool weighted, std::int64_t q, double U, double X)
{
    const auto N = static_cast<std::int64_t>(std::floor(static_cast<double>(q) * U * X));
    const auto lMax = static_cast<std::int64_t>(std::floor(static_cast<double>(q) * U));
    const auto mMax = static_cast<std::int64_t>(std::floor(X));
    std::vector<double> c(static_cast<std::size_t>(N) + 1, 0.0);
    for (std::int64_t l = 1; l <= lMax; ++l) {
        for (std::int64_t m = 1; m <= mMax; ++m) {
            if (l * m > N) break;
            const int mu = mobius(m);
            if (mu == 0) continue;
            const double w = weighted ? 1.0 - std::log(static_cast<double>(m)) / std::log(X) : 1.0;
            c[static_cast<std::size_t>(l * m)] += mu * w;
        }
    }
    return c;
}

} // namespace oracle
